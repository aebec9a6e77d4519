#include "zovr/quadratic_problem.hpp"

#include <algorithm>
#include <stdexcept>

namespace zovr {

namespace {

double diag_max(const std::vector<double>& diag) {
  return *std::max_element(diag.begin(), diag.end());
}

double diag_min(const std::vector<double>& diag) {
  return *std::min_element(diag.begin(), diag.end());
}

}  // namespace

QuadraticLassoProblem::QuadraticLassoProblem(int n, int d,
                                             std::vector<double> diag,
                                             std::vector<double> b,
                                             std::vector<double> constants,
                                             double lambda1)
    : CompositeProblem(n, d, diag.empty() ? 0.0 : diag_max(diag),
                       diag.empty() ? 0.0 : diag_min(diag), lambda1),
      diag_(std::move(diag)),
      b_(std::move(b)),
      constants_(std::move(constants)) {
  const std::size_t nd = static_cast<std::size_t>(n) * static_cast<std::size_t>(d);
  if (diag_.size() != nd || b_.size() != nd) {
    throw std::invalid_argument("QuadraticLassoProblem: diag/b must be n*d");
  }
  if (constants_.empty()) {
    constants_.assign(static_cast<std::size_t>(n), 0.0);
  } else if (constants_.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("QuadraticLassoProblem: constants must have n entries");
  }
}

double QuadraticLassoProblem::eval_impl(int i, const EvalPoint& p) const {
  const Vec& x = *p.x;
  const std::size_t base = static_cast<std::size_t>(i) * x.size();
  double s = 0.0;
  for (std::size_t j = 0; j < x.size(); ++j) {
    s += 0.5 * diag_[base + j] * x[j] * x[j] - b_[base + j] * x[j];
  }
  return s + constants_[static_cast<std::size_t>(i)];
}

void QuadraticLassoProblem::analytic_component_grad(int i, const Vec& x,
                                                    Vec& out) const {
  check_component(i);
  out.resize(x.size());
  const std::size_t base = static_cast<std::size_t>(i) * x.size();
  for (std::size_t j = 0; j < x.size(); ++j) {
    out[j] = diag_[base + j] * x[j] - b_[base + j];
  }
}

Vec QuadraticLassoProblem::mean_diag() const {
  const std::size_t d = static_cast<std::size_t>(dim());
  Vec out(d, 0.0);
  for (int i = 0; i < num_components(); ++i) {
    const std::size_t base = static_cast<std::size_t>(i) * d;
    for (std::size_t j = 0; j < d; ++j) out[j] += diag_[base + j];
  }
  scale(1.0 / num_components(), out);
  return out;
}

Vec QuadraticLassoProblem::mean_b() const {
  const std::size_t d = static_cast<std::size_t>(dim());
  Vec out(d, 0.0);
  for (int i = 0; i < num_components(); ++i) {
    const std::size_t base = static_cast<std::size_t>(i) * d;
    for (std::size_t j = 0; j < d; ++j) out[j] += b_[base + j];
  }
  scale(1.0 / num_components(), out);
  return out;
}

}  // namespace zovr
