#include "zovr/logistic_problem.hpp"

#include <cmath>
#include <stdexcept>

namespace zovr {

namespace {

double max_row_sq_norm(const std::vector<SparseRow>& rows) {
  double m = 0.0;
  for (const SparseRow& r : rows) {
    const double s = sq_norm(r);
    if (s > m) m = s;
  }
  return m;
}

int check_dim(const std::vector<SparseRow>& rows) {
  if (rows.empty()) throw std::invalid_argument("LogisticProblem: no rows");
  const int d = rows.front().dim;
  for (const SparseRow& r : rows) {
    r.validate();
    if (r.dim != d) throw std::invalid_argument("LogisticProblem: mixed row dims");
  }
  return d;
}

}  // namespace

LogisticProblem::LogisticProblem(const std::vector<SparseRow>& rows,
                                 const std::vector<int>& labels, double lambda1,
                                 double lambda2)
    : CompositeProblem(static_cast<int>(rows.size()), check_dim(rows),
                       max_row_sq_norm(rows) / 4.0 + lambda2, lambda2, lambda1),
      labels_(labels),
      lambda2_(lambda2) {
  if (labels.size() != rows.size()) {
    throw std::invalid_argument("LogisticProblem: labels/rows size mismatch");
  }
  for (int y : labels) {
    if (y != 1 && y != -1) {
      throw std::invalid_argument("LogisticProblem: labels must be +-1");
    }
  }
  offsets_.reserve(rows.size() + 1);
  offsets_.push_back(0);
  for (const SparseRow& r : rows) {
    cols_.insert(cols_.end(), r.indices.begin(), r.indices.end());
    vals_.insert(vals_.end(), r.values.begin(), r.values.end());
    offsets_.push_back(cols_.size());
  }
}

double LogisticProblem::margin(int i, const Vec& x) const {
  double t = 0.0;
  const std::size_t lo = offsets_[static_cast<std::size_t>(i)];
  const std::size_t hi = offsets_[static_cast<std::size_t>(i) + 1];
  for (std::size_t k = lo; k < hi; ++k) {
    t += vals_[k] * x[static_cast<std::size_t>(cols_[k])];
  }
  return static_cast<double>(labels_[static_cast<std::size_t>(i)]) * t;
}

double LogisticProblem::eval_impl(int i, const EvalPoint& p) const {
  const double t = margin(i, *p.x);
  // log(1 + exp(-t)) = log1p(exp(-|t|)) + max(-t, 0), overflow-safe.
  const double loss = std::log1p(std::exp(-std::fabs(t))) + (t < 0.0 ? -t : 0.0);
  return loss + 0.5 * lambda2_ * p.x_sq_norm;
}

void LogisticProblem::analytic_component_grad(int i, const Vec& x,
                                              Vec& out) const {
  check_component(i);
  if (x.size() != out.size() || static_cast<int>(x.size()) != dim()) {
    out.assign(static_cast<std::size_t>(dim()), 0.0);
  }
  const double t = margin(i, x);
  // d/dx log(1 + exp(-t)) = -y * sigma(-t) * z_i with sigma(s) = 1/(1+e^-s).
  const double sig = 1.0 / (1.0 + std::exp(t));
  const double coef = -static_cast<double>(labels_[static_cast<std::size_t>(i)]) * sig;
  for (std::size_t j = 0; j < x.size(); ++j) out[j] = lambda2_ * x[j];
  const std::size_t lo = offsets_[static_cast<std::size_t>(i)];
  const std::size_t hi = offsets_[static_cast<std::size_t>(i) + 1];
  for (std::size_t k = lo; k < hi; ++k) {
    out[static_cast<std::size_t>(cols_[k])] += coef * vals_[k];
  }
}

}  // namespace zovr
