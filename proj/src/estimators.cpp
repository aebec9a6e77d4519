#include "zovr/estimators.hpp"

#include <stdexcept>

namespace zovr {

namespace {

void check_smoothing(double v) {
  if (!(v > 0.0)) throw std::invalid_argument("smoothing constant must be > 0");
}

void check_dims(const CompositeProblem& prob, const Vec& x, const Vec& u) {
  if (static_cast<int>(x.size()) != prob.dim() ||
      static_cast<int>(u.size()) != prob.dim()) {
    throw std::invalid_argument("estimator: dimension mismatch");
  }
}

}  // namespace

Vec dir_estimate_component(const CompositeProblem& prob, int i, const Vec& x,
                           const Vec& u, const SmoothingConfig& cfg,
                           SzoCounter& counter) {
  check_smoothing(cfg.v);
  check_dims(prob, x, u);
  Vec shifted = x;
  axpy(cfg.v, u, shifted);
  const EvalPoint base = EvalPoint::of(x);
  const EvalPoint moved = EvalPoint::of(shifted);
  const double coef =
      (prob.eval_component(i, moved, counter) - prob.eval_component(i, base, counter)) /
      cfg.v;
  Vec out = u;
  scale(coef, out);
  return out;
}

Vec dir_estimate_full(const CompositeProblem& prob, const Vec& x, const Vec& u,
                      const SmoothingConfig& cfg, SzoCounter& counter) {
  check_smoothing(cfg.v);
  check_dims(prob, x, u);
  Vec shifted = x;
  axpy(cfg.v, u, shifted);
  const EvalPoint base = EvalPoint::of(x);
  const EvalPoint moved = EvalPoint::of(shifted);
  double coef = 0.0;
  for (int i = 0; i < prob.num_components(); ++i) {
    coef += prob.eval_component(i, moved, counter) -
            prob.eval_component(i, base, counter);
  }
  coef /= cfg.v * static_cast<double>(prob.num_components());
  Vec out = u;
  scale(coef, out);
  return out;
}

Vec coord_fd_gradient(const CompositeProblem& prob, const Vec& x, double v,
                      SzoCounter& counter) {
  check_smoothing(v);
  if (static_cast<int>(x.size()) != prob.dim()) {
    throw std::invalid_argument("coord_fd_gradient: dimension mismatch");
  }
  const int n = prob.num_components();
  const int d = prob.dim();
  const EvalPoint base = EvalPoint::of(x);
  Vec shifted = x;
  Vec grad(static_cast<std::size_t>(d), 0.0);
  for (int i = 0; i < n; ++i) {
    const double f0 = prob.eval_component(i, base, counter);
    for (int l = 0; l < d; ++l) {
      const std::size_t jl = static_cast<std::size_t>(l);
      const double xl = x[jl];
      shifted[jl] = xl + v;
      // ||x + v e_l||^2 = ||x||^2 + 2 v x_l + v^2
      const EvalPoint moved{&shifted, base.x_sq_norm + 2.0 * v * xl + v * v};
      grad[jl] += (prob.eval_component(i, moved, counter) - f0) / v;
      shifted[jl] = xl;
    }
  }
  scale(1.0 / static_cast<double>(n), grad);
  return grad;
}

Vec batched_dir_estimate(const CompositeProblem& prob,
                         std::span<const int> samples, const Vec& x,
                         std::span<const Vec> dirs, const SmoothingConfig& cfg,
                         SzoCounter& counter) {
  check_smoothing(cfg.v);
  if (samples.empty() || dirs.empty()) {
    throw std::invalid_argument("batched_dir_estimate: empty batch");
  }
  const EvalPoint base = EvalPoint::of(x);
  Vec shifted(x.size());
  Vec out(x.size(), 0.0);
  const double denom =
      cfg.v * static_cast<double>(samples.size()) * static_cast<double>(dirs.size());
  for (const Vec& u : dirs) {
    check_dims(prob, x, u);
    shifted = x;
    axpy(cfg.v, u, shifted);
    const EvalPoint moved = EvalPoint::of(shifted);
    double coef = 0.0;
    for (int i : samples) {
      coef += prob.eval_component(i, moved, counter) -
              prob.eval_component(i, base, counter);
    }
    axpy(coef / denom, u, out);
  }
  return out;
}

}  // namespace zovr
