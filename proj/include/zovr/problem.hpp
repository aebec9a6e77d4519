#ifndef ZOVR_PROBLEM_HPP
#define ZOVR_PROBLEM_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include "zovr/vec.hpp"

namespace zovr {

//! Counts single-component function evaluations, the cost unit of every
//! experiment. Incremented by exactly one per metered component call.
//! Confined to one task; concurrent runs each own their counter.
class SzoCounter {
 public:
  void add(std::uint64_t k = 1) { count_ += k; }
  std::uint64_t count() const { return count_; }

 private:
  std::uint64_t count_ = 0;
};

struct UnavailableGradientError : std::logic_error {
  UnavailableGradientError()
      : std::logic_error("analytic gradient not available for this problem") {}
};

//! A point together with its squared norm. The norm is a property of the
//! point, computed once and shared by every component evaluated there;
//! callers shifting a single coordinate can update it in O(1).
struct EvalPoint {
  const Vec* x;
  double x_sq_norm;

  static EvalPoint of(const Vec& v) { return EvalPoint{&v, sq_norm(v)}; }
};

//! Composite objective F = (1/n) sum_i f_i + lambda1 ||.||_1 with each f_i
//! mu-strongly convex and L-smooth. Immutable after construction and
//! shareable across tasks.
class CompositeProblem {
 public:
  virtual ~CompositeProblem() = default;

  int num_components() const { return n_; }
  int dim() const { return d_; }
  double smoothness() const { return smoothness_; }
  double strong_convexity() const { return strong_convexity_; }
  double l1_weight() const { return lambda1_; }
  double condition_number() const { return smoothness_ / strong_convexity_; }

  //! f_i at a point; bills exactly one SZO.
  double eval_component(int i, const EvalPoint& p, SzoCounter& counter) const {
    check_component(i);
    if (static_cast<int>(p.x->size()) != d_) {
      throw std::invalid_argument("eval_component: dimension mismatch");
    }
    counter.add(1);
    return eval_impl(i, p);
  }

  double eval_component(int i, const Vec& x, SzoCounter& counter) const {
    return eval_component(i, EvalPoint::of(x), counter);
  }

  //! F(x), reporting-only: never touches an SzoCounter.
  double full_objective(const Vec& x) const {
    return smooth_part(x) + lambda1_ * l1_norm(x);
  }

  //! f(x) = (1/n) sum_i f_i(x), unmetered, fixed accumulation order.
  double smooth_part(const Vec& x) const {
    if (static_cast<int>(x.size()) != d_) {
      throw std::invalid_argument("smooth_part: dimension mismatch");
    }
    const EvalPoint p = EvalPoint::of(x);
    double s = 0.0;
    for (int i = 0; i < n_; ++i) s += eval_impl(i, p);
    return s / static_cast<double>(n_);
  }

  double psi(const Vec& x) const { return lambda1_ * l1_norm(x); }

  virtual bool has_analytic_grad() const { return false; }

  //! Exact grad f_i, oracle for tests and reference solves only; never
  //! billed to a counter and never used by the zeroth-order paths.
  virtual void analytic_component_grad(int i, const Vec& x, Vec& out) const {
    (void)i;
    (void)x;
    (void)out;
    throw UnavailableGradientError();
  }

  Vec analytic_component_grad(int i, const Vec& x) const {
    Vec out(static_cast<std::size_t>(d_));
    analytic_component_grad(i, x, out);
    return out;
  }

  void analytic_full_grad(const Vec& x, Vec& out) const {
    if (!has_analytic_grad()) throw UnavailableGradientError();
    out.assign(static_cast<std::size_t>(d_), 0.0);
    Vec g(static_cast<std::size_t>(d_));
    for (int i = 0; i < n_; ++i) {
      analytic_component_grad(i, x, g);
      axpy(1.0, g, out);
    }
    scale(1.0 / static_cast<double>(n_), out);
  }

  Vec analytic_full_grad(const Vec& x) const {
    Vec out;
    analytic_full_grad(x, out);
    return out;
  }

 protected:
  CompositeProblem(int n, int d, double smoothness, double strong_convexity,
                   double lambda1)
      : n_(n),
        d_(d),
        smoothness_(smoothness),
        strong_convexity_(strong_convexity),
        lambda1_(lambda1) {
    if (n < 1) throw std::invalid_argument("CompositeProblem: n must be >= 1");
    if (d < 1) throw std::invalid_argument("CompositeProblem: d must be >= 1");
    if (!(strong_convexity > 0.0) || !(strong_convexity <= smoothness)) {
      throw std::invalid_argument("CompositeProblem: need 0 < mu <= L");
    }
    if (lambda1 < 0.0) {
      throw std::invalid_argument("CompositeProblem: lambda1 must be >= 0");
    }
  }

  void check_component(int i) const {
    if (i < 0 || i >= n_) {
      throw std::out_of_range("component index " + std::to_string(i) +
                              " out of range [0, " + std::to_string(n_) + ")");
    }
  }

  virtual double eval_impl(int i, const EvalPoint& p) const = 0;

 private:
  int n_;
  int d_;
  double smoothness_;
  double strong_convexity_;
  double lambda1_;
};

//! argmin_x' psi(x') + (1/(2 eta)) ||x' - x||^2; soft-thresholding at
//! level eta * lambda1 for the L1 penalty.
inline void prox_step_inplace(const CompositeProblem& prob, Vec& x, double eta) {
  if (!(eta > 0.0)) throw std::invalid_argument("prox_step: eta must be > 0");
  soft_threshold_inplace(x, eta * prob.l1_weight());
}

inline Vec prox_step(const CompositeProblem& prob, const Vec& x, double eta) {
  Vec out = x;
  prox_step_inplace(prob, out, eta);
  return out;
}

}  // namespace zovr

#endif  // ZOVR_PROBLEM_HPP
