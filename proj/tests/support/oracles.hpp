#ifndef ZOVR_TESTS_SUPPORT_ORACLES_HPP
#define ZOVR_TESTS_SUPPORT_ORACLES_HPP

// Test-only reference computations, kept independent of the library's
// estimator and solver paths.

#include <cmath>
#include <vector>

#include "zovr/problem.hpp"
#include "zovr/quadratic_problem.hpp"
#include "zovr/vec.hpp"

namespace zovr_test {

//! Central-difference gradient of one component (brute force, 2d evals).
inline zovr::Vec central_diff_component_grad(const zovr::CompositeProblem& prob,
                                             int i, const zovr::Vec& x,
                                             double h = 1e-6) {
  zovr::SzoCounter scratch;
  zovr::Vec grad(x.size());
  zovr::Vec pt = x;
  for (std::size_t j = 0; j < x.size(); ++j) {
    const double xj = x[j];
    pt[j] = xj + h;
    const double fp = prob.eval_component(i, pt, scratch);
    pt[j] = xj - h;
    const double fm = prob.eval_component(i, pt, scratch);
    pt[j] = xj;
    grad[j] = (fp - fm) / (2.0 * h);
  }
  return grad;
}

//! Closed-form minimizer of the averaged diagonal quadratic plus L1:
//! per coordinate, argmin 1/2 a x^2 - b x + lambda1 |x| = S_{lambda1}(b)/a.
inline zovr::Vec solve_mean_quadratic(const zovr::QuadraticLassoProblem& prob) {
  const zovr::Vec a = prob.mean_diag();
  const zovr::Vec b = prob.mean_b();
  zovr::Vec x(a.size());
  const double l1 = prob.l1_weight();
  for (std::size_t j = 0; j < a.size(); ++j) {
    double num = 0.0;
    if (b[j] > l1) {
      num = b[j] - l1;
    } else if (b[j] < -l1) {
      num = b[j] + l1;
    }
    x[j] = num / a[j];
  }
  return x;
}

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

inline LineFit fit_line(const std::vector<double>& xs,
                        const std::vector<double>& ys) {
  const double n = static_cast<double>(xs.size());
  double sx = 0.0;
  double sy = 0.0;
  double sxx = 0.0;
  double sxy = 0.0;
  double syy = 0.0;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    sx += xs[k];
    sy += ys[k];
    sxx += xs[k] * xs[k];
    sxy += xs[k] * ys[k];
    syy += ys[k] * ys[k];
  }
  LineFit fit;
  const double cov = sxy - sx * sy / n;
  const double var_x = sxx - sx * sx / n;
  const double var_y = syy - sy * sy / n;
  fit.slope = cov / var_x;
  fit.intercept = (sy - fit.slope * sx) / n;
  fit.r_squared = var_y > 0.0 ? cov * cov / (var_x * var_y) : 1.0;
  return fit;
}

}  // namespace zovr_test

#endif  // ZOVR_TESTS_SUPPORT_ORACLES_HPP
