#ifndef ZOVR_ESTIMATORS_HPP
#define ZOVR_ESTIMATORS_HPP

#include <span>

#include "zovr/problem.hpp"
#include "zovr/vec.hpp"

namespace zovr {

struct SmoothingConfig {
  double v = 1e-3;       // smoothing constant, same units as x
  int batch_dirs = 1;    // directions averaged per estimate
  int batch_samples = 1; // components averaged per estimate

  void validate() const {
    if (!(v > 0.0)) throw std::invalid_argument("SmoothingConfig: v must be > 0");
    if (batch_dirs < 1 || batch_samples < 1) {
      throw std::invalid_argument("SmoothingConfig: batch sizes must be >= 1");
    }
  }
};

//! Forward-difference directional estimate of one component,
//!   ((f_i(x + v u) - f_i(x)) / v) u.
//! Costs exactly 2 SZO.
Vec dir_estimate_component(const CompositeProblem& prob, int i, const Vec& x,
                           const Vec& u, const SmoothingConfig& cfg,
                           SzoCounter& counter);

//! Directional estimate of the full average, one pass over all components.
//! Costs exactly 2n SZO.
Vec dir_estimate_full(const CompositeProblem& prob, const Vec& x, const Vec& u,
                      const SmoothingConfig& cfg, SzoCounter& counter);

//! Forward-difference full gradient along the coordinate axes. The base
//! value f_i(x) is evaluated once per component and reused across all d
//! shifts, so the cost is exactly n(d+1) SZO.
Vec coord_fd_gradient(const CompositeProblem& prob, const Vec& x, double v,
                      SzoCounter& counter);

//! Average of dir_estimate_component over every (sample, direction) pair.
//! Costs exactly 2 |samples| |dirs| SZO; base values are not cached
//! across pairs.
Vec batched_dir_estimate(const CompositeProblem& prob,
                         std::span<const int> samples, const Vec& x,
                         std::span<const Vec> dirs, const SmoothingConfig& cfg,
                         SzoCounter& counter);

}  // namespace zovr

#endif  // ZOVR_ESTIMATORS_HPP
