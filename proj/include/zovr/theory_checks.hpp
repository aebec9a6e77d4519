#ifndef ZOVR_THEORY_CHECKS_HPP
#define ZOVR_THEORY_CHECKS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "zovr/estimators.hpp"
#include "zovr/optimizers.hpp"
#include "zovr/problem.hpp"
#include "zovr/rng.hpp"

namespace zovr {

//! Closed-form parameter schedule and rate constants for ZPDVR on a given
//! problem. All quantities are functions of (n, d, L, mu, v) only.
struct TheorySchedule {
  double eta = 0.0;          // 1 / ((40 d + 63) L)
  double alpha = 0.0;        // 8 n (d+2) (2d+3) eta^2
  double beta = 0.0;         // 8 n (2d+3) eta^2
  double p = 0.0;            // 1 / n
  double theta = 0.0;        // 1 / (kappa (80d+126) + 4 n (d+2))
  double delta_floor = 0.0;  // additive per-step term of the potential recursion
  double sigma = 0.0;        // asymptotic potential bound scale
  double contraction = 0.0;  // max{1 - 1/(kappa(80d+126)), 1 - 1/(4n(d+2))}
  double v = 0.0;
  int n = 0;
  int d = 0;
};

TheorySchedule theoretical_schedule(const CompositeProblem& prob, double v);

//! The three-term potential: iterate error, learner error, and snapshot
//! gradient error (oracle-only diagnostic; needs analytic gradients).
struct LyapunovSnapshot {
  double term_x = 0.0;  // ||x - x*||^2
  double term_h = 0.0;  // alpha ||h~ - grad f(x*)||^2
  double term_w = 0.0;  // (beta/n) sum_i ||grad f_i(w) - grad f_i(x*)||^2
  double psi = 0.0;
};

LyapunovSnapshot lyapunov(const CompositeProblem& prob, const Vec& x,
                          const Vec& h_tilde, const Vec& w, const Vec& x_star,
                          const std::vector<Vec>& grad_star_components,
                          const TheorySchedule& schedule);

//! Machine-readable outcome of one Monte-Carlo validator.
struct McReport {
  std::string check;
  bool pass = false;
  double measured = 0.0;
  double bound_lo = 0.0;
  double bound_hi = 0.0;
  double target = 0.0;  // exact value when one exists, else midpoint/bound
  double stderr_ = 0.0;
  std::int64_t draws = 0;
};

//! Sample mean of ||u||^q against the Gaussian moment envelope
//! (upper d^{q/2} for q in [0,2]; [d^{q/2}, (q+d)^{q/2}] for q >= 2),
//! widened by 3 stderr.
McReport mc_moment_check(int d, double q, std::int64_t draws, SeededRng rng);

//! Sample mean of ||u u'vec||^2 against (d+2)||vec||^2, within 2% at the
//! documented draw count of 1e6.
McReport mc_projection_identity(int d, const Vec& vec, std::int64_t draws,
                                SeededRng rng);

//! Near-unbiasedness of the variance-reduced estimate g_k: the mean over
//! independent (u, u_k, i) draws must stay within
//! L v (d+3)^{3/2} + 3 stderr of grad f(x).
McReport mc_gk_bias_check(const CompositeProblem& prob, const Vec& x,
                          const Vec& w, const Vec& h_tilde,
                          const SmoothingConfig& cfg, std::int64_t draws,
                          SeededRng rng);

//! Windowed geometric-decay check of the seed-averaged potential under the
//! theoretical schedule.
struct TrendReport {
  bool pass = false;
  int windows_checked = 0;
  int windows_failed = 0;
  std::uint64_t window = 0;       // T = ceil(1/theta)
  double gate = 0.0;              // 10 * delta_floor
  double floor_tail_mean = 0.0;   // mean of psi_bar over the last fifth
  double psi0 = 0.0;
  std::vector<double> psi_bar;    // per-iteration seed average, length horizon+1
};

TrendReport lyapunov_trend_check(const CompositeProblem& prob,
                                 const TheorySchedule& schedule,
                                 const Reference& ref, int seeds, int horizon,
                                 SeededRng seeder, const Vec& x0,
                                 const Vec& h0 = {});

}  // namespace zovr

#endif  // ZOVR_THEORY_CHECKS_HPP
