#ifndef ZOVR_OPTIMIZERS_HPP
#define ZOVR_OPTIMIZERS_HPP

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "zovr/estimators.hpp"
#include "zovr/gradient_learner.hpp"
#include "zovr/problem.hpp"
#include "zovr/rng.hpp"

namespace zovr {

enum class Algorithm { kZpdvr, kZpsvrg, kSega, kPgd };

std::string algorithm_name(Algorithm a);
Algorithm algorithm_from_name(const std::string& name);

enum class RefreshMode { kBernoulli, kPeriodic };

struct HistorySample {
  std::uint64_t iter = 0;
  std::uint64_t szo = 0;
  double objective = 0.0;
  double residual = 0.0;
};

struct RunHistory {
  std::vector<HistorySample> samples;
  Vec final_x;
};

//! Precomputed optimum used for residual reporting.
struct Reference {
  Vec x_star;
  double f_star = 0.0;
  double tol = 1e-10;
};

struct ReferenceQualityError : std::runtime_error {
  explicit ReferenceQualityError(double residual)
      : std::runtime_error("residual " + std::to_string(residual) +
                           " below -10x reference tolerance; reference solve is suspect") {}
};

struct DivergenceError : std::runtime_error {
  DivergenceError() : std::runtime_error("iterate left the finite range (divergent step size?)") {}
};

struct RecordOptions {
  std::uint64_t sample_every = 1000;
  double stop_below_residual = -std::numeric_limits<double>::infinity();
};

// ---------------------------------------------------------------------------
// ZPDVR
// ---------------------------------------------------------------------------

struct ZpdvrConfig {
  double eta = 0.0;
  double p = 0.0;  // reference refresh probability, (0, 1]
  RefreshMode refresh_mode = RefreshMode::kBernoulli;
  std::uint64_t refresh_period = 0;  // iterations, periodic mode
  SmoothingConfig smoothing;
  // Directions averaged in the reference gradient and learner updates.
  // 1 is the canonical single-saved-direction scheme (2n SZO per full
  // pass); larger values average that correction over several saved
  // directions (2nR SZO), which tames the reuse of one sketch across a
  // whole refresh phase when the step size is aggressive.
  int refresh_dirs = 1;
  std::uint64_t max_szo = 0;
  std::uint64_t seed = 0;

  void validate(int n) const;
};

//! Loopless double variance reduction: one instance owns its state and
//! RNG stream and is confined to a single task.
class ZpdvrOptimizer {
 public:
  //! h0 empty means the zero initialization of the learner.
  ZpdvrOptimizer(const CompositeProblem& prob, const ZpdvrConfig& cfg, Vec x0,
                 Vec h0 = {});

  //! One full iteration. Returns false (and does nothing) if the worst-case
  //! cost of this step no longer fits the SZO budget.
  bool step(SzoCounter& counter);

  std::uint64_t worst_case_step_szo() const;

  const Vec& x() const { return x_; }
  const Vec& w() const { return w_; }
  const Vec& ref_grad() const { return ref_grad_; }
  const GradientLearner& learner() const { return learner_; }
  std::uint64_t iters() const { return k_; }

  struct StepInfo {
    bool refreshed = false;
    bool promoted = false;
    std::uint64_t szo_delta = 0;
  };
  const StepInfo& last_step() const { return info_; }

 private:
  void draw_pairs();
  void accumulate_gk(SzoCounter& counter);
  void refresh_reference(SzoCounter& counter);
  void update_learner(SzoCounter& counter);

  const CompositeProblem& prob_;
  ZpdvrConfig cfg_;
  SeededRng rng_;
  Vec x_;
  Vec w_;
  GradientLearner learner_;
  Vec ref_grad_;
  Vec g_;
  Vec x_prev_;
  Vec shifted_x_;
  Vec shifted_w_;
  std::vector<Vec> dirs_;
  std::vector<int> samples_;
  std::vector<Vec> saved_dirs_;  // refresh_dirs > 1 only
  std::uint64_t k_ = 0;
  bool refresh_due_ = true;
  StepInfo info_;
};

// ---------------------------------------------------------------------------
// Baselines
// ---------------------------------------------------------------------------

struct ZpsvrgConfig {
  double eta = 0.0;
  int inner_m = 0;
  SmoothingConfig smoothing;
  std::uint64_t max_szo = 0;
  std::uint64_t seed = 0;
};

//! Double-loop proximal SVRG on directional estimates; keeps the
//! coordinate-wise variance (no gradient learner).
class ZpsvrgOptimizer {
 public:
  ZpsvrgOptimizer(const CompositeProblem& prob, const ZpsvrgConfig& cfg, Vec x0);
  bool step(SzoCounter& counter);
  std::uint64_t worst_case_step_szo() const;
  const Vec& x() const { return x_; }
  const Vec& w() const { return w_; }
  const Vec& mu_hat() const { return mu_hat_; }
  std::uint64_t iters() const { return k_; }
  std::uint64_t last_delta() const { return last_delta_; }

 private:
  const CompositeProblem& prob_;
  ZpsvrgConfig cfg_;
  SeededRng rng_;
  Vec x_;
  Vec w_;
  Vec mu_hat_;
  Vec g_;
  Vec shifted_x_;
  Vec shifted_w_;
  std::vector<Vec> dirs_;
  std::vector<int> samples_;
  int inner_done_ = 0;
  std::uint64_t k_ = 0;
  std::uint64_t last_delta_ = 0;
};

struct SegaConfig {
  double eta = 0.0;
  SmoothingConfig smoothing;
  std::uint64_t max_szo = 0;
  std::uint64_t seed = 0;
};

//! Sketch-and-project gradient learner driven by full directional
//! estimates, one direction per iteration.
class SegaOptimizer {
 public:
  SegaOptimizer(const CompositeProblem& prob, const SegaConfig& cfg, Vec x0);
  bool step(SzoCounter& counter);
  std::uint64_t worst_case_step_szo() const;
  const Vec& x() const { return x_; }
  const Vec& h() const { return h_; }
  std::uint64_t iters() const { return k_; }
  std::uint64_t last_delta() const { return last_delta_; }

 private:
  const CompositeProblem& prob_;
  SegaConfig cfg_;
  SeededRng rng_;
  Vec x_;
  Vec h_;
  Vec u_;
  std::uint64_t k_ = 0;
  std::uint64_t last_delta_ = 0;
};

struct PgdConfig {
  double eta = 0.0;
  double v = 1e-3;
  std::uint64_t max_szo = 0;
  std::uint64_t seed = 0;  // unused, kept for a uniform surface
};

//! Proximal gradient descent on the coordinate finite-difference gradient.
class PgdOptimizer {
 public:
  PgdOptimizer(const CompositeProblem& prob, const PgdConfig& cfg, Vec x0);
  bool step(SzoCounter& counter);
  std::uint64_t worst_case_step_szo() const;
  const Vec& x() const { return x_; }
  std::uint64_t iters() const { return k_; }
  std::uint64_t last_delta() const { return last_delta_; }

 private:
  const CompositeProblem& prob_;
  PgdConfig cfg_;
  Vec x_;
  std::uint64_t k_ = 0;
  std::uint64_t last_delta_ = 0;
};

// ---------------------------------------------------------------------------
// Uniform driver
// ---------------------------------------------------------------------------

struct AlgoParams {
  Algorithm algorithm = Algorithm::kZpdvr;
  double eta = 0.0;
  double p = 0.0;
  RefreshMode refresh_mode = RefreshMode::kBernoulli;
  std::uint64_t refresh_period = 0;
  int refresh_dirs = 1;
  int inner_m = 0;
  SmoothingConfig smoothing;
  std::uint64_t max_szo = 0;
  std::uint64_t seed = 0;
};

//! Executes steps until the SZO budget is exhausted (or the residual target
//! is hit), sampling (iter, szo, F, residual) every sample_every iterations
//! plus at start and end. Deterministic for a fixed config and seed.
RunHistory run(const CompositeProblem& prob, const AlgoParams& params,
               const Vec& x0, const Reference& ref, const RecordOptions& rec,
               SzoCounter& counter);

//! Free-function baseline entry points.
RunHistory pgd_run(const CompositeProblem& prob, double eta, double v,
                   std::uint64_t budget, SzoCounter& counter,
                   const Vec& x0, const Reference& ref,
                   const RecordOptions& rec = {});
RunHistory zpsvrg_run(const CompositeProblem& prob, double eta, double v,
                      int inner_m, std::uint64_t budget, SzoCounter& counter,
                      const Vec& x0, const Reference& ref,
                      const RecordOptions& rec = {}, std::uint64_t seed = 0);
RunHistory sega_run(const CompositeProblem& prob, double eta, double v,
                    std::uint64_t budget, SzoCounter& counter, const Vec& x0,
                    const Reference& ref, const RecordOptions& rec = {},
                    std::uint64_t seed = 0);

namespace detail {

//! Shared sampling loop; Opt provides step/x/iters.
template <typename Opt>
RunHistory drive(Opt& opt, const CompositeProblem& prob, const Reference& ref,
                 const RecordOptions& opts, SzoCounter& counter) {
  RunHistory history;
  auto record = [&](std::uint64_t iter) -> bool {
    const std::uint64_t szo = counter.count();
    if (!history.samples.empty() && history.samples.back().szo == szo) {
      return false;
    }
    const double objective = prob.full_objective(opt.x());
    const double residual = objective - ref.f_star;
    if (residual < -10.0 * ref.tol) throw ReferenceQualityError(residual);
    history.samples.push_back({iter, szo, objective, residual});
    return residual <= opts.stop_below_residual;
  };
  bool stop = record(0);
  while (!stop && opt.step(counter)) {
    if (opts.sample_every != 0 && opt.iters() % opts.sample_every == 0) {
      stop = record(opt.iters());
    }
  }
  if (history.samples.empty() || history.samples.back().iter != opt.iters()) {
    record(opt.iters());
  }
  history.final_x = opt.x();
  return history;
}

}  // namespace detail

}  // namespace zovr

#endif  // ZOVR_OPTIMIZERS_HPP
