#include "zovr/optimizers.hpp"

namespace zovr {

std::string algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::kZpdvr: return "zpdvr";
    case Algorithm::kZpsvrg: return "zpsvrg";
    case Algorithm::kSega: return "sega";
    case Algorithm::kPgd: return "pgd";
  }
  return "unknown";
}

Algorithm algorithm_from_name(const std::string& name) {
  if (name == "zpdvr") return Algorithm::kZpdvr;
  if (name == "zpsvrg") return Algorithm::kZpsvrg;
  if (name == "sega") return Algorithm::kSega;
  if (name == "pgd") return Algorithm::kPgd;
  throw std::invalid_argument("unknown algorithm: " + name);
}

void ZpdvrConfig::validate(int n) const {
  (void)n;
  if (!(eta > 0.0)) throw std::invalid_argument("zpdvr: eta must be > 0");
  if (refresh_dirs < 1) throw std::invalid_argument("zpdvr: refresh_dirs must be >= 1");
  smoothing.validate();
  if (refresh_mode == RefreshMode::kBernoulli) {
    if (!(p > 0.0) || p > 1.0) {
      throw std::invalid_argument("zpdvr: p must be in (0, 1]");
    }
  } else if (refresh_period < 1) {
    throw std::invalid_argument("zpdvr: periodic refresh needs period >= 1");
  }
}

// ---------------------------------------------------------------------------
// ZPDVR
// ---------------------------------------------------------------------------

ZpdvrOptimizer::ZpdvrOptimizer(const CompositeProblem& prob,
                               const ZpdvrConfig& cfg, Vec x0, Vec h0)
    : prob_(prob),
      cfg_(cfg),
      rng_(cfg.seed),
      x_(std::move(x0)),
      w_(x_),
      learner_(prob.dim()),
      ref_grad_(x_.size(), 0.0),
      g_(x_.size()),
      x_prev_(x_.size()),
      shifted_x_(x_.size()),
      shifted_w_(x_.size()),
      dirs_(static_cast<std::size_t>(cfg.smoothing.batch_dirs), Vec(x_.size())),
      samples_(static_cast<std::size_t>(cfg.smoothing.batch_samples), 0),
      saved_dirs_(cfg.refresh_dirs > 1 ? static_cast<std::size_t>(cfg.refresh_dirs)
                                       : 0,
                  Vec(x_.size())) {
  cfg_.validate(prob.num_components());
  if (static_cast<int>(x_.size()) != prob.dim()) {
    throw std::invalid_argument("zpdvr: x0 dimension mismatch");
  }
  if (!h0.empty()) {
    if (static_cast<int>(h0.size()) != prob.dim()) {
      throw std::invalid_argument("zpdvr: h0 dimension mismatch");
    }
    learner_.h_tilde = std::move(h0);
  }
}

std::uint64_t ZpdvrOptimizer::worst_case_step_szo() const {
  const std::uint64_t n = static_cast<std::uint64_t>(prob_.num_components());
  const std::uint64_t pairs =
      4ull * static_cast<std::uint64_t>(cfg_.smoothing.batch_samples) *
      static_cast<std::uint64_t>(cfg_.smoothing.batch_dirs);
  const std::uint64_t pass = 2ull * n * static_cast<std::uint64_t>(cfg_.refresh_dirs);
  return pairs + pass + (refresh_due_ ? pass : 0ull);
}

void ZpdvrOptimizer::refresh_reference(SzoCounter& counter) {
  if (cfg_.refresh_dirs == 1) {
    Vec fresh_u = gaussian_vector(rng_, prob_.dim());
    ref_grad_ =
        reference_gradient(learner_, prob_, w_, fresh_u, cfg_.smoothing, counter);
    return;
  }
  // Averaged correction over refresh_dirs saved directions.
  ref_grad_ = learner_.h_tilde;
  const double inv = 1.0 / static_cast<double>(saved_dirs_.size());
  for (Vec& u : saved_dirs_) {
    fill_gaussian(rng_, u);
    const Vec est = dir_estimate_full(prob_, w_, u, cfg_.smoothing, counter);
    const double sketch = dot(u, learner_.h_tilde);
    for (std::size_t j = 0; j < ref_grad_.size(); ++j) {
      ref_grad_[j] += inv * (est[j] - sketch * u[j]);
    }
  }
}

void ZpdvrOptimizer::update_learner(SzoCounter& counter) {
  if (cfg_.refresh_dirs == 1) {
    learner_update(learner_, prob_, w_, cfg_.smoothing, counter);
    return;
  }
  Vec correction(x_.size(), 0.0);
  const double inv = 1.0 / static_cast<double>(saved_dirs_.size());
  for (const Vec& u : saved_dirs_) {
    const Vec est = dir_estimate_full(prob_, w_, u, cfg_.smoothing, counter);
    const double sketch = dot(u, learner_.h_tilde);
    for (std::size_t j = 0; j < correction.size(); ++j) {
      correction[j] += inv * (est[j] - sketch * u[j]);
    }
  }
  const double step = 1.0 / (static_cast<double>(prob_.dim()) + 2.0);
  axpy(step, correction, learner_.h_tilde);
}

void ZpdvrOptimizer::draw_pairs() {
  for (Vec& u : dirs_) fill_gaussian(rng_, u);
  for (int& i : samples_) {
    i = static_cast<int>(rng_.uniform_index(
        static_cast<std::uint64_t>(prob_.num_components())));
  }
}

void ZpdvrOptimizer::accumulate_gk(SzoCounter& counter) {
  g_ = ref_grad_;
  const double v = cfg_.smoothing.v;
  const EvalPoint base_x = EvalPoint::of(x_);
  const EvalPoint base_w = EvalPoint::of(w_);
  const double denom =
      v * static_cast<double>(samples_.size()) * static_cast<double>(dirs_.size());
  for (const Vec& u : dirs_) {
    shifted_x_ = x_;
    axpy(v, u, shifted_x_);
    shifted_w_ = w_;
    axpy(v, u, shifted_w_);
    const EvalPoint moved_x = EvalPoint::of(shifted_x_);
    const EvalPoint moved_w = EvalPoint::of(shifted_w_);
    double coef = 0.0;
    for (int i : samples_) {
      coef += (prob_.eval_component(i, moved_x, counter) -
               prob_.eval_component(i, base_x, counter)) -
              (prob_.eval_component(i, moved_w, counter) -
               prob_.eval_component(i, base_w, counter));
    }
    axpy(coef / denom, u, g_);
  }
}

bool ZpdvrOptimizer::step(SzoCounter& counter) {
  if (cfg_.max_szo < counter.count() + worst_case_step_szo()) return false;
  info_ = StepInfo{};
  const std::uint64_t before = counter.count();

  if (refresh_due_) {
    refresh_reference(counter);
    refresh_due_ = false;
    info_.refreshed = true;
  }

  draw_pairs();
  accumulate_gk(counter);

  const bool promote =
      cfg_.refresh_mode == RefreshMode::kBernoulli
          ? rng_.uniform01() <= cfg_.p
          : (k_ + 1) % cfg_.refresh_period == 0;

  // x_{k+1} = prox(x_k - eta g_k); the pre-update iterate is kept because a
  // successful coin promotes it (not x_{k+1}) to the next reference point.
  std::swap(x_prev_, x_);
  for (std::size_t j = 0; j < x_.size(); ++j) {
    x_[j] = x_prev_[j] - cfg_.eta * g_[j];
  }
  prox_step_inplace(prob_, x_, cfg_.eta);
  if (!all_finite(x_)) throw DivergenceError();

  if (promote) {
    w_ = x_prev_;
    update_learner(counter);
    refresh_due_ = true;
    info_.promoted = true;
  }

  ++k_;
  info_.szo_delta = counter.count() - before;
  return true;
}

// ---------------------------------------------------------------------------
// ZPSVRG
// ---------------------------------------------------------------------------

ZpsvrgOptimizer::ZpsvrgOptimizer(const CompositeProblem& prob,
                                 const ZpsvrgConfig& cfg, Vec x0)
    : prob_(prob),
      cfg_(cfg),
      rng_(cfg.seed),
      x_(std::move(x0)),
      w_(x_),
      mu_hat_(x_.size(), 0.0),
      g_(x_.size()),
      shifted_x_(x_.size()),
      shifted_w_(x_.size()),
      dirs_(static_cast<std::size_t>(cfg.smoothing.batch_dirs), Vec(x_.size())),
      samples_(static_cast<std::size_t>(cfg.smoothing.batch_samples), 0) {
  if (!(cfg_.eta > 0.0)) throw std::invalid_argument("zpsvrg: eta must be > 0");
  if (cfg_.inner_m < 1) throw std::invalid_argument("zpsvrg: inner loop length must be >= 1");
  cfg_.smoothing.validate();
  if (static_cast<int>(x_.size()) != prob.dim()) {
    throw std::invalid_argument("zpsvrg: x0 dimension mismatch");
  }
}

std::uint64_t ZpsvrgOptimizer::worst_case_step_szo() const {
  const std::uint64_t n = static_cast<std::uint64_t>(prob_.num_components());
  const std::uint64_t bu = static_cast<std::uint64_t>(cfg_.smoothing.batch_dirs);
  const std::uint64_t pairs =
      4ull * static_cast<std::uint64_t>(cfg_.smoothing.batch_samples) * bu;
  return pairs + (inner_done_ == 0 ? 2ull * n * bu : 0ull);
}

bool ZpsvrgOptimizer::step(SzoCounter& counter) {
  if (cfg_.max_szo < counter.count() + worst_case_step_szo()) return false;
  const std::uint64_t before = counter.count();
  const double v = cfg_.smoothing.v;

  if (inner_done_ == 0) {
    // New snapshot: anchor at the current iterate and average the full
    // directional estimate over batch_dirs fresh directions.
    w_ = x_;
    fill_zero(mu_hat_);
    for (Vec& u : dirs_) {
      fill_gaussian(rng_, u);
      const Vec est = dir_estimate_full(prob_, w_, u, cfg_.smoothing, counter);
      axpy(1.0 / static_cast<double>(dirs_.size()), est, mu_hat_);
    }
  }

  for (Vec& u : dirs_) fill_gaussian(rng_, u);
  for (int& i : samples_) {
    i = static_cast<int>(rng_.uniform_index(
        static_cast<std::uint64_t>(prob_.num_components())));
  }

  g_ = mu_hat_;
  const EvalPoint base_x = EvalPoint::of(x_);
  const EvalPoint base_w = EvalPoint::of(w_);
  const double denom =
      v * static_cast<double>(samples_.size()) * static_cast<double>(dirs_.size());
  for (const Vec& u : dirs_) {
    shifted_x_ = x_;
    axpy(v, u, shifted_x_);
    shifted_w_ = w_;
    axpy(v, u, shifted_w_);
    const EvalPoint moved_x = EvalPoint::of(shifted_x_);
    const EvalPoint moved_w = EvalPoint::of(shifted_w_);
    double coef = 0.0;
    for (int i : samples_) {
      coef += (prob_.eval_component(i, moved_x, counter) -
               prob_.eval_component(i, base_x, counter)) -
              (prob_.eval_component(i, moved_w, counter) -
               prob_.eval_component(i, base_w, counter));
    }
    axpy(coef / denom, u, g_);
  }

  for (std::size_t j = 0; j < x_.size(); ++j) x_[j] -= cfg_.eta * g_[j];
  prox_step_inplace(prob_, x_, cfg_.eta);
  if (!all_finite(x_)) throw DivergenceError();

  inner_done_ = (inner_done_ + 1) % cfg_.inner_m;
  ++k_;
  last_delta_ = counter.count() - before;
  return true;
}

// ---------------------------------------------------------------------------
// SEGA
// ---------------------------------------------------------------------------

SegaOptimizer::SegaOptimizer(const CompositeProblem& prob, const SegaConfig& cfg,
                             Vec x0)
    : prob_(prob),
      cfg_(cfg),
      rng_(cfg.seed),
      x_(std::move(x0)),
      h_(x_.size(), 0.0),
      u_(x_.size()) {
  if (!(cfg_.eta > 0.0)) throw std::invalid_argument("sega: eta must be > 0");
  cfg_.smoothing.validate();
  if (static_cast<int>(x_.size()) != prob.dim()) {
    throw std::invalid_argument("sega: x0 dimension mismatch");
  }
}

std::uint64_t SegaOptimizer::worst_case_step_szo() const {
  return 2ull * static_cast<std::uint64_t>(prob_.num_components());
}

bool SegaOptimizer::step(SzoCounter& counter) {
  if (cfg_.max_szo < counter.count() + worst_case_step_szo()) return false;
  const std::uint64_t before = counter.count();

  fill_gaussian(rng_, u_);
  const Vec est = dir_estimate_full(prob_, x_, u_, cfg_.smoothing, counter);
  // Sketch-and-project: h <- h + u u'(grad - h) / ||u||^2, with u u'grad
  // realized by the directional estimate.
  const double u_sq = sq_norm(u_);
  if (u_sq > 0.0) {
    const double sketch = dot(u_, h_);
    for (std::size_t j = 0; j < h_.size(); ++j) {
      h_[j] += (est[j] - sketch * u_[j]) / u_sq;
    }
  }

  for (std::size_t j = 0; j < x_.size(); ++j) x_[j] -= cfg_.eta * h_[j];
  prox_step_inplace(prob_, x_, cfg_.eta);
  if (!all_finite(x_)) throw DivergenceError();

  ++k_;
  last_delta_ = counter.count() - before;
  return true;
}

// ---------------------------------------------------------------------------
// PGD
// ---------------------------------------------------------------------------

PgdOptimizer::PgdOptimizer(const CompositeProblem& prob, const PgdConfig& cfg,
                           Vec x0)
    : prob_(prob), cfg_(cfg), x_(std::move(x0)) {
  if (!(cfg_.eta > 0.0)) throw std::invalid_argument("pgd: eta must be > 0");
  if (!(cfg_.v > 0.0)) throw std::invalid_argument("pgd: v must be > 0");
  if (static_cast<int>(x_.size()) != prob.dim()) {
    throw std::invalid_argument("pgd: x0 dimension mismatch");
  }
}

std::uint64_t PgdOptimizer::worst_case_step_szo() const {
  return static_cast<std::uint64_t>(prob_.num_components()) *
         (static_cast<std::uint64_t>(prob_.dim()) + 1ull);
}

bool PgdOptimizer::step(SzoCounter& counter) {
  if (cfg_.max_szo < counter.count() + worst_case_step_szo()) return false;
  const std::uint64_t before = counter.count();
  const Vec grad = coord_fd_gradient(prob_, x_, cfg_.v, counter);
  for (std::size_t j = 0; j < x_.size(); ++j) x_[j] -= cfg_.eta * grad[j];
  prox_step_inplace(prob_, x_, cfg_.eta);
  if (!all_finite(x_)) throw DivergenceError();
  ++k_;
  last_delta_ = counter.count() - before;
  return true;
}

// ---------------------------------------------------------------------------
// Uniform driver
// ---------------------------------------------------------------------------

RunHistory run(const CompositeProblem& prob, const AlgoParams& params,
               const Vec& x0, const Reference& ref, const RecordOptions& rec,
               SzoCounter& counter) {
  switch (params.algorithm) {
    case Algorithm::kZpdvr: {
      ZpdvrConfig cfg;
      cfg.eta = params.eta;
      cfg.p = params.p;
      cfg.refresh_mode = params.refresh_mode;
      cfg.refresh_period = params.refresh_period;
      cfg.refresh_dirs = params.refresh_dirs;
      cfg.smoothing = params.smoothing;
      cfg.max_szo = params.max_szo;
      cfg.seed = params.seed;
      ZpdvrOptimizer opt(prob, cfg, x0);
      return detail::drive(opt, prob, ref, rec, counter);
    }
    case Algorithm::kZpsvrg: {
      ZpsvrgConfig cfg;
      cfg.eta = params.eta;
      cfg.inner_m = params.inner_m;
      cfg.smoothing = params.smoothing;
      cfg.max_szo = params.max_szo;
      cfg.seed = params.seed;
      ZpsvrgOptimizer opt(prob, cfg, x0);
      return detail::drive(opt, prob, ref, rec, counter);
    }
    case Algorithm::kSega: {
      SegaConfig cfg;
      cfg.eta = params.eta;
      cfg.smoothing = params.smoothing;
      cfg.max_szo = params.max_szo;
      cfg.seed = params.seed;
      SegaOptimizer opt(prob, cfg, x0);
      return detail::drive(opt, prob, ref, rec, counter);
    }
    case Algorithm::kPgd: {
      PgdConfig cfg;
      cfg.eta = params.eta;
      cfg.v = params.smoothing.v;
      cfg.max_szo = params.max_szo;
      cfg.seed = params.seed;
      PgdOptimizer opt(prob, cfg, x0);
      return detail::drive(opt, prob, ref, rec, counter);
    }
  }
  throw std::logic_error("run: unhandled algorithm");
}

RunHistory pgd_run(const CompositeProblem& prob, double eta, double v,
                   std::uint64_t budget, SzoCounter& counter, const Vec& x0,
                   const Reference& ref, const RecordOptions& rec) {
  PgdConfig cfg;
  cfg.eta = eta;
  cfg.v = v;
  cfg.max_szo = budget;
  PgdOptimizer opt(prob, cfg, x0);
  return detail::drive(opt, prob, ref, rec, counter);
}

RunHistory zpsvrg_run(const CompositeProblem& prob, double eta, double v,
                      int inner_m, std::uint64_t budget, SzoCounter& counter,
                      const Vec& x0, const Reference& ref,
                      const RecordOptions& rec, std::uint64_t seed) {
  ZpsvrgConfig cfg;
  cfg.eta = eta;
  cfg.inner_m = inner_m;
  cfg.smoothing.v = v;
  cfg.max_szo = budget;
  cfg.seed = seed;
  ZpsvrgOptimizer opt(prob, cfg, x0);
  return detail::drive(opt, prob, ref, rec, counter);
}

RunHistory sega_run(const CompositeProblem& prob, double eta, double v,
                    std::uint64_t budget, SzoCounter& counter, const Vec& x0,
                    const Reference& ref, const RecordOptions& rec,
                    std::uint64_t seed) {
  SegaConfig cfg;
  cfg.eta = eta;
  cfg.smoothing.v = v;
  cfg.max_szo = budget;
  cfg.seed = seed;
  SegaOptimizer opt(prob, cfg, x0);
  return detail::drive(opt, prob, ref, rec, counter);
}

}  // namespace zovr
