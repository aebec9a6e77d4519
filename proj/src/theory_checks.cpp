#include "zovr/theory_checks.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace zovr {

TheorySchedule theoretical_schedule(const CompositeProblem& prob, double v) {
  if (!(prob.strong_convexity() > 0.0)) {
    throw std::invalid_argument("theoretical_schedule: problem is not strongly convex");
  }
  if (!(v > 0.0)) throw std::invalid_argument("theoretical_schedule: v must be > 0");
  const double n = prob.num_components();
  const double d = prob.dim();
  const double big_l = prob.smoothness();
  const double kappa = prob.condition_number();

  TheorySchedule s;
  s.v = v;
  s.n = prob.num_components();
  s.d = prob.dim();
  s.eta = 1.0 / ((40.0 * d + 63.0) * big_l);
  s.alpha = 8.0 * n * (d + 2.0) * (2.0 * d + 3.0) * s.eta * s.eta;
  s.beta = 8.0 * n * (2.0 * d + 3.0) * s.eta * s.eta;
  s.p = 1.0 / n;
  s.theta = 1.0 / (kappa * (80.0 * d + 126.0) + 4.0 * n * (d + 2.0));
  const double c1 = 40.0 * d + 63.0;
  s.delta_floor = 2.0 * std::pow(d + 3.0, 3.0) * v * v * kappa / c1 +
                  8.0 * (5.0 * d + 8.0) * std::pow(d + 6.0, 3.0) * v * v / (c1 * c1);
  s.sigma = ((80.0 * d + 126.0) + 4.0 * n * (d + 2.0)) * kappa * (kappa + 1.0) *
            (d + 6.0) * (d + 6.0) * v * v;
  s.contraction = std::max(1.0 - 1.0 / (kappa * (80.0 * d + 126.0)),
                           1.0 - 1.0 / (4.0 * n * (d + 2.0)));
  return s;
}

LyapunovSnapshot lyapunov(const CompositeProblem& prob, const Vec& x,
                          const Vec& h_tilde, const Vec& w, const Vec& x_star,
                          const std::vector<Vec>& grad_star_components,
                          const TheorySchedule& schedule) {
  if (!prob.has_analytic_grad()) throw UnavailableGradientError();
  const int n = prob.num_components();
  if (static_cast<int>(grad_star_components.size()) != n) {
    throw std::invalid_argument("lyapunov: need one gradient per component");
  }
  LyapunovSnapshot snap;
  snap.term_x = sq_dist(x, x_star);

  Vec grad_star_mean(x.size(), 0.0);
  for (const Vec& g : grad_star_components) axpy(1.0, g, grad_star_mean);
  scale(1.0 / static_cast<double>(n), grad_star_mean);
  snap.term_h = schedule.alpha * sq_dist(h_tilde, grad_star_mean);

  Vec gw(x.size());
  double acc = 0.0;
  for (int i = 0; i < n; ++i) {
    prob.analytic_component_grad(i, w, gw);
    acc += sq_dist(gw, grad_star_components[static_cast<std::size_t>(i)]);
  }
  snap.term_w = schedule.beta * acc / static_cast<double>(n);
  snap.psi = snap.term_x + snap.term_h + snap.term_w;
  return snap;
}

McReport mc_moment_check(int d, double q, std::int64_t draws, SeededRng rng) {
  if (d < 1) throw std::invalid_argument("mc_moment_check: d must be >= 1");
  if (q < 0.0) throw std::invalid_argument("mc_moment_check: q must be >= 0");
  if (draws < 100000) {
    throw std::invalid_argument("mc_moment_check: needs at least 1e5 draws");
  }
  Vec u(static_cast<std::size_t>(d));
  double sum = 0.0;
  double sum_sq = 0.0;
  for (std::int64_t t = 0; t < draws; ++t) {
    fill_gaussian(rng, u);
    const double x = std::pow(sq_norm(u), 0.5 * q);
    sum += x;
    sum_sq += x * x;
  }
  const double mean = sum / static_cast<double>(draws);
  const double var = std::max(0.0, sum_sq / static_cast<double>(draws) - mean * mean);
  const double se = std::sqrt(var / static_cast<double>(draws));

  McReport r;
  r.check = "moment d=" + std::to_string(d) + " q=" + std::to_string(q);
  r.measured = mean;
  r.stderr_ = se;
  r.draws = draws;
  r.bound_lo = q >= 2.0 ? std::pow(static_cast<double>(d), 0.5 * q) : 0.0;
  r.bound_hi = q <= 2.0 ? std::pow(static_cast<double>(d), 0.5 * q)
                        : std::pow(q + static_cast<double>(d), 0.5 * q);
  r.target = 0.5 * (r.bound_lo + r.bound_hi);
  r.pass = mean >= r.bound_lo - 3.0 * se && mean <= r.bound_hi + 3.0 * se;
  return r;
}

McReport mc_projection_identity(int d, const Vec& vec, std::int64_t draws,
                                SeededRng rng) {
  if (d < 1 || static_cast<int>(vec.size()) != d) {
    throw std::invalid_argument("mc_projection_identity: dimension mismatch");
  }
  const double v_sq = sq_norm(vec);
  if (v_sq == 0.0) {
    throw std::invalid_argument("mc_projection_identity: vec must be nonzero");
  }
  if (draws < 100000) {
    throw std::invalid_argument("mc_projection_identity: needs at least 1e5 draws");
  }
  Vec u(static_cast<std::size_t>(d));
  double sum = 0.0;
  double sum_sq = 0.0;
  for (std::int64_t t = 0; t < draws; ++t) {
    fill_gaussian(rng, u);
    const double s = dot(u, vec);
    const double x = s * s * sq_norm(u);  // ||u u'vec||^2
    sum += x;
    sum_sq += x * x;
  }
  const double mean = sum / static_cast<double>(draws);
  const double var = std::max(0.0, sum_sq / static_cast<double>(draws) - mean * mean);

  McReport r;
  r.check = "projection d=" + std::to_string(d);
  r.measured = mean;
  r.stderr_ = std::sqrt(var / static_cast<double>(draws));
  r.draws = draws;
  r.target = (static_cast<double>(d) + 2.0) * v_sq;
  r.bound_lo = 0.98 * r.target;
  r.bound_hi = 1.02 * r.target;
  r.pass = mean >= r.bound_lo && mean <= r.bound_hi;
  return r;
}

McReport mc_gk_bias_check(const CompositeProblem& prob, const Vec& x,
                          const Vec& w, const Vec& h_tilde,
                          const SmoothingConfig& cfg, std::int64_t draws,
                          SeededRng rng) {
  if (!prob.has_analytic_grad()) throw UnavailableGradientError();
  const int n = prob.num_components();
  const int d = prob.dim();
  SzoCounter scratch;
  Vec u(static_cast<std::size_t>(d));
  Vec u_k(static_cast<std::size_t>(d));
  Vec mean(static_cast<std::size_t>(d), 0.0);
  double sum_sq = 0.0;
  SmoothingConfig single = cfg;
  single.batch_dirs = 1;
  single.batch_samples = 1;
  for (std::int64_t t = 0; t < draws; ++t) {
    fill_gaussian(rng, u);
    fill_gaussian(rng, u_k);
    const int i = static_cast<int>(rng.uniform_index(static_cast<std::uint64_t>(n)));
    Vec g = dir_estimate_full(prob, w, u, single, scratch);
    const double sketch = dot(u, h_tilde);
    for (std::size_t j = 0; j < g.size(); ++j) {
      g[j] += h_tilde[j] - sketch * u[j];
    }
    const Vec at_x = dir_estimate_component(prob, i, x, u_k, single, scratch);
    const Vec at_w = dir_estimate_component(prob, i, w, u_k, single, scratch);
    for (std::size_t j = 0; j < g.size(); ++j) {
      g[j] += at_x[j] - at_w[j];
    }
    axpy(1.0, g, mean);
    sum_sq += sq_norm(g);
  }
  scale(1.0 / static_cast<double>(draws), mean);

  const Vec grad = prob.analytic_full_grad(x);
  const double dist = std::sqrt(sq_dist(mean, grad));
  const double var =
      std::max(0.0, sum_sq / static_cast<double>(draws) - sq_norm(mean));
  const double se = std::sqrt(var / static_cast<double>(draws));

  McReport r;
  r.check = "gk-bias n=" + std::to_string(n) + " d=" + std::to_string(d);
  r.measured = dist;
  r.stderr_ = se;
  r.draws = draws;
  r.target = 0.0;
  r.bound_lo = 0.0;
  r.bound_hi = prob.smoothness() * cfg.v * std::pow(d + 3.0, 1.5) + 3.0 * se;
  r.pass = dist <= r.bound_hi;
  return r;
}

namespace {

TrendReport trend_check_impl(const CompositeProblem& prob,
                             const TheorySchedule& schedule,
                             const Reference& ref, int seeds, int horizon,
                             SeededRng seeder, const Vec& x0, const Vec& h0) {
  const int n = prob.num_components();
  std::vector<Vec> grad_star(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    grad_star[static_cast<std::size_t>(i)] =
        prob.analytic_component_grad(i, ref.x_star);
  }
  Vec grad_star_mean(x0.size(), 0.0);
  for (const Vec& g : grad_star) axpy(1.0, g, grad_star_mean);
  scale(1.0 / static_cast<double>(n), grad_star_mean);

  std::vector<double> psi_sum(static_cast<std::size_t>(horizon) + 1, 0.0);
  Vec gw(x0.size());
  for (int s = 0; s < seeds; ++s) {
    ZpdvrConfig cfg;
    cfg.eta = schedule.eta;
    cfg.p = schedule.p;
    cfg.smoothing.v = schedule.v;
    cfg.max_szo = ~0ull;
    cfg.seed = seeder.next_u64();
    ZpdvrOptimizer opt(prob, cfg, x0, h0);
    SzoCounter counter;

    auto term_w_of = [&](const Vec& w) {
      double acc = 0.0;
      for (int i = 0; i < n; ++i) {
        prob.analytic_component_grad(i, w, gw);
        acc += sq_dist(gw, grad_star[static_cast<std::size_t>(i)]);
      }
      return schedule.beta * acc / static_cast<double>(n);
    };

    double term_h = schedule.alpha * sq_dist(opt.learner().h_tilde, grad_star_mean);
    double term_w = term_w_of(opt.w());
    psi_sum[0] += sq_dist(opt.x(), ref.x_star) + term_h + term_w;
    for (int k = 1; k <= horizon; ++k) {
      opt.step(counter);
      if (opt.last_step().promoted) {
        term_h = schedule.alpha * sq_dist(opt.learner().h_tilde, grad_star_mean);
        term_w = term_w_of(opt.w());
      }
      psi_sum[static_cast<std::size_t>(k)] +=
          sq_dist(opt.x(), ref.x_star) + term_h + term_w;
    }
  }

  TrendReport report;
  report.psi_bar.resize(psi_sum.size());
  for (std::size_t k = 0; k < psi_sum.size(); ++k) {
    report.psi_bar[k] = psi_sum[k] / static_cast<double>(seeds);
  }
  report.psi0 = report.psi_bar.front();
  report.gate = 10.0 * schedule.delta_floor;
  report.window = static_cast<std::uint64_t>(std::ceil(1.0 / schedule.theta));

  const std::size_t tail_start = psi_sum.size() - psi_sum.size() / 5;
  double tail = 0.0;
  for (std::size_t k = tail_start; k < psi_sum.size(); ++k) tail += report.psi_bar[k];
  report.floor_tail_mean = tail / static_cast<double>(psi_sum.size() - tail_start);

  const std::uint64_t t_win = report.window;
  const double decay = 1.5 * std::pow(schedule.contraction, static_cast<double>(t_win));
  for (std::size_t k = 0; k + t_win < report.psi_bar.size(); ++k) {
    if (report.psi_bar[k] <= report.gate) continue;
    ++report.windows_checked;
    if (report.psi_bar[k + t_win] > decay * report.psi_bar[k]) {
      ++report.windows_failed;
    }
  }
  report.pass = report.windows_checked > 0 && report.windows_failed == 0;
  return report;
}

}  // namespace

TrendReport lyapunov_trend_check(const CompositeProblem& prob,
                                 const TheorySchedule& schedule,
                                 const Reference& ref, int seeds, int horizon,
                                 SeededRng seeder, const Vec& x0, const Vec& h0) {
  if (!prob.has_analytic_grad()) throw UnavailableGradientError();
  if (seeds < 1 || horizon < 2) {
    throw std::invalid_argument("lyapunov_trend_check: bad seeds/horizon");
  }
  return trend_check_impl(prob, schedule, ref, seeds, horizon, seeder, x0, h0);
}

}  // namespace zovr
