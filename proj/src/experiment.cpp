#include "zovr/experiment.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <thread>

#include "zovr/logistic_problem.hpp"
#include "zovr/reference_solver.hpp"
#include "zovr/synthetic.hpp"

namespace zovr {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream ss(s);
  while (std::getline(ss, cur, ',')) {
    cur = trim(cur);
    if (!cur.empty()) out.push_back(cur);
  }
  return out;
}

double parse_double_or_throw(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    const double x = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw ConfigError(key + ": cannot parse number '" + v + "'");
  }
}

std::uint64_t parse_u64_or_throw(const std::string& key, const std::string& v) {
  const double x = parse_double_or_throw(key, v);
  if (x < 0.0 || x != std::floor(x)) {
    throw ConfigError(key + ": expected a nonnegative integer, got '" + v + "'");
  }
  return static_cast<std::uint64_t>(x);
}

std::vector<double> parse_double_list(const std::string& key, const std::string& v) {
  std::vector<double> out;
  for (const std::string& tok : split_list(v)) {
    out.push_back(parse_double_or_throw(key, tok));
  }
  if (out.empty()) throw ConfigError(key + ": empty list");
  return out;
}

std::string format_g(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", x);
  return buf;
}

std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

nlohmann::ordered_json json_number(double x) {
  if (std::isfinite(x)) return x;
  return std::isnan(x) ? "nan" : (x > 0 ? "inf" : "-inf");
}

}  // namespace

// ---------------------------------------------------------------------------
// Config
// ---------------------------------------------------------------------------

void ExperimentConfig::set(const std::string& key, const std::string& value) {
  const std::string v = trim(value);
  if (key == "problem") {
    if (v == "libsvm") {
      kind = ProblemKind::kLibsvm;
    } else if (v == "quadratic") {
      kind = ProblemKind::kQuadratic;
    } else if (v == "synthetic-logistic") {
      kind = ProblemKind::kSyntheticLogistic;
    } else {
      throw ConfigError("problem: unknown kind '" + v + "'");
    }
  } else if (key == "data") {
    data_path = v;
  } else if (key == "dim_override") {
    dim_override = static_cast<int>(parse_u64_or_throw(key, v));
  } else if (key == "lambda1") {
    lambda1 = parse_double_or_throw(key, v);
  } else if (key == "lambda2") {
    lambda2 = parse_double_or_throw(key, v);
  } else if (key == "v") {
    this->v = parse_double_or_throw(key, v);
  } else if (key == "n") {
    n = static_cast<int>(parse_u64_or_throw(key, v));
  } else if (key == "d") {
    d = static_cast<int>(parse_u64_or_throw(key, v));
  } else if (key == "nnz") {
    nnz = static_cast<int>(parse_u64_or_throw(key, v));
  } else if (key == "kappa") {
    kappa = parse_double_or_throw(key, v);
  } else if (key == "problem_seed") {
    problem_seed = parse_u64_or_throw(key, v);
  } else if (key == "scale_features") {
    if (v == "true" || v == "1") {
      scale_features = true;
    } else if (v == "false" || v == "0") {
      scale_features = false;
    } else {
      throw ConfigError("scale_features: expected true/false");
    }
  } else if (key == "budget") {
    budget = parse_u64_or_throw(key, v);
  } else if (key == "budget_nd") {
    budget_nd = parse_double_or_throw(key, v);
  } else if (key == "seeds") {
    seeds.clear();
    for (const std::string& tok : split_list(v)) {
      seeds.push_back(parse_u64_or_throw(key, tok));
    }
    if (seeds.empty()) throw ConfigError("seeds: empty list");
  } else if (key == "sample_every") {
    sample_every = parse_u64_or_throw(key, v);
  } else if (key == "out_dir") {
    out_dir = v;
  } else if (key == "ref_tol") {
    ref_tol = parse_double_or_throw(key, v);
  } else if (key == "jobs") {
    jobs = static_cast<int>(parse_u64_or_throw(key, v));
  } else if (key == "algorithms") {
    algorithms.clear();
    for (const std::string& tok : split_list(v)) {
      try {
        algorithms.push_back(algorithm_from_name(tok));
      } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
      }
    }
    if (algorithms.empty()) throw ConfigError("algorithms: empty list");
  } else if (key == "batch_samples") {
    batch_samples = static_cast<int>(parse_u64_or_throw(key, v));
  } else if (key == "batch_dirs") {
    batch_dirs = static_cast<int>(parse_u64_or_throw(key, v));
  } else if (key == "zpdvr.eta") {
    zpdvr_eta = parse_double_list(key, v);
  } else if (key == "zpdvr.p") {
    zpdvr_p = parse_double_list(key, v);
  } else if (key == "zpdvr.refresh_dirs") {
    zpdvr_refresh_dirs = static_cast<int>(parse_u64_or_throw(key, v));
    if (zpdvr_refresh_dirs < 1) throw ConfigError("zpdvr.refresh_dirs must be >= 1");
  } else if (key == "zpdvr.refresh") {
    if (v == "bernoulli") {
      zpdvr_refresh = RefreshMode::kBernoulli;
    } else if (v == "periodic") {
      zpdvr_refresh = RefreshMode::kPeriodic;
    } else {
      throw ConfigError("zpdvr.refresh: expected bernoulli or periodic");
    }
  } else if (key == "zpsvrg.eta") {
    zpsvrg_eta = parse_double_list(key, v);
  } else if (key == "zpsvrg.m") {
    zpsvrg_m.clear();
    for (const std::string& tok : split_list(v)) {
      zpsvrg_m.push_back(static_cast<int>(parse_u64_or_throw(key, tok)));
    }
  } else if (key == "sega.eta") {
    sega_eta = parse_double_list(key, v);
  } else if (key == "pgd.eta") {
    pgd_eta = parse_double_list(key, v);
  } else {
    throw ConfigError("unknown config key '" + key + "'");
  }
  resolved[key] = v;
}

void ExperimentConfig::validate() const {
  if (budget == 0 && !(budget_nd > 0.0)) {
    throw ConfigError("one of budget / budget_nd must be positive");
  }
  if (budget != 0 && budget_nd > 0.0) {
    throw ConfigError("budget and budget_nd are mutually exclusive");
  }
  if (algorithms.empty()) throw ConfigError("no algorithms configured");
  if (seeds.empty()) throw ConfigError("no seeds configured");
  if (sample_every < 1) throw ConfigError("sample_every must be >= 1");
  if (!(ref_tol > 0.0)) throw ConfigError("ref_tol must be > 0");
  if (batch_samples < 1 || batch_dirs < 1) throw ConfigError("batch sizes must be >= 1");
  if (!(v > 0.0)) throw ConfigError("v must be > 0");
  if (lambda1 < 0.0) throw ConfigError("lambda1 must be >= 0");
  if (kind == ProblemKind::kLibsvm) {
    if (data_path.empty()) throw ConfigError("libsvm problem needs data = <path>");
    if (!std::filesystem::exists(data_path)) {
      throw ConfigError("dataset file not found: " + data_path);
    }
  }
  for (Algorithm a : algorithms) {
    switch (a) {
      case Algorithm::kZpdvr:
        for (double e : zpdvr_eta)
          if (!(e > 0.0)) throw ConfigError("zpdvr.eta entries must be > 0");
        for (double p : zpdvr_p)
          if (!(p > 0.0) || p > 1.0) throw ConfigError("zpdvr.p entries must be in (0,1]");
        break;
      case Algorithm::kZpsvrg:
        for (double e : zpsvrg_eta)
          if (!(e > 0.0)) throw ConfigError("zpsvrg.eta entries must be > 0");
        if (zpsvrg_m.empty()) throw ConfigError("zpsvrg.m: empty list");
        for (int m : zpsvrg_m)
          if (m < 1) throw ConfigError("zpsvrg.m entries must be >= 1");
        break;
      case Algorithm::kSega:
        for (double e : sega_eta)
          if (!(e > 0.0)) throw ConfigError("sega.eta entries must be > 0");
        break;
      case Algorithm::kPgd:
        for (double e : pgd_eta)
          if (!(e > 0.0)) throw ConfigError("pgd.eta entries must be > 0");
        break;
    }
  }
}

ExperimentConfig parse_config_text(const std::string& text) {
  ExperimentConfig cfg;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config line " + std::to_string(line_no) +
                        ": expected key = value");
    }
    cfg.set(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return cfg;
}

ExperimentConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path);
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return parse_config_text(text);
}

// ---------------------------------------------------------------------------
// Problem construction
// ---------------------------------------------------------------------------

std::unique_ptr<CompositeProblem> build_problem(const ExperimentConfig& cfg) {
  switch (cfg.kind) {
    case ProblemKind::kQuadratic:
      return std::make_unique<QuadraticLassoProblem>(
          make_quadratic_lasso(cfg.n, cfg.d, cfg.kappa, cfg.lambda1, cfg.problem_seed));
    case ProblemKind::kSyntheticLogistic: {
      Dataset ds = make_synthetic_dataset(cfg.n, cfg.d, cfg.nnz, cfg.problem_seed);
      if (cfg.scale_features) max_abs_scale_features(ds);
      return std::make_unique<LogisticProblem>(ds.rows, ds.labels, cfg.lambda1,
                                               cfg.lambda2);
    }
    case ProblemKind::kLibsvm: {
      Dataset ds = load_libsvm_file(cfg.data_path, cfg.dim_override);
      if (cfg.scale_features) max_abs_scale_features(ds);
      return std::make_unique<LogisticProblem>(ds.rows, ds.labels, cfg.lambda1,
                                               cfg.lambda2);
    }
  }
  throw ConfigError("unhandled problem kind");
}

std::uint64_t resolve_budget(const ExperimentConfig& cfg,
                             const CompositeProblem& prob) {
  if (cfg.budget != 0) return cfg.budget;
  const double nd = static_cast<double>(prob.num_components()) *
                    static_cast<double>(prob.dim());
  return static_cast<std::uint64_t>(std::ceil(cfg.budget_nd * nd));
}

// ---------------------------------------------------------------------------
// CSV
// ---------------------------------------------------------------------------

void write_run_csv(const std::string& path, const RunHistory& history) {
  std::FILE* f = std::fopen(path.c_str(), "wb");
  if (f == nullptr) throw std::runtime_error("cannot write " + path);
  std::fputs("iter,szo,objective,residual\n", f);
  for (const HistorySample& s : history.samples) {
    std::fprintf(f, "%llu,%llu,%.17g,%.17g\n",
                 static_cast<unsigned long long>(s.iter),
                 static_cast<unsigned long long>(s.szo), s.objective, s.residual);
  }
  std::fclose(f);
}

RunHistory read_run_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  RunHistory h;
  std::string line;
  if (!std::getline(in, line) || trim(line) != "iter,szo,objective,residual") {
    throw std::runtime_error(path + ": unexpected CSV header");
  }
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    HistorySample s;
    unsigned long long iter = 0;
    unsigned long long szo = 0;
    if (std::sscanf(line.c_str(), "%llu,%llu,%lg,%lg", &iter, &szo, &s.objective,
                    &s.residual) != 4) {
      throw std::runtime_error(path + ": malformed CSV row '" + line + "'");
    }
    s.iter = iter;
    s.szo = szo;
    h.samples.push_back(s);
  }
  return h;
}

// ---------------------------------------------------------------------------
// Experiment engine
// ---------------------------------------------------------------------------

namespace {

struct GridPoint {
  AlgoParams params;
  std::string slug;
};

std::vector<GridPoint> expand_grid(const ExperimentConfig& cfg, Algorithm alg,
                                   const CompositeProblem& prob,
                                   bool require_singleton) {
  std::vector<GridPoint> out;
  const int n = prob.num_components();
  SmoothingConfig smoothing;
  smoothing.v = cfg.v;
  smoothing.batch_samples = cfg.batch_samples;
  smoothing.batch_dirs = cfg.batch_dirs;

  auto base = [&]() {
    AlgoParams p;
    p.algorithm = alg;
    p.smoothing = smoothing;
    return p;
  };

  switch (alg) {
    case Algorithm::kZpdvr: {
      std::vector<double> ps = cfg.zpdvr_p;
      if (cfg.zpdvr_refresh == RefreshMode::kPeriodic) {
        ps = {0.0};  // placeholder, period used instead
      } else if (ps.empty()) {
        ps = {1.0 / static_cast<double>(n)};
      }
      for (double eta : cfg.zpdvr_eta) {
        for (double p : ps) {
          AlgoParams a = base();
          a.eta = eta;
          a.refresh_dirs = cfg.zpdvr_refresh_dirs;
          a.refresh_mode = cfg.zpdvr_refresh;
          if (cfg.zpdvr_refresh == RefreshMode::kPeriodic) {
            a.refresh_period = static_cast<std::uint64_t>(
                (n + cfg.batch_samples - 1) / cfg.batch_samples);
            out.push_back({a, "eta" + format_g(eta) + "_periodic"});
          } else {
            a.p = p;
            out.push_back({a, "eta" + format_g(eta) + "_p" + format_g(p)});
          }
        }
      }
      break;
    }
    case Algorithm::kZpsvrg:
      for (double eta : cfg.zpsvrg_eta) {
        for (int m : cfg.zpsvrg_m) {
          AlgoParams a = base();
          a.eta = eta;
          a.inner_m = m;
          out.push_back({a, "eta" + format_g(eta) + "_m" + std::to_string(m)});
        }
      }
      break;
    case Algorithm::kSega:
      for (double eta : cfg.sega_eta) {
        AlgoParams a = base();
        a.eta = eta;
        out.push_back({a, "eta" + format_g(eta)});
      }
      break;
    case Algorithm::kPgd:
      for (double eta : cfg.pgd_eta) {
        AlgoParams a = base();
        a.eta = eta;
        out.push_back({a, "eta" + format_g(eta)});
      }
      break;
  }
  if (require_singleton && out.size() != 1) {
    throw ConfigError(algorithm_name(alg) +
                      ": run/compare need singleton hyperparameters; use gridsearch");
  }
  return out;
}

nlohmann::ordered_json params_json(const AlgoParams& p) {
  nlohmann::ordered_json j;
  j["eta"] = p.eta;
  if (p.algorithm == Algorithm::kZpdvr) {
    if (p.refresh_mode == RefreshMode::kPeriodic) {
      j["refresh"] = "periodic";
      j["refresh_period"] = p.refresh_period;
    } else {
      j["p"] = p.p;
    }
  }
  if (p.algorithm == Algorithm::kZpsvrg) j["m"] = p.inner_m;
  return j;
}

ExperimentReport execute(const ExperimentConfig& cfg, bool grid_mode) {
  cfg.validate();
  const auto t0 = std::chrono::steady_clock::now();
  std::unique_ptr<CompositeProblem> prob = build_problem(cfg);
  const std::uint64_t budget = resolve_budget(cfg, *prob);
  const Reference ref = compute_reference_optimum(*prob, cfg.ref_tol);
  const Vec x0(static_cast<std::size_t>(prob->dim()), 0.0);

  struct Cell {
    Algorithm alg;
    GridPoint point;
    std::size_t point_ordinal;
    std::uint64_t seed;
  };
  std::vector<Cell> cells;
  for (Algorithm alg : cfg.algorithms) {
    std::size_t ordinal = 0;
    for (const GridPoint& gp : expand_grid(cfg, alg, *prob, !grid_mode)) {
      for (std::uint64_t seed : cfg.seeds) {
        cells.push_back({alg, gp, ordinal, seed});
      }
      ++ordinal;
    }
  }

  std::filesystem::create_directories(cfg.out_dir);
  std::vector<CellResult> results(cells.size());

  auto run_cell = [&](std::size_t idx) {
    const Cell& cell = cells[idx];
    CellResult& res = results[idx];
    res.algorithm = cell.alg;
    res.params = cell.point.params;
    res.params.max_szo = budget;
    res.params.seed = cell.seed;
    res.seed = cell.seed;
    res.csv_path = cfg.out_dir + "/" + algorithm_name(cell.alg) + "_" +
                   cell.point.slug + "_seed" + std::to_string(cell.seed) + ".csv";
    const auto c0 = std::chrono::steady_clock::now();
    try {
      SzoCounter counter;
      RecordOptions rec;
      rec.sample_every = cfg.sample_every;
      res.history = run(*prob, res.params, x0, ref, rec, counter);
      write_run_csv(res.csv_path, res.history);
      res.final_szo = res.history.samples.back().szo;
      res.final_residual = res.history.samples.back().residual;
      for (int quarter = 1; quarter <= 4; ++quarter) {
        const std::uint64_t cp = budget / 4 * quarter;
        double r = res.history.samples.front().residual;
        for (const HistorySample& s : res.history.samples) {
          if (s.szo <= cp) r = s.residual;
        }
        res.checkpoints.emplace_back(cp, r);
      }
    } catch (const std::exception& e) {
      res.error = e.what();
      res.final_residual = kInf;
    }
    res.wall_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - c0).count();
  };

  int jobs = cfg.jobs > 0 ? cfg.jobs
                          : static_cast<int>(std::thread::hardware_concurrency());
  if (jobs < 1) jobs = 1;
  jobs = std::min<int>(jobs, static_cast<int>(cells.size()));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < cells.size(); ++i) run_cell(i);
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= cells.size()) return;
        run_cell(i);
      }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(jobs));
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (std::thread& th : pool) th.join();
  }

  // Leaderboards: mean final residual across seeds per grid point, ascending,
  // stable in grid order (errors rank last).
  nlohmann::ordered_json leaderboard;
  nlohmann::ordered_json winners;
  for (Algorithm alg : cfg.algorithms) {
    struct Entry {
      std::string slug;
      nlohmann::ordered_json params;
      double mean_residual = 0.0;
      int errors = 0;
      std::size_t ordinal = 0;
    };
    std::vector<Entry> entries;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (cells[i].alg != alg) continue;
      Entry* e = nullptr;
      for (Entry& cand : entries) {
        if (cand.ordinal == cells[i].point_ordinal) {
          e = &cand;
          break;
        }
      }
      if (e == nullptr) {
        entries.push_back({cells[i].point.slug, params_json(results[i].params),
                           0.0, 0, cells[i].point_ordinal});
        e = &entries.back();
      }
      if (!results[i].error.empty() || !std::isfinite(results[i].final_residual)) {
        ++e->errors;
        e->mean_residual = kInf;
      } else if (e->errors == 0) {
        e->mean_residual +=
            results[i].final_residual / static_cast<double>(cfg.seeds.size());
      }
    }
    std::stable_sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
      const bool fa = std::isfinite(a.mean_residual);
      const bool fb = std::isfinite(b.mean_residual);
      if (fa != fb) return fa;
      if (!fa) return false;
      return a.mean_residual < b.mean_residual;
    });
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const Entry& e : entries) {
      nlohmann::ordered_json row;
      row["params"] = e.params;
      row["slug"] = e.slug;
      row["mean_final_residual"] = json_number(e.mean_residual);
      row["errors"] = e.errors;
      rows.push_back(row);
    }
    leaderboard[algorithm_name(alg)] = rows;
    if (!entries.empty()) {
      winners[algorithm_name(alg)] = rows.front();
    }
  }

  ExperimentReport report;
  report.cells = std::move(results);

  nlohmann::ordered_json summary;
  summary["version"] = "0.1.0";
  std::string config_echo_text;
  nlohmann::ordered_json config_echo;
  for (const auto& [k, v] : cfg.resolved) {
    config_echo[k] = v;
    config_echo_text += k + "=" + v + "\n";
  }
  summary["config"] = config_echo;
  char hash_buf[32];
  std::snprintf(hash_buf, sizeof(hash_buf), "fnv1a64:%016llx",
                static_cast<unsigned long long>(fnv1a64(config_echo_text)));
  summary["config_hash"] = hash_buf;
  summary["mode"] = grid_mode ? "gridsearch" : "run";
  nlohmann::ordered_json problem_info;
  problem_info["n"] = prob->num_components();
  problem_info["d"] = prob->dim();
  problem_info["L"] = prob->smoothness();
  problem_info["mu"] = prob->strong_convexity();
  problem_info["lambda1"] = prob->l1_weight();
  problem_info["f_star"] = ref.f_star;
  problem_info["ref_tol"] = ref.tol;
  summary["problem"] = problem_info;
  summary["budget"] = budget;
  summary["budget_over_nd"] =
      static_cast<double>(budget) /
      (static_cast<double>(prob->num_components()) * static_cast<double>(prob->dim()));

  nlohmann::ordered_json cell_rows = nlohmann::ordered_json::array();
  for (const CellResult& r : report.cells) {
    nlohmann::ordered_json row;
    row["algorithm"] = algorithm_name(r.algorithm);
    row["params"] = params_json(r.params);
    row["seed"] = r.seed;
    if (r.error.empty()) {
      row["csv"] = std::filesystem::path(r.csv_path).filename().string();
      row["final_szo"] = r.final_szo;
      row["final_residual"] = json_number(r.final_residual);
      nlohmann::ordered_json cps = nlohmann::ordered_json::array();
      for (const auto& [szo, resid] : r.checkpoints) {
        cps.push_back({szo, json_number(resid)});
      }
      row["checkpoints"] = cps;
    } else {
      row["error"] = r.error;
    }
    row["wall_s"] = r.wall_s;
    cell_rows.push_back(row);
  }
  summary["cells"] = cell_rows;
  summary["leaderboard"] = leaderboard;
  summary["winners"] = winners;
  summary["wall_s"] =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  report.summary = summary;
  report.summary_path = cfg.out_dir + "/summary.json";
  std::ofstream out(report.summary_path);
  out << report.summary.dump(2) << "\n";
  return report;
}

}  // namespace

ExperimentReport run_experiment(const ExperimentConfig& cfg) {
  return execute(cfg, false);
}

ExperimentReport grid_search(const ExperimentConfig& cfg) {
  return execute(cfg, true);
}

nlohmann::ordered_json summarize_dir(const std::string& dir) {
  nlohmann::ordered_json out;
  nlohmann::ordered_json runs = nlohmann::ordered_json::array();
  std::map<std::string, double> best;
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.path().extension() == ".csv") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  for (const auto& path : files) {
    const RunHistory h = read_run_csv(path.string());
    if (h.samples.empty()) continue;
    const std::string name = path.filename().string();
    const std::string alg = name.substr(0, name.find('_'));
    nlohmann::ordered_json row;
    row["csv"] = name;
    row["algorithm"] = alg;
    row["final_szo"] = h.samples.back().szo;
    row["final_residual"] = json_number(h.samples.back().residual);
    runs.push_back(row);
    const double r = h.samples.back().residual;
    if (best.find(alg) == best.end() || r < best[alg]) best[alg] = r;
  }
  out["runs"] = runs;
  nlohmann::ordered_json best_json;
  for (const auto& [alg, r] : best) best_json[alg] = json_number(r);
  out["best_final_residual"] = best_json;
  return out;
}

// ---------------------------------------------------------------------------
// Validators
// ---------------------------------------------------------------------------

namespace {

nlohmann::ordered_json mc_details(const McReport& r) {
  nlohmann::ordered_json j;
  j["measured"] = r.measured;
  j["bound_lo"] = r.bound_lo;
  j["bound_hi"] = r.bound_hi;
  j["target"] = r.target;
  j["stderr"] = r.stderr_;
  j["draws"] = r.draws;
  return j;
}

ValidateRecord from_mc(const McReport& r) {
  return ValidateRecord{r.check, r.pass, mc_details(r)};
}

std::vector<ValidateRecord> validate_moments(const ValidateOptions& opts) {
  std::vector<ValidateRecord> out;
  std::uint64_t stream = 0;
  for (int d : {2, 5, 20}) {
    for (double q : {1.0, 2.0, 4.0, 6.0}) {
      out.push_back(from_mc(mc_moment_check(d, q, opts.moment_draws,
                                            SeededRng(opts.seed, ++stream))));
    }
  }
  return out;
}

std::vector<ValidateRecord> validate_projection(const ValidateOptions& opts) {
  std::vector<ValidateRecord> out;
  std::uint64_t stream = 100;
  for (int d : {1, 3, 20}) {
    Vec e1(static_cast<std::size_t>(d), 0.0);
    e1[0] = 1.0;
    out.push_back(from_mc(mc_projection_identity(d, e1, opts.projection_draws,
                                                 SeededRng(opts.seed, ++stream))));
  }
  // Homogeneity spot check: scaling the vector by 10 scales the target by 100.
  Vec scaled(3, 0.0);
  scaled[0] = 10.0;
  out.push_back(from_mc(mc_projection_identity(3, scaled, opts.projection_draws,
                                               SeededRng(opts.seed, ++stream))));
  return out;
}

std::vector<ValidateRecord> validate_bias(const ValidateOptions& opts) {
  std::vector<ValidateRecord> out;
  SmoothingConfig cfg;
  cfg.v = 1e-3;
  SeededRng rng(opts.seed, 777);

  const QuadraticLassoProblem quad = make_quadratic_lasso(20, 10, 5.0, 0.1, 11);
  Vec x = gaussian_vector(rng, quad.dim());
  Vec w = gaussian_vector(rng, quad.dim());
  Vec h = gaussian_vector(rng, quad.dim());
  McReport r = mc_gk_bias_check(quad, x, w, h, cfg, opts.bias_draws, rng.stream(1));
  r.check = "gk-bias quadratic " + r.check;
  out.push_back(from_mc(r));

  // Telescoping case w = x: only the reference-gradient bias remains.
  r = mc_gk_bias_check(quad, x, x, h, cfg, opts.bias_draws, rng.stream(2));
  r.check = "gk-bias quadratic w=x " + r.check;
  out.push_back(from_mc(r));

  const Dataset ds = make_synthetic_dataset(50, 10, 5, 12, false);
  const LogisticProblem logit(ds.rows, ds.labels, 1e-3, 1e-2);
  x = gaussian_vector(rng, logit.dim());
  w = gaussian_vector(rng, logit.dim());
  h = gaussian_vector(rng, logit.dim());
  r = mc_gk_bias_check(logit, x, w, h, cfg, opts.bias_draws, rng.stream(3));
  r.check = "gk-bias logistic " + r.check;
  out.push_back(from_mc(r));
  return out;
}

std::vector<ValidateRecord> validate_trend(const ValidateOptions& opts) {
  const QuadraticLassoProblem prob = make_quadratic_lasso(20, 5, 4.0, 0.1, 7);
  const TheorySchedule schedule = theoretical_schedule(prob, 1e-4);
  const Reference ref = compute_reference_optimum(prob, 1e-12);
  const std::uint64_t t_win =
      static_cast<std::uint64_t>(std::ceil(1.0 / schedule.theta));
  const int horizon = opts.trend_horizon > 0
                          ? opts.trend_horizon
                          : static_cast<int>(10 * t_win);
  const Vec x0(static_cast<std::size_t>(prob.dim()), 0.0);
  const TrendReport tr = lyapunov_trend_check(prob, schedule, ref, opts.trend_seeds,
                                              horizon, SeededRng(opts.seed, 999), x0);
  nlohmann::ordered_json j;
  j["windows_checked"] = tr.windows_checked;
  j["windows_failed"] = tr.windows_failed;
  j["window"] = tr.window;
  j["gate"] = tr.gate;
  j["psi0"] = tr.psi0;
  j["floor_tail_mean"] = tr.floor_tail_mean;
  j["seeds"] = opts.trend_seeds;
  j["horizon"] = horizon;
  return {ValidateRecord{"lyapunov-trend quadratic n=20 d=5", tr.pass, j}};
}

}  // namespace

std::vector<ValidateRecord> run_validate_suite(const std::string& suite,
                                               const ValidateOptions& opts) {
  if (suite == "moments") return validate_moments(opts);
  if (suite == "projection") return validate_projection(opts);
  if (suite == "bias") return validate_bias(opts);
  if (suite == "trend") return validate_trend(opts);
  if (suite == "all") {
    std::vector<ValidateRecord> out = validate_moments(opts);
    for (auto&& r : validate_projection(opts)) out.push_back(std::move(r));
    for (auto&& r : validate_bias(opts)) out.push_back(std::move(r));
    for (auto&& r : validate_trend(opts)) out.push_back(std::move(r));
    return out;
  }
  throw ConfigError("unknown validate suite '" + suite +
                    "' (expected moments|projection|bias|trend|all)");
}

}  // namespace zovr
