#ifndef ZOVR_EXPERIMENT_HPP
#define ZOVR_EXPERIMENT_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "zovr/optimizers.hpp"
#include "zovr/problem.hpp"
#include "zovr/theory_checks.hpp"

namespace zovr {

struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

enum class ProblemKind { kLibsvm, kQuadratic, kSyntheticLogistic };

//! Resolved experiment manifest. Parsed from a flat `key = value` file
//! (see README for the schema); CLI flags override file values.
struct ExperimentConfig {
  ProblemKind kind = ProblemKind::kQuadratic;
  std::string data_path;
  int dim_override = 0;
  double lambda1 = 0.0;
  double lambda2 = 1e-4;
  double v = 1e-3;
  int n = 100;
  int d = 20;
  int nnz = 14;
  double kappa = 20.0;
  std::uint64_t problem_seed = 1;
  bool scale_features = false;  // per-feature max-abs scaling

  std::uint64_t budget = 0;    // absolute SZO budget
  double budget_nd = 0.0;      // alternative: multiples of n*d
  std::vector<std::uint64_t> seeds{1};
  std::uint64_t sample_every = 1000;
  std::string out_dir = "out";
  double ref_tol = 1e-10;
  int jobs = 0;  // 0 = hardware concurrency

  std::vector<Algorithm> algorithms{Algorithm::kZpdvr};
  int batch_samples = 1;
  int batch_dirs = 1;

  // Per-algorithm hyperparameter grids (singletons outside gridsearch).
  std::vector<double> zpdvr_eta{0.0};
  std::vector<double> zpdvr_p;  // empty means the p = 1/n default
  RefreshMode zpdvr_refresh = RefreshMode::kBernoulli;
  int zpdvr_refresh_dirs = 1;
  std::vector<double> zpsvrg_eta{0.0};
  std::vector<int> zpsvrg_m{100};
  std::vector<double> sega_eta{0.0};
  std::vector<double> pgd_eta{0.0};

  std::map<std::string, std::string> resolved;  // echoed into the summary

  void set(const std::string& key, const std::string& value);
  void validate() const;
};

ExperimentConfig parse_config_text(const std::string& text);
ExperimentConfig load_config_file(const std::string& path);

struct CellResult {
  Algorithm algorithm = Algorithm::kZpdvr;
  AlgoParams params;
  std::uint64_t seed = 0;
  std::string csv_path;
  std::string error;  // empty on success
  double final_residual = 0.0;
  std::uint64_t final_szo = 0;
  double wall_s = 0.0;
  // residual at the last sample with szo <= checkpoint (quarters of budget)
  std::vector<std::pair<std::uint64_t, double>> checkpoints;
  RunHistory history;
};

struct ExperimentReport {
  nlohmann::ordered_json summary;
  std::vector<CellResult> cells;
  std::string summary_path;
};

//! Builds the problem named by the config.
std::unique_ptr<CompositeProblem> build_problem(const ExperimentConfig& cfg);

std::uint64_t resolve_budget(const ExperimentConfig& cfg,
                             const CompositeProblem& prob);

//! One run per (algorithm, seed) with the configured (singleton)
//! hyperparameters; writes one CSV per run plus summary.json.
ExperimentReport run_experiment(const ExperimentConfig& cfg);

//! Every grid point per algorithm under an equal SZO budget; emits the
//! full leaderboard and per-algorithm winners.
ExperimentReport grid_search(const ExperimentConfig& cfg);

void write_run_csv(const std::string& path, const RunHistory& history);
RunHistory read_run_csv(const std::string& path);

//! Re-aggregates an output directory from its CSVs.
nlohmann::ordered_json summarize_dir(const std::string& dir);

// ---------------------------------------------------------------------------
// Validators (CLI `validate` subcommand)
// ---------------------------------------------------------------------------

struct ValidateOptions {
  std::int64_t moment_draws = 1'000'000;
  std::int64_t projection_draws = 1'000'000;
  std::int64_t bias_draws = 200'000;
  int trend_seeds = 200;
  int trend_horizon = 0;  // 0 = auto (10 windows)
  std::uint64_t seed = 20240601;
};

struct ValidateRecord {
  std::string check;
  bool pass = false;
  nlohmann::ordered_json details;
};

//! suites: moments | projection | bias | trend | all
std::vector<ValidateRecord> run_validate_suite(const std::string& suite,
                                               const ValidateOptions& opts);

}  // namespace zovr

#endif  // ZOVR_EXPERIMENT_HPP
