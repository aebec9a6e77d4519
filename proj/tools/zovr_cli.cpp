#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "zovr/experiment.hpp"

namespace {

struct CommonOverrides {
  std::string config_path;
  std::vector<std::string> sets;  // raw key=value overrides
  std::string out_dir;
  std::string data;
  std::string seeds;
  std::string budget;
  std::string budget_nd;
  std::string sample_every;
  std::string jobs;
  std::string algo;
};

void add_common(CLI::App* cmd, CommonOverrides& ov) {
  cmd->add_option("--config", ov.config_path, "experiment manifest (key = value lines)")
      ->required();
  cmd->add_option("--set", ov.sets, "extra key=value override (repeatable)");
  cmd->add_option("--out-dir", ov.out_dir, "output directory");
  cmd->add_option("--data", ov.data, "dataset path (libsvm problems)");
  cmd->add_option("--seed", ov.seeds, "comma list of seeds");
  cmd->add_option("--budget", ov.budget, "absolute SZO budget");
  cmd->add_option("--budget-nd", ov.budget_nd, "SZO budget in multiples of n*d");
  cmd->add_option("--sample-every", ov.sample_every, "history sampling stride");
  cmd->add_option("--jobs", ov.jobs, "concurrent cells (0 = hardware)");
  cmd->add_option("--algo", ov.algo, "restrict to one algorithm");
}

zovr::ExperimentConfig resolve(const CommonOverrides& ov) {
  zovr::ExperimentConfig cfg = zovr::load_config_file(ov.config_path);
  if (!ov.out_dir.empty()) cfg.set("out_dir", ov.out_dir);
  if (!ov.data.empty()) cfg.set("data", ov.data);
  if (!ov.seeds.empty()) cfg.set("seeds", ov.seeds);
  if (!ov.budget.empty()) cfg.set("budget", ov.budget);
  if (!ov.budget_nd.empty()) cfg.set("budget_nd", ov.budget_nd);
  if (!ov.sample_every.empty()) cfg.set("sample_every", ov.sample_every);
  if (!ov.jobs.empty()) cfg.set("jobs", ov.jobs);
  if (!ov.algo.empty()) cfg.set("algorithms", ov.algo);
  for (const std::string& kv : ov.sets) {
    const std::size_t eq = kv.find('=');
    if (eq == std::string::npos) {
      throw zovr::ConfigError("--set needs key=value, got '" + kv + "'");
    }
    cfg.set(kv.substr(0, eq), kv.substr(eq + 1));
  }
  return cfg;
}

int report_outcome(const zovr::ExperimentReport& report) {
  int ok = 0;
  int failed = 0;
  for (const zovr::CellResult& cell : report.cells) {
    if (cell.error.empty()) {
      ++ok;
    } else {
      ++failed;
      std::fprintf(stderr, "cell %s seed %llu failed: %s\n",
                   zovr::algorithm_name(cell.algorithm).c_str(),
                   static_cast<unsigned long long>(cell.seed), cell.error.c_str());
    }
  }
  std::printf("%d cell(s) finished, %d failed; summary: %s\n", ok, failed,
              report.summary_path.c_str());
  return ok > 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zeroth-order variance-reduction benchmark harness"};
  app.require_subcommand(1);

  CommonOverrides run_ov;
  CLI::App* cmd_run = app.add_subcommand("run", "execute the configured runs");
  add_common(cmd_run, run_ov);

  CommonOverrides compare_ov;
  CLI::App* cmd_compare =
      app.add_subcommand("compare", "run every configured algorithm at equal budget");
  add_common(cmd_compare, compare_ov);

  CommonOverrides grid_ov;
  CLI::App* cmd_grid =
      app.add_subcommand("gridsearch", "evaluate every hyperparameter grid point");
  add_common(cmd_grid, grid_ov);

  std::string suite = "all";
  zovr::ValidateOptions vopts;
  CLI::App* cmd_validate =
      app.add_subcommand("validate", "run the estimator/theory validators");
  cmd_validate->add_option("suite", suite, "moments|projection|bias|trend|all");
  cmd_validate->add_option("--draws", vopts.moment_draws, "draws for the moment checks");
  cmd_validate->add_option("--projection-draws", vopts.projection_draws,
                           "draws for the projection identity");
  cmd_validate->add_option("--bias-draws", vopts.bias_draws, "draws for the g_k bias check");
  cmd_validate->add_option("--trend-seeds", vopts.trend_seeds, "seeds for the trend check");
  cmd_validate->add_option("--trend-horizon", vopts.trend_horizon,
                           "iterations for the trend check (0 = auto)");
  cmd_validate->add_option("--seed", vopts.seed, "master seed");

  std::string summarize_dir_path;
  CLI::App* cmd_summarize =
      app.add_subcommand("summarize", "re-aggregate an output directory");
  cmd_summarize->add_option("--dir", summarize_dir_path, "directory of run CSVs")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cmd_run->parsed()) {
      return report_outcome(zovr::run_experiment(resolve(run_ov)));
    }
    if (cmd_compare->parsed()) {
      return report_outcome(zovr::run_experiment(resolve(compare_ov)));
    }
    if (cmd_grid->parsed()) {
      return report_outcome(zovr::grid_search(resolve(grid_ov)));
    }
    if (cmd_validate->parsed()) {
      const std::vector<zovr::ValidateRecord> records =
          zovr::run_validate_suite(suite, vopts);
      int failures = 0;
      for (const zovr::ValidateRecord& r : records) {
        nlohmann::ordered_json line;
        line["check"] = r.check;
        line["pass"] = r.pass;
        line["details"] = r.details;
        std::cout << line.dump() << "\n";
        if (!r.pass) ++failures;
      }
      std::cout << (failures == 0 ? "all checks passed" : "FAILURES: ")
                << (failures == 0 ? "" : std::to_string(failures)) << "\n";
      return failures == 0 ? 0 : 1;
    }
    if (cmd_summarize->parsed()) {
      std::cout << zovr::summarize_dir(summarize_dir_path).dump(2) << "\n";
      return 0;
    }
  } catch (const zovr::ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 2;
}
