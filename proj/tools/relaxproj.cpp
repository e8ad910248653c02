// relaxproj: solve convex feasibility problems with weighted averages of
// relaxed projections, verify the descent inequalities, and report the
// convergence series of a relaxation schedule.
//
//   relaxproj run -c config.json
//   relaxproj verify --trials 1000 --seed 42
//   relaxproj series --schedule paper_n2 --horizon 1000
#include <iostream>

#include <CLI11.hpp>

#include "relaxproj/commands.hpp"

int main(int argc, char** argv) {
  using namespace relaxproj;

  CLI::App app{"Weighted averages of relaxed projections"};
  app.require_subcommand(1);

  std::string config_path;
  auto* run_cmd = app.add_subcommand("run", "Iterate x <- Q_beta(x) and write trace/summary");
  run_cmd->add_option("-c,--config", config_path, "Run configuration (JSON)")->required();

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Randomized check of every descent/perturbation inequality");
  verify_cmd->add_option("--trials", verify.trials, "Random instances")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--seed", verify.seed, "RNG seed");

  SeriesOptions series;
  std::int64_t period = 0;
  auto* series_cmd = app.add_subcommand("series", "Partial sums of the convergence series of a schedule");
  series_cmd->add_option("--schedule", series.schedule, "Built-in kind or schedule JSON file")->required();
  series_cmd->add_option("--horizon", series.horizon, "Number of iterations to sum");
  series_cmd->add_option("--period", period, "Also nullify off-control minima with blocks of this length");
  series_cmd->add_flag("--restrict", series.restrict_to_control, "Report the control-restricted schedule");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  const LogLevel level = log_level_from_env();
  if (*run_cmd) return cmd_run(config_path, std::cout, std::cerr, level);
  if (*verify_cmd) return cmd_verify(verify, std::cout, std::cerr, level);
  if (period > 0) series.period = period;
  return cmd_series(series, std::cout, std::cerr, level);
}
