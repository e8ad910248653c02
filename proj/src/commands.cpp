#include "relaxproj/commands.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>

#include "relaxproj/error.hpp"

namespace relaxproj {

using nlohmann::json;

namespace {

std::string fmt17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void log_at(LogLevel level, LogLevel wanted, std::ostream& log, const std::string& message) {
  if (static_cast<int>(level) >= static_cast<int>(wanted)) log << "[relaxproj] " << message << '\n';
}

}  // namespace

LogLevel log_level_from_env() {
  const char* value = std::getenv("RELAXPROJ_LOG");
  if (value == nullptr) return LogLevel::info;
  const std::string v(value);
  if (v == "quiet") return LogLevel::quiet;
  if (v == "debug") return LogLevel::debug;
  return LogLevel::info;
}

json run_summary(const RunResult& result) {
  const TraceRow& last = result.trace.back();
  return {{"status", std::string(to_string(result.status))},
          {"iterations", result.iterations},
          {"final_point", to_json(result.final_point)},
          {"final_max_dist", last.max_dist},
          {"cum_nu", last.cum_nu},
          {"cum_mu", last.cum_mu}};
}

int cmd_run(const CliConfig& config, std::ostream& out, std::ostream& log, LogLevel level) {
  log_at(level, LogLevel::info, log,
         "run: " + std::to_string(config.run.sets.size()) + " sets, schedule " +
             std::string(to_string(config.run.schedule.kind())) + ", max_iter " + std::to_string(config.run.max_iter));
  std::optional<RunResult> outcome;
  try {
    outcome = run(config.run);
  } catch (const InputError& e) {
    log << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  const RunResult& result = *outcome;
  log_at(level, LogLevel::info, log,
         "status " + std::string(to_string(result.status)) + " after " + std::to_string(result.iterations) +
             " iterations, max_dist " + fmt17(result.trace.back().max_dist));
  if (level == LogLevel::debug) {
    for (double c : result.final_point.coords()) log_at(level, LogLevel::debug, log, "final coordinate " + fmt17(c));
  }

  if (config.trace_path) {
    std::ofstream trace(*config.trace_path);
    if (!trace) {
      log << "error: cannot write trace to " << config.trace_path->string() << '\n';
      return kExitInputError;
    }
    write_trace_csv(trace, result.trace, config.run.sets.size(), config.run.reference_point.has_value());
    if (!trace) {
      log << "error: failed writing " << config.trace_path->string() << '\n';
      return kExitInputError;
    }
  }
  const std::string summary = run_summary(result).dump(2) + "\n";
  if (config.summary_path) {
    std::ofstream file(*config.summary_path);
    if (!file || !(file << summary)) {
      log << "error: cannot write summary to " << config.summary_path->string() << '\n';
      return kExitInputError;
    }
  } else {
    out << summary;
  }
  return result.status == RunStatus::feasible ? kExitOk : kExitFailure;
}

int cmd_run(const std::filesystem::path& config_path, std::ostream& out, std::ostream& log, LogLevel level) {
  try {
    return cmd_run(parse_config(config_path), out, log, level);
  } catch (const ConfigError& e) {
    log << "error: " << e.what() << '\n';
    return kExitInputError;
  }
}

int cmd_verify(const VerifyOptions& options, std::ostream& out, std::ostream& log, LogLevel level) {
  if (options.trials < 1) {
    log << "error: --trials must be >= 1\n";
    return kExitInputError;
  }
  const auto start = std::chrono::steady_clock::now();
  const VerifyReport report = run_inequality_sweep(options);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  for (const auto& family : report.families) {
    out << (family.passed() ? "PASS " : "FAIL ") << family.name << " min_slack=" << fmt17(family.min_slack)
        << " checks=" << family.checks << " vacuous=" << family.vacuous << (family.saw_nan ? " NaN" : "") << '\n';
  }
  log_at(level, LogLevel::info, log,
         "verify: " + std::to_string(options.trials) + " trials, seed " + std::to_string(options.seed) + ", " +
             fmt17(seconds) + " s");
  return report.all_passed() ? kExitOk : kExitFailure;
}

int cmd_series(const SeriesOptions& options, std::ostream& out, std::ostream& log, LogLevel level) {
  if (options.horizon < 1) {
    log << "error: --horizon must be >= 1\n";
    return kExitInputError;
  }
  std::optional<Schedule> schedule;
  const auto kind = schedule_kind_from_string(options.schedule);
  try {
    if (kind == ScheduleKind::paper_n2) schedule = Schedule::paper_n2();
    else if (kind == ScheduleKind::paper_perturb3) schedule = Schedule::paper_perturb3();
    else if (kind == ScheduleKind::paper_intermittent3) schedule = Schedule::paper_intermittent3();
    else if (std::filesystem::is_regular_file(options.schedule)) {
      std::ifstream in(options.schedule);
      json j;
      try {
        in >> j;
      } catch (const json::parse_error& e) {
        throw ConfigError(options.schedule + ": invalid JSON (" + e.what() + ")");
      }
      schedule = schedule_from_json(j);
    } else {
      log << "error: unknown schedule kind or missing file '" << options.schedule
          << "' (built-ins: paper_n2, paper_perturb3, paper_intermittent3)\n";
      return kExitInputError;
    }

    if (options.restrict_to_control) schedule = restrict_to_j(*schedule);
    const Iteration horizon =
        schedule->horizon() ? std::min(options.horizon, *schedule->horizon()) : options.horizon;
    const BlockPartition blocks = greedy_blocks(*schedule, horizon);
    json report = to_json(series_report(*schedule, blocks, horizon));
    report["schedule"] = std::string(to_string(schedule->kind()));
    report["restricted"] = schedule->restricted();
    report["analytic"] = to_json(schedule->analytic());
    if (options.period) {
      const NullificationResult nulled = nullify_offcontrol(*schedule, *options.period, horizon);
      const SeriesReport after = series_report(nulled.schedule, periodic_blocks(*options.period, horizon), horizon);
      report["nullification"] = {{"period", *options.period},
                                 {"passes", nulled.passes},
                                 {"nullified_mass", nulled.nullified_mass},
                                 {"epsilon", nulled.epsilon},
                                 {"sum_beta_j_blocks", after.sum_beta_j_blocks},
                                 {"sum_nu_blocks", after.sum_nu_blocks}};
    }
    out << report.dump(2) << '\n';
    log_at(level, LogLevel::info, log,
           "series: " + std::string(to_string(schedule->kind())) + ", horizon " + std::to_string(horizon) + ", " +
               std::to_string(blocks.size()) + " blocks");
    return kExitOk;
  } catch (const ConfigError& e) {
    log << "error: " << e.what() << '\n';
  } catch (const InputError& e) {
    log << "error: " << e.what() << '\n';
  }
  return kExitInputError;
}

}  // namespace relaxproj
