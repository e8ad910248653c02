#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "relaxproj/config.hpp"
#include "relaxproj/diagnostics.hpp"
#include "relaxproj/solver.hpp"

namespace relaxproj {

/// Exit codes shared by every subcommand.
enum ExitCode : int { kExitOk = 0, kExitFailure = 1, kExitInputError = 2 };

enum class LogLevel { quiet, info, debug };

/// Reads RELAXPROJ_LOG (quiet | info | debug); anything else means info.
LogLevel log_level_from_env();

/// Header `n,d_1,...,d_N,max_dist,step_norm,s,nu_min_active,cum_nu,cum_mu[,dist_to_ref]`,
/// numbers printed with 17 significant digits.
void write_trace_csv(std::ostream& out, const std::vector<TraceRow>& rows, std::size_t set_count,
                     bool with_reference);
std::vector<TraceRow> read_trace_csv(std::istream& in);

nlohmann::json run_summary(const RunResult& result);

/// Runs the solver, writes the trace and summary. 0 when feasible, 1 otherwise,
/// 2 on IO failure.
int cmd_run(const CliConfig& config, std::ostream& out, std::ostream& log, LogLevel level = LogLevel::info);
int cmd_run(const std::filesystem::path& config_path, std::ostream& out, std::ostream& log,
            LogLevel level = LogLevel::info);

/// Prints one line per inequality family; 0 iff every family passed.
int cmd_verify(const VerifyOptions& options, std::ostream& out, std::ostream& log, LogLevel level = LogLevel::info);

struct SeriesOptions {
  /// A built-in kind name or a path to a schedule JSON file.
  std::string schedule;
  Iteration horizon = 1000;
  /// Also run the nullification transform with blocks of this length.
  std::optional<Iteration> period;
  /// Report the control-restricted schedule instead.
  bool restrict_to_control = false;
};

/// Prints the series report as JSON; 2 for unknown kinds or unreadable files.
int cmd_series(const SeriesOptions& options, std::ostream& out, std::ostream& log, LogLevel level = LogLevel::info);

}  // namespace relaxproj
