#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>

#include "relaxproj/json_io.hpp"
#include "relaxproj/solver.hpp"

namespace relaxproj {

/// A validated `run` configuration file.
///
///   {
///     "dimension": 2,                       optional, checked against x0
///     "sets": [ {...}, ... ],               set JSON forms
///     "schedule": {...},                    schedule JSON forms
///     "x0": [1, 1],
///     "max_iter": 100000,                   default 10000
///     "tol_feas": 1e-3,                     default 1e-6
///     "tol_step": 0,                        default 0
///     "trace_path": "trace.csv",            optional
///     "summary_path": "summary.json",       optional; stdout otherwise
///     "reference_point": [0, 0],            optional
///     "trace_stride": 1                     default 1
///   }
struct CliConfig {
  std::size_t dimension = 0;
  RunConfig run;
  std::optional<std::filesystem::path> trace_path;
  std::optional<std::filesystem::path> summary_path;
};

/// Throws ConfigError for a missing file, invalid JSON or any schema violation.
CliConfig parse_config(const std::filesystem::path& path);
CliConfig config_from_json(const nlohmann::json& j);

}  // namespace relaxproj
