#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "relaxproj/geometry.hpp"
#include "relaxproj/point.hpp"
#include "relaxproj/schedule.hpp"

namespace relaxproj {

struct RunConfig {
  std::vector<SetSpec> sets;
  Schedule schedule;
  Point x0;
  Iteration max_iter = 1000;
  /// Stop once max_i d(x, C_i) <= tol_feas.
  double tol_feas = 1e-6;
  /// Stop once a step that acted on a violated set moved x by at most tol_step.
  double tol_step = 0.0;
  /// A known point of the intersection, used for Fejer diagnostics.
  std::optional<Point> reference_point;
  /// Keep every trace_stride-th row (plus the first and the last).
  Iteration trace_stride = 1;
};

/// Per-iteration diagnostics for x^(n). Row n = 0 describes the starting point.
struct TraceRow {
  Iteration n = 0;
  std::vector<double> dists;
  double max_dist = 0.0;
  double step_norm = 0.0;
  double s = 0.0;
  double nu_min_active = 0.0;
  double cum_nu = 0.0;
  double cum_mu = 0.0;
  std::optional<double> dist_to_ref;
};

enum class RunStatus { feasible, step_stalled, max_iter };

std::string_view to_string(RunStatus status);

struct RunResult {
  Point final_point;
  Iteration iterations = 0;
  RunStatus status = RunStatus::max_iter;
  std::vector<TraceRow> trace;
};

/// Throws InputError describing the first inconsistency found.
void validate(const RunConfig& config);

/// Running sums carried from one step to the next.
struct SeriesTotals {
  double cum_nu = 0.0;
  double cum_mu = 0.0;
};

struct StepResult {
  Point next;
  TraceRow row;
};

/// x^(n) = Q_{beta^(n)}(x^(n-1)) together with its trace row.
StepResult step(const RunConfig& config, const Point& x, Iteration n, const SeriesTotals& totals = {});

/// Iterates until feasible, stalled or out of budget. Stopping checks run in
/// that order, so the strongest conclusion is reported.
RunResult run(const RunConfig& config);

}  // namespace relaxproj
