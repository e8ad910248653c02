#include "relaxproj/solver.hpp"

#include <algorithm>
#include <string>

#include "relaxproj/error.hpp"
#include "relaxproj/relaxed_operator.hpp"

namespace relaxproj {

namespace {

constexpr double kReferenceTolerance = 1e-9;

void fill_distances(const RunConfig& config, const Point& x, TraceRow& row) {
  row.dists.resize(config.sets.size());
  row.max_dist = 0.0;
  for (std::size_t i = 0; i < config.sets.size(); ++i) {
    row.dists[i] = distance(config.sets[i], x);
    row.max_dist = std::max(row.max_dist, row.dists[i]);
  }
  if (config.reference_point) row.dist_to_ref = distance_between(x, *config.reference_point);
}

}  // namespace

std::string_view to_string(RunStatus status) {
  switch (status) {
    case RunStatus::feasible:
      return "feasible";
    case RunStatus::step_stalled:
      return "step_stalled";
    case RunStatus::max_iter:
      return "max_iter";
  }
  return "unknown";
}

void validate(const RunConfig& config) {
  if (config.sets.empty()) throw InputError("run config: at least one set is required");
  if (config.schedule.set_count() != config.sets.size()) {
    throw InputError("run config: schedule has N = " + std::to_string(config.schedule.set_count()) + " but " +
                     std::to_string(config.sets.size()) + " sets were given");
  }
  for (const auto& set : config.sets) require_compatible(set, config.x0);
  if (config.max_iter < 1) throw InputError("run config: max_iter must be >= 1");
  if (!(config.tol_feas > 0.0)) throw InputError("run config: tol_feas must be positive");
  if (!(config.tol_step >= 0.0)) throw InputError("run config: tol_step must be nonnegative");
  if (config.trace_stride < 1) throw InputError("run config: trace_stride must be >= 1");
  if (config.reference_point) {
    require_same_dim(config.x0, *config.reference_point, "run config: reference_point");
    for (std::size_t i = 0; i < config.sets.size(); ++i) {
      if (!contains(config.sets[i], *config.reference_point, kReferenceTolerance)) {
        throw InputError("run config: reference_point is not in set " + std::to_string(i + 1));
      }
    }
  }
}

StepResult step(const RunConfig& config, const Point& x, Iteration n, const SeriesTotals& totals) {
  const BetaVector beta = config.schedule.beta_at(n);
  Point next = apply_q(beta, config.sets, x);

  const CoefficientRow coeffs = coefficients(beta);
  const IndexSet active = active_indices(beta);
  TraceRow row;
  row.n = n;
  fill_distances(config, next, row);
  row.step_norm = distance_between(next, x);
  row.s = coeffs.s;
  row.nu_min_active = min_over(coeffs.nu, active);
  row.cum_nu = totals.cum_nu + row.nu_min_active;
  row.cum_mu = totals.cum_mu + min_over(coeffs.mu, active);
  return {std::move(next), std::move(row)};
}

RunResult run(const RunConfig& config) {
  validate(config);

  TraceRow initial;
  fill_distances(config, config.x0, initial);

  RunResult result{config.x0, 0, RunStatus::max_iter, {}};
  result.trace.push_back(initial);
  if (initial.max_dist <= config.tol_feas) {
    result.status = RunStatus::feasible;
    return result;
  }

  Point x = config.x0;
  std::vector<double> previous_dists = initial.dists;
  SeriesTotals totals;
  for (Iteration n = 1; n <= config.max_iter; ++n) {
    // Only an iteration that acted on a violated set can stall; idle steps
    // (beta = 0, or active sets already satisfied) are part of intermittent control.
    bool acted_on_violation = false;
    for (std::size_t i : active_indices(config.schedule.beta_at(n))) {
      if (previous_dists[i] > config.tol_feas) acted_on_violation = true;
    }

    StepResult next = step(config, x, n, totals);
    x = std::move(next.next);
    totals = {next.row.cum_nu, next.row.cum_mu};
    result.iterations = n;

    bool done = true;
    if (next.row.max_dist <= config.tol_feas) {
      result.status = RunStatus::feasible;
    } else if (acted_on_violation && next.row.step_norm <= config.tol_step) {
      result.status = RunStatus::step_stalled;
    } else if (n == config.max_iter) {
      result.status = RunStatus::max_iter;
    } else {
      done = false;
    }

    previous_dists = next.row.dists;
    if (done || n % config.trace_stride == 0) result.trace.push_back(std::move(next.row));
    if (done) break;
  }
  result.final_point = std::move(x);
  return result;
}

}  // namespace relaxproj
