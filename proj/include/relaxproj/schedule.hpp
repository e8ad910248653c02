#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "relaxproj/relaxed_operator.hpp"

namespace relaxproj {

/// Iteration counter; schedules are indexed from 1.
using Iteration = std::int64_t;

enum class ScheduleKind { tabulated, constant, cyclic, paper_n2, paper_perturb3, paper_intermittent3 };

std::string_view to_string(ScheduleKind kind);
std::optional<ScheduleKind> schedule_kind_from_string(std::string_view name);

/// One tabulated iteration: the weights and, optionally, the control set.
struct ScheduleRow {
  BetaVector beta;
  std::optional<IndexSet> control;
};

/// What is known in closed form about the infinite series of a built-in
/// schedule. Unknown entries stay empty; finite horizons cannot decide them.
struct AnalyticFacts {
  std::optional<bool> nu_series_diverges;          // sum_k nu^(k) over active sets
  std::optional<bool> mu_series_diverges;          // sum_n min_i mu_i^(n)
  std::optional<bool> control_series_diverges;     // sum_k nu_J^(k)
  std::optional<bool> off_control_tail_converges;  // sum_n sum_{i in I\J} beta_i
};

/// A generator of weight vectors beta^(n) and control sets J^(n) for n >= 1.
///
/// Built-in kinds:
///   paper_n2             beta^(n) = (1/n, 2 - 2/n)
///   paper_perturb3       beta^(2m) = (1/m^2, 1/m, 2 - 2/m), J = {2,3}
///                        beta^(2m+1) = (1/m, 1/m^2, 2 - 2/m), J = {1,3}
///                        n = 1 has no closed form (m = 0) and is the idle step beta = 0.
///   paper_intermittent3  period-3 table with J cycling through {1}, {2}, {3};
///                        iteration n corresponds to table index n + 5 so that the
///                        table starts at m = 2, the first m where sum beta <= 2.
///
/// Control sets are always intersected with the active set of the same
/// iteration. Without a control rule J^(n) is the active set.
class Schedule {
 public:
  static Schedule tabulated(std::vector<ScheduleRow> rows);
  static Schedule constant(BetaVector beta, std::optional<IndexSet> control = std::nullopt);
  /// beta^(n) = weight * e_i with i = (n - 1) mod set_count.
  static Schedule cyclic(std::size_t set_count, double weight);
  static Schedule paper_n2();
  static Schedule paper_perturb3();
  static Schedule paper_intermittent3();

  ScheduleKind kind() const { return kind_; }
  std::size_t set_count() const { return set_count_; }
  bool has_control_rule() const;
  /// True for schedules produced by restrict_to_j.
  bool restricted() const { return restricted_; }
  /// Last valid iteration of a tabulated schedule.
  std::optional<Iteration> horizon() const;
  AnalyticFacts analytic() const;

  BetaVector beta_at(Iteration n) const;
  IndexSet j_at(Iteration n) const;

  /// Zero every weight outside the control set: beta~_i = beta_i for i in J^(n), else 0.
  friend Schedule restrict_to_j(const Schedule& schedule);

 private:
  Schedule(ScheduleKind kind, std::size_t set_count) : kind_(kind), set_count_(set_count) {}

  BetaVector raw_beta(Iteration n) const;
  std::optional<IndexSet> raw_control(Iteration n) const;
  void check_index(Iteration n) const;

  ScheduleKind kind_;
  std::size_t set_count_;
  std::vector<ScheduleRow> rows_;
  std::optional<BetaVector> constant_beta_;
  std::optional<IndexSet> constant_control_;
  double cyclic_weight_ = 0.0;
  bool restricted_ = false;
};

Schedule restrict_to_j(const Schedule& schedule);

/// Block boundaries n_1 < n_2 < ...; block k is {n : n_{k-1} < n <= n_k} with n_0 = 0.
struct BlockPartition {
  std::vector<Iteration> boundaries;

  std::size_t size() const { return boundaries.size(); }
  bool empty() const { return boundaries.empty(); }
  Iteration begin_of(std::size_t k) const { return k == 0 ? 1 : boundaries[k - 1] + 1; }
  Iteration end_of(std::size_t k) const { return boundaries[k]; }
};

/// Smallest boundaries such that each block's control sets cover every index.
/// An incomplete trailing block is dropped; an empty result means no block
/// closes within the horizon.
BlockPartition greedy_blocks(const Schedule& schedule, Iteration horizon);

/// Blocks of fixed length p: n_k = k p, trailing partial block dropped.
BlockPartition periodic_blocks(Iteration period, Iteration horizon);

/// Partial sums of the convergence series up to a finite horizon.
struct SeriesReport {
  Iteration horizon = 0;
  BlockPartition blocks;
  /// nu^(k) = min {nu_i^(n) : n in block k, i in I^(n)}.
  std::vector<double> nu_blocks;
  /// nu_J^(k) = min {nu_i^(n) : n in block k, i in J^(n)}.
  std::vector<double> nu_j_blocks;
  /// min {beta_i^(n) : n in block k, i in J^(n)}; the control series used when
  /// the sums s^(n) stay below 2 - eps.
  std::vector<double> beta_j_blocks;
  double sum_nu_blocks = 0.0;
  double sum_nu_j_blocks = 0.0;
  double sum_beta_j_blocks = 0.0;
  /// sum_n min_{i in I^(n)} nu_i^(n): the block series for unit blocks n_k = k.
  double cum_nu = 0.0;
  /// sum_n min_{i in I^(n)} mu_i^(n).
  double cum_mu_min = 0.0;
  /// sum_n sum_{i in I^(n) \ J^(n)} beta_i^(n).
  double off_control_tail = 0.0;
  /// max_n s^(n).
  double max_s = 0.0;
};

SeriesReport series_report(const Schedule& schedule, const BlockPartition& blocks, Iteration horizon);

struct NullificationResult {
  /// Tabulated over the horizon, control sets unchanged.
  Schedule schedule;
  /// Sum of every coefficient that was set to zero.
  double nullified_mass = 0.0;
  /// Passes that zeroed at least one coefficient.
  int passes = 0;
  /// 2 - max_n s^(n) over the horizon.
  double epsilon = 0.0;
};

/// Finite-horizon version of the nullification device for intermittent
/// control with blocks of length `period`.
///
/// Each pass visits every complete block and, where the block minimum of the
/// active weights is attained off the control set, zeroes that one weight
/// (ties: smallest n, then smallest i). Passes stop when the block minima
/// already look like a divergent series (see looks_divergent), when a pass
/// changes nothing, or after period * N passes.
///
/// Throws InputError if some s^(n) exceeds 2 - epsilon (or reaches 2 when no
/// epsilon is given).
NullificationResult nullify_offcontrol(const Schedule& schedule, Iteration period, Iteration horizon,
                                       std::optional<double> epsilon = std::nullopt);

/// Heuristic divergence test for a positive series known only up to a finite
/// horizon: fits a power law a_k ~ k^-q by least squares in log-log
/// coordinates over the second half of the terms and reports q <= 1.
/// Returns nullopt when fewer than four positive terms are available.
std::optional<bool> looks_divergent(std::span<const double> terms);

}  // namespace relaxproj
