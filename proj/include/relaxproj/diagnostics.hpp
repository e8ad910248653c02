#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "relaxproj/geometry.hpp"
#include "relaxproj/point.hpp"
#include "relaxproj/relaxed_operator.hpp"

namespace relaxproj {

/// Slack allowed on every checked inequality (accumulated rounding of the
/// quadratic forms for ||x|| <= 10).
inline constexpr double kSlackTolerance = 1e-10;

/// lhs <= rhs checked as slack = rhs - lhs; slack >= 0 means the inequality holds.
struct SlackReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  /// The bound degenerated to +infinity; rhs and slack are +infinity.
  bool vacuous = false;
};

using CoefficientFn = std::function<CoefficientRow(const BetaVector&)>;

/// ||Q_beta x - c||^2 <= ||x - c||^2 - sum_j (2 - beta_j/kappa_j) beta_j ||x - P_j x||^2
/// for kappa on the unit simplex. beta_j/kappa_j is 0 when beta_j = 0 and +inf
/// when kappa_j = 0 < beta_j (which makes the bound vacuous).
SlackReport prop1_slack(std::span<const SetSpec> sets, const BetaVector& beta, std::span<const double> kappa,
                        const Point& x, const Point& c);

/// ||Q_beta x - c||^2 <= ||x - c||^2 - min_{i in I} nu_i * max_{i in I} d^2(x, C_i).
/// I must be a nonempty subset of {0, ..., N-1}.
SlackReport thm1_slack(std::span<const SetSpec> sets, const BetaVector& beta, const IndexSet& indices,
                       const Point& x, const Point& c);
SlackReport thm1_slack(std::span<const SetSpec> sets, const BetaVector& beta, const IndexSet& indices,
                       const Point& x, const Point& c, const CoefficientFn& coefficient_fn);

struct Eq3Slack {
  /// ||Q_beta x - c||^2 <= ||x - c||^2 - (2 - s) sum_j beta_j d^2(x, C_j).
  SlackReport bound;
  /// prop1_slack at kappa_j = beta_j / s; algebraically identical to `bound`.
  SlackReport prop1_cross_check;
};

/// Requires s > 0.
Eq3Slack eq3_slack(std::span<const SetSpec> sets, const BetaVector& beta, const Point& x, const Point& c);

/// ||Q_beta y - Q_beta~ y|| <= sum_j |beta_j - beta~_j| d(y, C_j).
SlackReport perturb_step_gap(std::span<const SetSpec> sets, const BetaVector& beta, const BetaVector& beta_tilde,
                             const Point& y);

/// The weaker bound ||Q_beta y - Q_beta~ y|| <= sum_j |beta_j - beta~_j| ||y - c|| for c in the intersection.
SlackReport perturb_step_gap_via_reference(std::span<const SetSpec> sets, const BetaVector& beta,
                                           const BetaVector& beta_tilde, const Point& y, const Point& c);

/// <Px - Py, x - y> - ||Px - Py||^2, nonnegative for a firmly nonexpansive P.
double firm_nonexpansive_gap(const SetSpec& set, const Point& x, const Point& y);

/// Weights that turn the kappa-weighted bound into the per-index bound:
/// kappa_j = beta_j / 2 for j != i and kappa_i = 1 - sum_{j != i} beta_j / 2.
std::vector<double> substitution_kappa(const BetaVector& beta, std::size_t i);

/// How much stronger prop1_slack at substitution_kappa(beta, i) is than the
/// per-index bound ||x - c||^2 - min_{k in I} nu_k d^2(x, C_i); nonnegative
/// up to rounding. `i` must belong to `indices`.
double substitution_margin(std::span<const SetSpec> sets, const BetaVector& beta, const IndexSet& indices,
                           std::size_t i, const Point& x, const Point& c);

/// Nearest point of `set` to `x` found without the closed-form projector:
/// a grid scan locates a relative-interior point, then the boundary is traced
/// radially by bisection on membership and the closest boundary point is
/// refined by shrinking direction grids. Dimension must be <= 3.
Point brute_force_project(const SetSpec& set, const Point& x, double resolution = 1e-6);

/// N sets of mixed type in R^d, each containing `anchor`. Deterministic per seed.
/// The simplex is only drawn when it contains the anchor.
std::vector<SetSpec> random_feasible_instance(std::uint64_t seed, std::size_t dim, std::size_t count,
                                              const Point& anchor);

/// Outcome of one inequality family across a randomized sweep.
struct FamilyResult {
  std::string name;
  double min_slack = std::numeric_limits<double>::infinity();
  std::size_t checks = 0;
  std::size_t vacuous = 0;
  bool saw_nan = false;
  /// The family passes when min_slack >= -tolerance.
  double tolerance = kSlackTolerance;

  bool passed() const { return !saw_nan && min_slack >= -tolerance; }
};

struct VerifyOptions {
  std::size_t trials = 1000;
  std::uint64_t seed = 42;
  /// Coefficients used by the descent-bound family; replaceable for negative controls.
  CoefficientFn coefficient_fn = coefficients;
};

struct VerifyReport {
  std::vector<FamilyResult> families;
  bool all_passed() const;
};

/// Random instances with d in {1,2,3,5}, N in 1..5, random beta in B, kappa on
/// the simplex, c = the anchor every set contains.
VerifyReport run_inequality_sweep(const VerifyOptions& options);

}  // namespace relaxproj
