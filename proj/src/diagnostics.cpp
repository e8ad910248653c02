#include "relaxproj/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "relaxproj/error.hpp"

namespace relaxproj {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kKappaSumTolerance = 1e-12;
constexpr double kReferenceTolerance = 1e-9;

void require_counts(std::span<const SetSpec> sets, const BetaVector& beta, const char* what) {
  if (sets.size() != beta.size()) {
    throw InputError(std::string(what) + ": " + std::to_string(beta.size()) + " weights for " +
                     std::to_string(sets.size()) + " sets");
  }
}

void require_in_intersection(std::span<const SetSpec> sets, const Point& c, const char* what) {
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (!contains(sets[i], c, kReferenceTolerance)) {
      throw InputError(std::string(what) + ": reference point is not in set " + std::to_string(i + 1));
    }
  }
}

std::vector<double> squared_distances(std::span<const SetSpec> sets, const Point& x) {
  std::vector<double> out(sets.size());
  for (std::size_t j = 0; j < sets.size(); ++j) out[j] = squared_norm(x - project(sets[j], x));
  return out;
}

SlackReport make_report(double lhs, double rhs) { return {lhs, rhs, rhs - lhs, false}; }

SlackReport vacuous_report(double lhs) { return {lhs, kInf, kInf, true}; }

}  // namespace

SlackReport prop1_slack(std::span<const SetSpec> sets, const BetaVector& beta, std::span<const double> kappa,
                        const Point& x, const Point& c) {
  require_counts(sets, beta, "prop1_slack");
  if (kappa.size() != beta.size()) throw InputError("prop1_slack: kappa and beta lengths differ");
  double kappa_sum = 0.0;
  for (double k : kappa) {
    if (!std::isfinite(k) || k < 0.0) throw InputError("prop1_slack: kappa must be nonnegative");
    kappa_sum += k;
  }
  if (std::abs(kappa_sum - 1.0) > kKappaSumTolerance) throw InputError("prop1_slack: kappa must sum to 1");
  require_in_intersection(sets, c, "prop1_slack");

  const double lhs = squared_norm(apply_q(beta, sets, x) - c);
  for (std::size_t j = 0; j < beta.size(); ++j) {
    if (beta[j] > 0.0 && kappa[j] == 0.0) return vacuous_report(lhs);
  }
  const std::vector<double> d2 = squared_distances(sets, x);
  double subtracted = 0.0;
  for (std::size_t j = 0; j < beta.size(); ++j) {
    if (beta[j] == 0.0) continue;
    subtracted += (2.0 - beta[j] / kappa[j]) * beta[j] * d2[j];
  }
  return make_report(lhs, squared_norm(x - c) - subtracted);
}

SlackReport thm1_slack(std::span<const SetSpec> sets, const BetaVector& beta, const IndexSet& indices,
                       const Point& x, const Point& c) {
  return thm1_slack(sets, beta, indices, x, c, coefficients);
}

SlackReport thm1_slack(std::span<const SetSpec> sets, const BetaVector& beta, const IndexSet& indices,
                       const Point& x, const Point& c, const CoefficientFn& coefficient_fn) {
  require_counts(sets, beta, "thm1_slack");
  if (indices.empty()) throw InputError("thm1_slack: index set must be nonempty");
  for (std::size_t i : indices) {
    if (i >= beta.size()) throw InputError("thm1_slack: index out of range");
  }
  require_in_intersection(sets, c, "thm1_slack");

  const CoefficientRow row = coefficient_fn(beta);
  const std::vector<double> d2 = squared_distances(sets, x);
  double max_d2 = 0.0;
  for (std::size_t i : indices) max_d2 = std::max(max_d2, d2[i]);
  const double lhs = squared_norm(apply_q(beta, sets, x) - c);
  return make_report(lhs, squared_norm(x - c) - min_over(row.nu, indices) * max_d2);
}

Eq3Slack eq3_slack(std::span<const SetSpec> sets, const BetaVector& beta, const Point& x, const Point& c) {
  require_counts(sets, beta, "eq3_slack");
  const double s = beta.sum();
  if (!(s > 0.0)) throw InputError("eq3_slack: requires sum(beta) > 0");
  require_in_intersection(sets, c, "eq3_slack");

  const std::vector<double> d2 = squared_distances(sets, x);
  double weighted = 0.0;
  for (std::size_t j = 0; j < beta.size(); ++j) weighted += beta[j] * d2[j];
  const double lhs = squared_norm(apply_q(beta, sets, x) - c);

  std::vector<double> kappa(beta.size());
  for (std::size_t j = 0; j < beta.size(); ++j) kappa[j] = beta[j] / s;
  // Renormalise so rounding in beta_j / s never trips the simplex check.
  double kappa_sum = 0.0;
  for (double k : kappa) kappa_sum += k;
  for (double& k : kappa) k /= kappa_sum;

  return {make_report(lhs, squared_norm(x - c) - (2.0 - s) * weighted), prop1_slack(sets, beta, kappa, x, c)};
}

SlackReport perturb_step_gap(std::span<const SetSpec> sets, const BetaVector& beta, const BetaVector& beta_tilde,
                             const Point& y) {
  require_counts(sets, beta, "perturb_step_gap");
  require_counts(sets, beta_tilde, "perturb_step_gap");
  double bound = 0.0;
  for (std::size_t j = 0; j < sets.size(); ++j) {
    const double delta = std::abs(beta[j] - beta_tilde[j]);
    if (delta > 0.0) bound += delta * distance(sets[j], y);
  }
  return make_report(distance_between(apply_q(beta, sets, y), apply_q(beta_tilde, sets, y)), bound);
}

SlackReport perturb_step_gap_via_reference(std::span<const SetSpec> sets, const BetaVector& beta,
                                           const BetaVector& beta_tilde, const Point& y, const Point& c) {
  require_counts(sets, beta, "perturb_step_gap");
  require_counts(sets, beta_tilde, "perturb_step_gap");
  require_in_intersection(sets, c, "perturb_step_gap");
  double total = 0.0;
  for (std::size_t j = 0; j < sets.size(); ++j) total += std::abs(beta[j] - beta_tilde[j]);
  return make_report(distance_between(apply_q(beta, sets, y), apply_q(beta_tilde, sets, y)),
                     total * distance_between(y, c));
}

double firm_nonexpansive_gap(const SetSpec& set, const Point& x, const Point& y) {
  require_same_dim(x, y, "firm_nonexpansive_gap");
  const Point diff = project(set, x) - project(set, y);
  return dot(diff, x - y) - squared_norm(diff);
}

std::vector<double> substitution_kappa(const BetaVector& beta, std::size_t i) {
  if (i >= beta.size()) throw InputError("substitution_kappa: index out of range");
  std::vector<double> kappa(beta.size());
  double others = 0.0;
  for (std::size_t j = 0; j < beta.size(); ++j) {
    if (j == i) continue;
    kappa[j] = 0.5 * beta[j];
    others += kappa[j];
  }
  kappa[i] = std::max(0.0, 1.0 - others);
  return kappa;
}

double substitution_margin(std::span<const SetSpec> sets, const BetaVector& beta, const IndexSet& indices,
                           std::size_t i, const Point& x, const Point& c) {
  if (!std::binary_search(indices.begin(), indices.end(), i)) {
    throw InputError("substitution_margin: index must belong to the index set");
  }
  std::vector<double> kappa = substitution_kappa(beta, i);
  double kappa_sum = 0.0;
  for (double k : kappa) kappa_sum += k;
  if (std::abs(kappa_sum - 1.0) > kKappaSumTolerance) {
    for (double& k : kappa) k /= kappa_sum;
  }
  const SlackReport via_kappa = prop1_slack(sets, beta, kappa, x, c);
  const CoefficientRow row = coefficients(beta);
  const double per_index_bound = squared_norm(x - c) - min_over(row.nu, indices) * squared_norm(x - project(sets[i], x));
  return per_index_bound - via_kappa.rhs;
}

bool VerifyReport::all_passed() const {
  return std::all_of(families.begin(), families.end(), [](const FamilyResult& f) { return f.passed(); });
}

}  // namespace relaxproj
