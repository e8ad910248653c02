#include <algorithm>
#include <array>
#include <cmath>
#include <random>

#include "relaxproj/diagnostics.hpp"

namespace relaxproj {

namespace {

// Random weights on the unit simplex, with some coordinates forced to zero.
std::vector<double> random_simplex_weights(std::mt19937_64& rng, std::size_t count, double zero_probability) {
  std::exponential_distribution<double> expo(1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> w(count);
  double total = 0.0;
  for (double& v : w) {
    v = unit(rng) < zero_probability ? 0.0 : expo(rng);
    total += v;
  }
  if (total == 0.0) {
    w[std::uniform_int_distribution<std::size_t>(0, count - 1)(rng)] = 1.0;
    return w;
  }
  for (double& v : w) v /= total;
  return w;
}

BetaVector random_beta(std::mt19937_64& rng, std::size_t count) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double roll = unit(rng);
  double s = 2.0 * unit(rng);
  if (roll < 0.15) s = 2.0;
  else if (roll < 0.2) s = 0.0;
  std::vector<double> w = random_simplex_weights(rng, count, 0.25);
  for (double& v : w) v *= s;
  return BetaVector(std::move(w));
}

Point random_point(std::mt19937_64& rng, std::size_t dim, double half_width) {
  std::uniform_real_distribution<double> coord(-half_width, half_width);
  std::vector<double> v(dim);
  for (double& c : v) c = coord(rng);
  return Point(std::move(v));
}

void record(FamilyResult& family, double slack, bool vacuous = false) {
  ++family.checks;
  if (std::isnan(slack)) {
    family.saw_nan = true;
    return;
  }
  if (vacuous) {
    ++family.vacuous;
    return;
  }
  family.min_slack = std::min(family.min_slack, slack);
}

}  // namespace

VerifyReport run_inequality_sweep(const VerifyOptions& options) {
  VerifyReport report;
  report.families = {{"prop1"},           {"thm1"},          {"eq3"}, {"eq3_vs_prop1"}, {"perturb_step"},
                     {"firm_nonexpansive"}, {"thm1_substitution"}};
  auto& prop1 = report.families[0];
  auto& thm1 = report.families[1];
  auto& eq3 = report.families[2];
  auto& eq3_cross = report.families[3];
  auto& perturb = report.families[4];
  auto& firm = report.families[5];
  auto& substitution = report.families[6];
  eq3_cross.tolerance = 1e-12;

  constexpr std::array<std::size_t, 4> kDims{1, 2, 3, 5};
  for (std::size_t trial = 0; trial < options.trials; ++trial) {
    std::mt19937_64 rng(options.seed * 0x9E3779B97F4A7C15ULL + trial);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const std::size_t dim = kDims[trial % kDims.size()];
    const std::size_t count = 1 + std::uniform_int_distribution<std::size_t>(0, 4)(rng);

    // A quarter of the anchors lie on the simplex so that it can be drawn.
    const Point anchor = unit(rng) < 0.25 ? Point(random_simplex_weights(rng, dim, 0.3)) : random_point(rng, dim, 1.0);
    const auto sets = random_feasible_instance(rng(), dim, count, anchor);

    const double roll = unit(rng);
    Point x = random_point(rng, dim, 3.0);
    if (roll < 0.05) x = anchor;
    else if (roll < 0.1) x = project(sets.front(), x);

    const BetaVector beta = random_beta(rng, count);
    const std::vector<double> kappa = random_simplex_weights(rng, count, 0.15);

    const SlackReport p1 = prop1_slack(sets, beta, kappa, x, anchor);
    record(prop1, p1.slack, p1.vacuous);

    const IndexSet active = active_indices(beta);
    if (!active.empty()) {
      record(thm1, thm1_slack(sets, beta, active, x, anchor, options.coefficient_fn).slack);
      IndexSet subset;
      for (std::size_t i : active) {
        if (unit(rng) < 0.5) subset.push_back(i);
      }
      if (!subset.empty()) record(thm1, thm1_slack(sets, beta, subset, x, anchor, options.coefficient_fn).slack);
      for (std::size_t i : active) record(substitution, substitution_margin(sets, beta, active, i, x, anchor));
    }

    if (beta.sum() > 0.0) {
      const Eq3Slack e3 = eq3_slack(sets, beta, x, anchor);
      record(eq3, e3.bound.slack);
      record(eq3_cross, -std::abs(e3.bound.slack - e3.prop1_cross_check.slack));
    }

    const BetaVector beta_tilde = random_beta(rng, count);
    record(perturb, perturb_step_gap(sets, beta, beta_tilde, x).slack);

    for (const auto& set : sets) {
      const Point y = random_point(rng, dim, 3.0);
      record(firm, firm_nonexpansive_gap(set, x, y));
    }
  }
  return report;
}

}  // namespace relaxproj
