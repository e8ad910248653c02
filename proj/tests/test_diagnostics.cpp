#include <doctest.h>

#include <random>
#include <set>

#include "relaxproj/diagnostics.hpp"
#include "relaxproj/error.hpp"
#include "test_support.hpp"

using namespace relaxproj;
using relaxproj::testing::max_abs_diff;
using relaxproj::testing::random_beta;
using relaxproj::testing::random_point;

namespace {

// C_1 = C_2 = {t <= 0} in one dimension.
std::vector<SetSpec> left_ray_twice() {
  const SetSpec ray = SetSpec::half_space({1.0}, 0.0);
  return {ray, ray};
}

}  // namespace

TEST_CASE("prop1_slack on a tight instance") {
  const auto sets = left_ray_twice();
  const std::vector<double> half{0.5, 0.5};
  CHECK(prop1_slack(sets, BetaVector({0.5, 0.5}), half, {1.0}, {0.0}).slack == doctest::Approx(0.0));
  CHECK(prop1_slack(sets, BetaVector::zeros(2), half, {1.0}, {0.0}).slack == 0.0);

  const auto vac = prop1_slack(sets, BetaVector({0.5, 0.0}), std::vector<double>{0.0, 1.0}, {1.0}, {0.0});
  CHECK(vac.vacuous);
  CHECK(vac.slack == INFINITY);
  // beta_j = 0 with kappa_j = 0 contributes nothing.
  CHECK_FALSE(prop1_slack(sets, BetaVector({0.0, 0.5}), std::vector<double>{0.0, 1.0}, {1.0}, {0.0}).vacuous);

  CHECK_THROWS_AS(prop1_slack(sets, BetaVector({0.5, 0.5}), std::vector<double>{0.5, 0.6}, {1.0}, {0.0}),
                  InputError);
  CHECK_THROWS_AS(prop1_slack(sets, BetaVector({0.5, 0.5}), std::vector<double>{1.5, -0.5}, {1.0}, {0.0}),
                  InputError);
  CHECK_THROWS_AS(prop1_slack(sets, BetaVector({0.5, 0.5}), half, {1.0}, {0.5}), InputError);
}

TEST_CASE("thm1_slack") {
  const auto sets = left_ray_twice();
  const auto r = thm1_slack(sets, BetaVector({0.5, 0.5}), {0, 1}, {1.0}, {0.0});
  CHECK(r.lhs == doctest::Approx(0.0));
  CHECK(r.rhs == doctest::Approx(1.0 / 3.0));
  CHECK(r.slack == doctest::Approx(1.0 / 3.0));
  CHECK(thm1_slack(sets, BetaVector({0.5, 0.5}), {0, 1}, {-2.0}, {-2.0}).slack == 0.0);
  CHECK_THROWS_AS(thm1_slack(sets, BetaVector({0.5, 0.5}), {}, {1.0}, {0.0}), InputError);
  CHECK_THROWS_AS(thm1_slack(sets, BetaVector({0.5, 0.5}), {2}, {1.0}, {0.0}), InputError);
}

TEST_CASE("eq3_slack, including s = 2") {
  const auto sets = left_ray_twice();
  const auto r = eq3_slack(sets, BetaVector({0.5, 0.5}), {1.0}, {0.0});
  CHECK(r.bound.slack == doctest::Approx(0.0));
  CHECK(r.bound.slack == doctest::Approx(r.prop1_cross_check.slack).epsilon(1e-12));

  // s = 2: Qx = 1 - 1 - 1 = -1, nothing is subtracted.
  const auto edge = eq3_slack(sets, BetaVector({1.0, 1.0}), {1.0}, {0.0});
  CHECK(edge.bound.lhs == doctest::Approx(1.0));
  CHECK(edge.bound.rhs == doctest::Approx(1.0));
  CHECK(edge.bound.slack == doctest::Approx(0.0));

  CHECK(eq3_slack(sets, BetaVector({0.5, 0.5}), {-1.0}, {0.0}).bound.slack == 0.0);
  CHECK_THROWS_AS(eq3_slack(sets, BetaVector::zeros(2), {1.0}, {0.0}), InputError);
}

TEST_CASE("perturb_step_gap") {
  const auto sets = left_ray_twice();
  const BetaVector beta({0.5, 0.5});
  const auto same = perturb_step_gap(sets, beta, beta, {1.0});
  CHECK(same.lhs == 0.0);
  CHECK(same.slack == 0.0);

  const auto tight = perturb_step_gap(sets, beta, BetaVector({0.5, 0.3}), {1.0});
  CHECK(tight.lhs == doctest::Approx(0.2));
  CHECK(tight.rhs == doctest::Approx(0.2));
  CHECK(tight.slack == doctest::Approx(0.0).scale(1.0));

  const auto weak = perturb_step_gap_via_reference(sets, beta, BetaVector({0.5, 0.3}), {1.0}, {-1.0});
  CHECK(weak.rhs == doctest::Approx(0.4));
}

TEST_CASE("firm_nonexpansive_gap") {
  const SetSpec ball = SetSpec::ball({0.0, 0.0}, 1.0);
  CHECK(firm_nonexpansive_gap(ball, {3.0, 0.0}, {0.0, 3.0}) == doctest::Approx(4.0));
  CHECK(firm_nonexpansive_gap(ball, {3.0, 1.0}, {3.0, 1.0}) == 0.0);
}

TEST_CASE("substitution kappa is at least as strong as the per-index bound") {
  const BetaVector beta({0.5, 0.25, 0.75});
  const auto kappa = substitution_kappa(beta, 1);
  CHECK(kappa[0] == doctest::Approx(0.25));
  CHECK(kappa[2] == doctest::Approx(0.375));
  CHECK(kappa[1] == doctest::Approx(1.0 - 0.625));

  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t dim = 2, count = 1 + static_cast<std::size_t>(trial % 4);
    const Point c = random_point(rng, dim, 1.0);
    const auto sets = random_feasible_instance(rng(), dim, count, c);
    const BetaVector b = random_beta(rng, count);
    const auto active = active_indices(b);
    const Point x = random_point(rng, dim, 4.0);
    for (std::size_t i : active) CHECK(substitution_margin(sets, b, active, i, x, c) >= -1e-10);
  }
}

TEST_CASE("brute_force_project on known projections") {
  const Point p = brute_force_project(SetSpec::ball({0.0, 0.0}, 1.0), {3.0, 4.0});
  CHECK(max_abs_diff(p, Point{0.6, 0.8}) < 1e-5);
  CHECK(max_abs_diff(brute_force_project(SetSpec::box({0.0, 0.0}, {1.0, 1.0}), {2.0, -1.0}), Point{1.0, 0.0}) <
        1e-5);
  CHECK(brute_force_project(SetSpec::ball({0.0, 0.0}, 1.0), {0.2, 0.1}) == Point{0.2, 0.1});
  CHECK_THROWS_AS(brute_force_project(SetSpec::simplex(), {0.1, 0.2, 0.3, 0.4}), InputError);
}

TEST_CASE("random_feasible_instance") {
  const Point origin{0.0, 0.0};
  const auto a = random_feasible_instance(11, 2, 5, origin);
  const auto b = random_feasible_instance(11, 2, 5, origin);
  REQUIRE(a.size() == 5);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].type_name() == b[i].type_name());
    CHECK(project(a[i], {3.0, -2.0}) == project(b[i], {3.0, -2.0}));
  }

  std::set<std::string> variants;
  std::mt19937_64 rng(3);
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const std::size_t dim = 1 + seed % 4;
    const Point anchor = seed % 3 == 0 ? Point::zeros(dim) : random_point(rng, dim, 1.0);
    for (const auto& set : random_feasible_instance(seed, dim, 4, anchor)) {
      CHECK(contains(set, anchor, 1e-9));
      variants.insert(std::string(set.type_name()));
    }
  }
  CHECK(variants.size() >= 4);
}

TEST_CASE("inequality sweep passes and the corrupted formula is caught") {
  const auto report = run_inequality_sweep({.trials = 1000, .seed = 42});
  for (const auto& f : report.families) {
    INFO(f.name << " min_slack=" << f.min_slack);
    CHECK(f.passed());
    CHECK(f.checks > 0);
  }
  CHECK(report.all_passed());

  VerifyOptions corrupted{.trials = 200, .seed = 42};
  corrupted.coefficient_fn = [](const BetaVector& beta) {
    auto row = coefficients(beta);
    for (double& v : row.nu) v *= 3.0;
    return row;
  };
  CHECK_FALSE(run_inequality_sweep(corrupted).all_passed());
}
