#include <doctest.h>

#include <random>

#include "relaxproj/diagnostics.hpp"
#include "relaxproj/error.hpp"
#include "relaxproj/geometry.hpp"
#include "test_support.hpp"

using namespace relaxproj;
using relaxproj::testing::max_abs_diff;
using relaxproj::testing::random_point;

namespace {

std::vector<SetSpec> sample_sets_2d() {
  return {SetSpec::half_space({1.0, -2.0}, 0.5), SetSpec::hyperplane({3.0, 4.0}, 5.0),
          SetSpec::ball({0.5, -0.25}, 1.25),     SetSpec::box({-1.0, 0.0}, {0.5, 2.0}),
          SetSpec::box({0.3, -1.0}, {0.3, 1.0}), SetSpec::simplex()};
}

}  // namespace

TEST_CASE("project: closed forms") {
  SUBCASE("point already in a halfspace is returned unchanged") {
    CHECK(project(SetSpec::half_space({1.0, 0.0}, 0.0), {-1.0, 5.0}) == Point{-1.0, 5.0});
  }
  SUBCASE("ball: radial shrink agrees with the grid oracle") {
    const SetSpec ball = SetSpec::ball({0.0, 0.0}, 1.0);
    const Point p = project(ball, {3.0, 4.0});
    CHECK(p[0] == doctest::Approx(0.6).epsilon(1e-15));
    CHECK(p[1] == doctest::Approx(0.8).epsilon(1e-15));
    CHECK(max_abs_diff(p, brute_force_project(ball, {3.0, 4.0})) < 1e-5);
  }
  SUBCASE("simplex: uniform KKT shift when all coordinates stay positive") {
    const Point x{0.3, 0.2};
    const double shift = (1.0 - (x[0] + x[1])) / 2.0;
    const Point p = project(SetSpec::simplex(), x);
    CHECK(p[0] == doctest::Approx(x[0] + shift).epsilon(1e-15));
    CHECK(p[1] == doctest::Approx(x[1] + shift).epsilon(1e-15));
    CHECK(max_abs_diff(p, Point{0.55, 0.45}) < 1e-15);
    CHECK(max_abs_diff(p, brute_force_project(SetSpec::simplex(), x)) < 1e-5);
  }
  SUBCASE("simplex with clipped coordinates and ties") {
    const Point p = project(SetSpec::simplex(), {2.0, 2.0, -5.0});
    CHECK(max_abs_diff(p, Point{0.5, 0.5, 0.0}) < 1e-15);
  }
  SUBCASE("degenerate box pins the coordinate") {
    const Point p = project(SetSpec::box({1.0, 0.0}, {1.0, 2.0}), {5.0, 3.0});
    CHECK(p == Point{1.0, 2.0});
  }
}

TEST_CASE("distance") {
  CHECK(distance(SetSpec::half_space({1.0, 0.0}, 0.0), {2.0, 3.0}) == doctest::Approx(2.0));
  CHECK(distance(SetSpec::ball({0.0, 0.0}, 1.0), {3.0, 4.0}) == doctest::Approx(4.0).epsilon(1e-15));
  for (const auto& set : sample_sets_2d()) {
    const Point inside = project(set, {0.7, 0.2});
    CHECK(distance(set, inside) < 1e-15);
  }
  // Half-space formula (<a,x> - b)/||a|| for a non-unit normal.
  CHECK(distance(SetSpec::half_space({3.0, 4.0}, 5.0), {3.0, 4.0}) == doctest::Approx((25.0 - 5.0) / 5.0));
}

TEST_CASE("contains") {
  CHECK(contains(SetSpec::box({0.0, 0.0}, {1.0, 1.0}), {0.5, 0.5}, 0.0));
  CHECK(contains(SetSpec::hyperplane({1.0, 0.0}, 0.0), {1e-13, 1.0}, 1e-12));
  CHECK_FALSE(contains(SetSpec::half_space({1.0, 0.0}, 0.0), {0.1, 0.0}, 1e-12));
  CHECK_FALSE(contains(SetSpec::simplex(), {0.5, 0.4}, 1e-12));
  CHECK(contains(SetSpec::simplex(), {0.5, 0.5}, 0.0));
  CHECK_THROWS_AS(contains(SetSpec::simplex(), {0.5, 0.5}, -1.0), InputError);
}

TEST_CASE("constructors reject invalid sets") {
  CHECK_THROWS_AS(SetSpec::half_space({0.0, 0.0}, 1.0), InputError);
  CHECK_THROWS_AS(SetSpec::hyperplane({0.0}, 1.0), InputError);
  CHECK_THROWS_AS(SetSpec::ball({0.0, 0.0}, 0.0), InputError);
  CHECK_THROWS_AS(SetSpec::ball({0.0, 0.0}, -1.0), InputError);
  CHECK_THROWS_AS(SetSpec::box({0.0, 2.0}, {1.0, 1.0}), InputError);
  CHECK_THROWS_AS(SetSpec::box({0.0}, {1.0, 1.0}), InputError);
  CHECK_THROWS_AS(Point(std::vector<double>{}), InputError);
  CHECK_THROWS_AS(Point({1.0, std::nan("")}), InputError);
  CHECK_NOTHROW(SetSpec::box({1.0, 1.0}, {1.0, 1.0}));
}

TEST_CASE("dimension mismatch is an input error") {
  const SetSpec ball = SetSpec::ball({0.0, 0.0}, 1.0);
  CHECK_THROWS_AS(project(ball, {1.0, 2.0, 3.0}), InputError);
  CHECK_THROWS_AS(distance(ball, {1.0}), InputError);
  CHECK_THROWS_AS(contains(ball, {1.0}, 0.0), InputError);
  // The simplex adapts to any dimension.
  CHECK_NOTHROW(project(SetSpec::simplex(), {1.0, 2.0, 3.0, 4.0}));
}

TEST_CASE("projection properties on random instances") {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t dim = 1 + static_cast<std::size_t>(trial % 5);
    const Point anchor = random_point(rng, dim, 1.0);
    const auto sets = random_feasible_instance(rng(), dim, 3, anchor);
    for (const auto& set : sets) {
      const Point x = random_point(rng, dim, 4.0);
      const Point y = random_point(rng, dim, 4.0);
      const Point px = project(set, x);
      const Point py = project(set, y);

      CHECK(contains(set, px, kMembershipTolerance));
      CHECK(max_abs_diff(project(set, px), px) <= 1e-12);
      // Firmly nonexpansive.
      CHECK(squared_norm(px - py) <= dot(px - py, x - y) + 1e-10);
      // Variational inequality against sampled members of the set.
      CHECK(dot(py - px, x - px) <= 1e-10);
      CHECK(dot(anchor - px, x - px) <= 1e-10);
    }
  }
}

TEST_CASE("projection matches the grid oracle in 2-D") {
  std::mt19937_64 rng(7);
  for (const auto& set : sample_sets_2d()) {
    for (int trial = 0; trial < 6; ++trial) {
      const Point x = random_point(rng, 2, 3.0);
      CHECK(max_abs_diff(project(set, x), brute_force_project(set, x)) < 1e-5);
    }
  }
}
