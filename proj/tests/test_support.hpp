#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "relaxproj/geometry.hpp"
#include "relaxproj/point.hpp"
#include "relaxproj/relaxed_operator.hpp"

namespace relaxproj::testing {

inline Point random_point(std::mt19937_64& rng, std::size_t dim, double half_width) {
  std::uniform_real_distribution<double> u(-half_width, half_width);
  std::vector<double> v(dim);
  for (double& c : v) c = u(rng);
  return Point(std::move(v));
}

/// Uniform-ish beta in B: random total in [0, 2] split by exponential weights.
inline BetaVector random_beta(std::mt19937_64& rng, std::size_t count, double max_sum = 2.0) {
  std::exponential_distribution<double> e(1.0);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> w(count);
  double total = 0.0;
  for (double& v : w) total += (v = e(rng));
  const double s = max_sum * u(rng);
  for (double& v : w) v *= s / total;
  return BetaVector(std::move(w));
}

inline double max_abs_diff(const Point& a, const Point& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace relaxproj::testing
