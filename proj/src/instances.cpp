#include <cmath>
#include <random>

#include "relaxproj/diagnostics.hpp"
#include "relaxproj/error.hpp"

namespace relaxproj {

namespace {

Point random_direction(std::mt19937_64& rng, std::size_t dim) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  while (true) {
    std::vector<double> v(dim);
    for (double& c : v) c = gauss(rng);
    Point p(std::move(v));
    if (norm(p) > 1e-3) return p;
  }
}

}  // namespace

std::vector<SetSpec> random_feasible_instance(std::uint64_t seed, std::size_t dim, std::size_t count,
                                              const Point& anchor) {
  if (dim < 1 || count < 1) throw InputError("random_feasible_instance: dimension and count must be >= 1");
  if (anchor.dim() != dim) throw InputError("random_feasible_instance: anchor dimension mismatch");

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const bool simplex_allowed = contains(SetSpec::simplex(), anchor, kMembershipTolerance);
  std::uniform_int_distribution<int> pick(0, simplex_allowed ? 4 : 3);

  std::vector<SetSpec> sets;
  sets.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    switch (pick(rng)) {
      case 0: {
        Point a = random_direction(rng, dim);
        const double margin = unit(rng) * norm(a);
        sets.push_back(SetSpec::half_space(a, dot(a, anchor) + margin));
        break;
      }
      case 1: {
        Point a = random_direction(rng, dim);
        sets.push_back(SetSpec::hyperplane(a, dot(a, anchor)));
        break;
      }
      case 2: {
        Point offset = random_direction(rng, dim);
        offset *= unit(rng) / std::max(1.0, norm(offset));
        Point center = anchor + offset;
        sets.push_back(SetSpec::ball(center, distance_between(center, anchor) + 0.1 + 0.9 * unit(rng)));
        break;
      }
      case 3: {
        std::vector<double> lo(dim), hi(dim);
        for (std::size_t i = 0; i < dim; ++i) {
          if (unit(rng) < 0.1) {
            lo[i] = hi[i] = anchor[i];
          } else {
            lo[i] = anchor[i] - unit(rng);
            hi[i] = anchor[i] + unit(rng);
          }
        }
        sets.push_back(SetSpec::box(Point(std::move(lo)), Point(std::move(hi))));
        break;
      }
      default:
        sets.push_back(SetSpec::simplex());
        break;
    }
  }
  return sets;
}

}  // namespace relaxproj
