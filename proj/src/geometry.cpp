#include "relaxproj/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "relaxproj/error.hpp"

namespace relaxproj {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require_nonzero_normal(const Point& normal, const char* what) {
  if (!(norm(normal) > 0.0)) throw InputError(std::string(what) + ": normal vector must be nonzero");
}

void require_finite(double value, const char* what) {
  if (!std::isfinite(value)) throw InputError(std::string(what) + " must be finite");
}

// Signed distance of x to the hyperplane <a, x> = b, positive on the side a points to.
double signed_offset(const Point& normal, double offset, const Point& x) {
  return (dot(normal, x) - offset) / norm(normal);
}

Point shift_along(const Point& x, const Point& normal, double offset) {
  const double t = (dot(normal, x) - offset) / squared_norm(normal);
  return x - t * normal;
}

Point project_onto_simplex(const Point& x) {
  std::vector<double> sorted(x.coords().begin(), x.coords().end());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  double prefix = 0.0;
  double threshold = 0.0;
  for (std::size_t j = 0; j < sorted.size(); ++j) {
    prefix += sorted[j];
    const double candidate = (prefix - 1.0) / static_cast<double>(j + 1);
    if (sorted[j] - candidate > 0.0) threshold = candidate;
  }
  std::vector<double> out(x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i) out[i] = std::max(x[i] - threshold, 0.0);
  return Point(std::move(out));
}

}  // namespace

SetSpec SetSpec::half_space(Point normal, double offset) {
  require_nonzero_normal(normal, "halfspace");
  require_finite(offset, "halfspace offset");
  return SetSpec(HalfSpace{std::move(normal), offset});
}

SetSpec SetSpec::hyperplane(Point normal, double offset) {
  require_nonzero_normal(normal, "hyperplane");
  require_finite(offset, "hyperplane offset");
  return SetSpec(Hyperplane{std::move(normal), offset});
}

SetSpec SetSpec::ball(Point center, double radius) {
  if (!(radius > 0.0) || !std::isfinite(radius)) throw InputError("ball: radius must be positive and finite");
  return SetSpec(Ball{std::move(center), radius});
}

SetSpec SetSpec::box(Point lower, Point upper) {
  require_same_dim(lower, upper, "box bounds");
  for (std::size_t i = 0; i < lower.dim(); ++i) {
    if (lower[i] > upper[i]) {
      throw InputError("box: lower bound exceeds upper bound in coordinate " + std::to_string(i));
    }
  }
  return SetSpec(Box{std::move(lower), std::move(upper)});
}

SetSpec SetSpec::simplex() { return SetSpec(Simplex{}); }

std::optional<std::size_t> SetSpec::dimension() const {
  return std::visit(Overloaded{
                        [](const HalfSpace& s) -> std::optional<std::size_t> { return s.normal.dim(); },
                        [](const Hyperplane& s) -> std::optional<std::size_t> { return s.normal.dim(); },
                        [](const Ball& s) -> std::optional<std::size_t> { return s.center.dim(); },
                        [](const Box& s) -> std::optional<std::size_t> { return s.lower.dim(); },
                        [](const Simplex&) -> std::optional<std::size_t> { return std::nullopt; },
                    },
                    shape_);
}

std::string_view SetSpec::type_name() const {
  static constexpr std::string_view kNames[] = {"halfspace", "hyperplane", "ball", "box", "simplex"};
  return kNames[shape_.index()];
}

void require_compatible(const SetSpec& set, const Point& x) {
  const auto dim = set.dimension();
  if (dim && *dim != x.dim()) {
    throw InputError(std::string(set.type_name()) + ": dimension mismatch (set has " + std::to_string(*dim) +
                     ", point has " + std::to_string(x.dim()) + ")");
  }
}

Point project(const SetSpec& set, const Point& x) {
  require_compatible(set, x);
  return std::visit(Overloaded{
                        [&](const HalfSpace& s) {
                          return dot(s.normal, x) <= s.offset ? x : shift_along(x, s.normal, s.offset);
                        },
                        [&](const Hyperplane& s) { return shift_along(x, s.normal, s.offset); },
                        [&](const Ball& s) {
                          const Point offset = x - s.center;
                          const double r = norm(offset);
                          if (r <= s.radius) return x;
                          return s.center + (s.radius / r) * offset;
                        },
                        [&](const Box& s) {
                          std::vector<double> out(x.dim());
                          for (std::size_t i = 0; i < x.dim(); ++i) out[i] = std::clamp(x[i], s.lower[i], s.upper[i]);
                          return Point(std::move(out));
                        },
                        [&](const Simplex&) { return project_onto_simplex(x); },
                    },
                    set.shape());
}

double distance(const SetSpec& set, const Point& x) { return distance_between(x, project(set, x)); }

bool contains(const SetSpec& set, const Point& x, double tol) {
  if (!(tol >= 0.0)) throw InputError("contains: tolerance must be nonnegative");
  require_compatible(set, x);
  return std::visit(Overloaded{
                        [&](const HalfSpace& s) { return signed_offset(s.normal, s.offset, x) <= tol; },
                        [&](const Hyperplane& s) { return std::abs(signed_offset(s.normal, s.offset, x)) <= tol; },
                        [&](const Ball& s) { return distance_between(x, s.center) <= s.radius + tol; },
                        [&](const Box& s) {
                          for (std::size_t i = 0; i < x.dim(); ++i) {
                            if (x[i] < s.lower[i] - tol || x[i] > s.upper[i] + tol) return false;
                          }
                          return true;
                        },
                        [&](const Simplex&) {
                          double total = 0.0;
                          for (double c : x.coords()) {
                            if (c < -tol) return false;
                            total += c;
                          }
                          return std::abs(total - 1.0) <= tol;
                        },
                    },
                    set.shape());
}

}  // namespace relaxproj
