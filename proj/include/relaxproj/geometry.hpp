#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <variant>

#include "relaxproj/point.hpp"

namespace relaxproj {

/// {x : <normal, x> <= offset}
struct HalfSpace {
  Point normal;
  double offset;
};

/// {x : <normal, x> = offset}
struct Hyperplane {
  Point normal;
  double offset;
};

struct Ball {
  Point center;
  double radius;
};

/// Axis-aligned box; lower[i] == upper[i] pins coordinate i.
struct Box {
  Point lower;
  Point upper;
};

/// The probability simplex {x : x_i >= 0, sum x_i = 1} in whatever dimension
/// it is queried with.
struct Simplex {};

/// Membership slack for points that are supposed to lie in a set.
inline constexpr double kMembershipTolerance = 1e-12;

/// A closed convex set with a closed-form projector. Instances are validated on
/// construction and immutable afterwards.
class SetSpec {
 public:
  using Shape = std::variant<HalfSpace, Hyperplane, Ball, Box, Simplex>;

  static SetSpec half_space(Point normal, double offset);
  static SetSpec hyperplane(Point normal, double offset);
  static SetSpec ball(Point center, double radius);
  static SetSpec box(Point lower, Point upper);
  static SetSpec simplex();

  const Shape& shape() const { return shape_; }

  /// Ambient dimension; empty for the simplex, which adapts to its argument.
  std::optional<std::size_t> dimension() const;

  /// "halfspace", "hyperplane", "ball", "box" or "simplex".
  std::string_view type_name() const;

 private:
  explicit SetSpec(Shape shape) : shape_(std::move(shape)) {}

  Shape shape_;
};

/// Nearest point of `set` to `x`.
Point project(const SetSpec& set, const Point& x);

/// ||x - project(set, x)||.
double distance(const SetSpec& set, const Point& x);

/// True iff every defining constraint holds within `tol`. Linear constraints
/// are measured as signed Euclidean distances to their boundary.
bool contains(const SetSpec& set, const Point& x, double tol = kMembershipTolerance);

/// Throws InputError if `x` cannot be an argument of `set`.
void require_compatible(const SetSpec& set, const Point& x);

}  // namespace relaxproj
