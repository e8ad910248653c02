#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace relaxproj {

/// A point of R^d, d >= 1, with finite double components.
class Point {
 public:
  Point(std::initializer_list<double> coords);
  explicit Point(std::vector<double> coords);

  /// The origin of R^d.
  static Point zeros(std::size_t dim);

  std::size_t dim() const { return coords_.size(); }
  double operator[](std::size_t i) const { return coords_[i]; }
  std::span<const double> coords() const { return coords_; }

  Point& operator+=(const Point& other);
  Point& operator-=(const Point& other);
  Point& operator*=(double factor);

  friend bool operator==(const Point&, const Point&) = default;

 private:
  std::vector<double> coords_;
};

Point operator+(Point lhs, const Point& rhs);
Point operator-(Point lhs, const Point& rhs);
Point operator*(double factor, Point p);

double dot(const Point& a, const Point& b);
double norm(const Point& a);
double squared_norm(const Point& a);
double distance_between(const Point& a, const Point& b);

/// Throws InputError unless both points live in the same space.
void require_same_dim(const Point& a, const Point& b, const char* what);

}  // namespace relaxproj
