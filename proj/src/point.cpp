#include "relaxproj/point.hpp"

#include <cmath>
#include <string>

#include "relaxproj/error.hpp"

namespace relaxproj {

namespace {

void validate(const std::vector<double>& coords) {
  if (coords.empty()) throw InputError("point must have dimension >= 1");
  for (double c : coords) {
    if (!std::isfinite(c)) throw InputError("point components must be finite");
  }
}

}  // namespace

Point::Point(std::initializer_list<double> coords) : coords_(coords) { validate(coords_); }

Point::Point(std::vector<double> coords) : coords_(std::move(coords)) { validate(coords_); }

Point Point::zeros(std::size_t dim) { return Point(std::vector<double>(dim, 0.0)); }

Point& Point::operator+=(const Point& other) {
  require_same_dim(*this, other, "point addition");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

Point& Point::operator-=(const Point& other) {
  require_same_dim(*this, other, "point subtraction");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

Point& Point::operator*=(double factor) {
  for (double& c : coords_) c *= factor;
  return *this;
}

Point operator+(Point lhs, const Point& rhs) { return lhs += rhs; }
Point operator-(Point lhs, const Point& rhs) { return lhs -= rhs; }
Point operator*(double factor, Point p) { return p *= factor; }

double dot(const Point& a, const Point& b) {
  require_same_dim(a, b, "dot product");
  double acc = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) acc += a[i] * b[i];
  return acc;
}

double squared_norm(const Point& a) { return dot(a, a); }

double norm(const Point& a) { return std::sqrt(squared_norm(a)); }

double distance_between(const Point& a, const Point& b) { return norm(a - b); }

void require_same_dim(const Point& a, const Point& b, const char* what) {
  if (a.dim() != b.dim()) {
    throw InputError(std::string(what) + ": dimension mismatch (" + std::to_string(a.dim()) +
                     " vs " + std::to_string(b.dim()) + ")");
  }
}

}  // namespace relaxproj
