#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "relaxproj/diagnostics.hpp"
#include "relaxproj/error.hpp"

namespace relaxproj {

namespace {

using Params = std::vector<double>;

// The affine hull of a set written as z(t) = origin + sum_i t_i generators[i],
// with membership expressed on the parameters t.
struct Chart {
  std::vector<double> origin;
  std::vector<std::vector<double>> generators;
  std::function<bool(const Params&)> feasible;
  // Search box in parameter space; contains a relative-interior region of the set.
  Params lower, upper;

  std::size_t rank() const { return generators.size(); }

  std::vector<double> embed(const Params& t) const {
    std::vector<double> z = origin;
    for (std::size_t i = 0; i < generators.size(); ++i) {
      for (std::size_t j = 0; j < z.size(); ++j) z[j] += t[i] * generators[i][j];
    }
    return z;
  }
};

double sq_dist(const std::vector<double>& a, std::span<const double> b) {
  double acc = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) acc += (a[j] - b[j]) * (a[j] - b[j]);
  return acc;
}

double dot_span(std::span<const double> a, std::span<const double> b) {
  double acc = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) acc += a[j] * b[j];
  return acc;
}

std::vector<double> unit(std::size_t dim, std::size_t i) {
  std::vector<double> e(dim, 0.0);
  e[i] = 1.0;
  return e;
}

Chart identity_chart(std::size_t dim, std::function<bool(const Params&)> feasible, Params lower, Params upper) {
  Chart chart;
  chart.origin.assign(dim, 0.0);
  for (std::size_t i = 0; i < dim; ++i) chart.generators.push_back(unit(dim, i));
  chart.feasible = std::move(feasible);
  chart.lower = std::move(lower);
  chart.upper = std::move(upper);
  return chart;
}

Chart make_chart(const SetSpec& set, const Point& x) {
  const std::size_t dim = x.dim();
  const double x_norm = norm(x);

  if (const auto* s = std::get_if<HalfSpace>(&set.shape())) {
    const double extent = std::abs(s->offset) / norm(s->normal);
    const double r = 2.0 * (x_norm + extent) + 1.0;
    const Point a = s->normal;
    const double b = s->offset;
    return identity_chart(
        dim, [a, b](const Params& t) { return dot_span(a.coords(), t) <= b; }, Params(dim, -r), Params(dim, r));
  }
  if (const auto* s = std::get_if<Ball>(&set.shape())) {
    const Point c = s->center;
    const double radius = s->radius;
    Params lo(dim), hi(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      lo[i] = c[i] - radius;
      hi[i] = c[i] + radius;
    }
    return identity_chart(
        dim,
        [c, radius](const Params& t) {
          double acc = 0.0;
          for (std::size_t i = 0; i < t.size(); ++i) acc += (t[i] - c[i]) * (t[i] - c[i]);
          return acc <= radius * radius;
        },
        lo, hi);
  }
  if (const auto* s = std::get_if<Box>(&set.shape())) {
    Chart chart;
    chart.origin.assign(dim, 0.0);
    std::vector<std::size_t> free;
    for (std::size_t i = 0; i < dim; ++i) {
      if (s->lower[i] == s->upper[i]) {
        chart.origin[i] = s->lower[i];
      } else {
        free.push_back(i);
        chart.generators.push_back(unit(dim, i));
        chart.lower.push_back(s->lower[i]);
        chart.upper.push_back(s->upper[i]);
      }
    }
    const Params lo = chart.lower, hi = chart.upper;
    chart.feasible = [lo, hi](const Params& t) {
      for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i] < lo[i] || t[i] > hi[i]) return false;
      }
      return true;
    };
    return chart;
  }
  if (const auto* s = std::get_if<Hyperplane>(&set.shape())) {
    // Orthonormal basis of the normal's complement by Gram-Schmidt on e_1..e_d.
    const double a2 = squared_norm(s->normal);
    std::vector<std::vector<double>> basis{std::vector<double>(s->normal.coords().begin(), s->normal.coords().end())};
    for (double& v : basis.front()) v /= std::sqrt(a2);
    Chart chart;
    for (std::size_t i = 0; i < dim && basis.size() < dim; ++i) {
      std::vector<double> v = unit(dim, i);
      for (const auto& q : basis) {
        const double proj = dot_span(v, q);
        for (std::size_t j = 0; j < dim; ++j) v[j] -= proj * q[j];
      }
      const double len = std::sqrt(dot_span(v, v));
      if (len < 1e-8) continue;
      for (double& c : v) c /= len;
      basis.push_back(v);
      chart.generators.push_back(v);
    }
    chart.origin.resize(dim);
    for (std::size_t j = 0; j < dim; ++j) chart.origin[j] = s->offset * s->normal[j] / a2;
    const double r = 2.0 * (x_norm + std::abs(s->offset) / std::sqrt(a2)) + 1.0;
    chart.lower.assign(chart.rank(), -r);
    chart.upper.assign(chart.rank(), r);
    chart.feasible = [](const Params&) { return true; };
    return chart;
  }
  // Simplex: z_i = t_i for i < d - 1, z_{d-1} = 1 - sum t.
  Chart chart;
  chart.origin = unit(dim, dim - 1);
  for (std::size_t i = 0; i + 1 < dim; ++i) {
    std::vector<double> g = unit(dim, i);
    g[dim - 1] = -1.0;
    chart.generators.push_back(g);
  }
  chart.lower.assign(chart.rank(), 0.0);
  chart.upper.assign(chart.rank(), 1.0);
  chart.feasible = [](const Params& t) {
    double total = 0.0;
    for (double v : t) {
      if (v < 0.0) return false;
      total += v;
    }
    return total <= 1.0;
  };
  return chart;
}

// Minimises a convex function over a box by nested golden-section searches.
Params nested_golden(const std::function<double(const Params&)>& f, const Params& lo, const Params& hi) {
  const std::size_t k = lo.size();
  constexpr double kRatio = 0.6180339887498949;
  Params t(k, 0.0);

  std::function<double(std::size_t)> solve = [&](std::size_t level) -> double {
    if (level == k) return f(t);
    double a = lo[level], b = hi[level];
    const auto eval = [&](double v) {
      t[level] = v;
      return solve(level + 1);
    };
    double c = b - kRatio * (b - a), d = a + kRatio * (b - a);
    double fc = eval(c), fd = eval(d);
    for (int it = 0; it < 90 && b - a > 1e-15 * (1.0 + std::abs(a) + std::abs(b)); ++it) {
      if (fc <= fd) {
        b = d;
        d = c;
        fd = fc;
        c = b - kRatio * (b - a);
        fc = eval(c);
      } else {
        a = c;
        c = d;
        fc = fd;
        d = a + kRatio * (b - a);
        fd = eval(d);
      }
    }
    return eval(0.5 * (a + b));
  };
  solve(0);
  return t;
}

Params interior_point(const Chart& chart, std::span<const double> x) {
  const std::size_t k = chart.rank();
  for (int grid = 41; grid <= 331; grid = 2 * grid - 1) {
    Params h(k);
    for (std::size_t i = 0; i < k; ++i) h[i] = (chart.upper[i] - chart.lower[i]) / (grid - 1);
    Params best, fallback;
    double best_val = std::numeric_limits<double>::infinity(), fallback_val = best_val;
    std::vector<int> idx(k, 0);
    while (true) {
      Params t(k);
      for (std::size_t i = 0; i < k; ++i) t[i] = chart.lower[i] + idx[i] * h[i];
      if (chart.feasible(t)) {
        const double val = sq_dist(chart.embed(t), x);
        bool interior = true;
        for (std::size_t i = 0; i < k && interior; ++i) {
          for (double sign : {-1.0, 1.0}) {
            Params nb = t;
            nb[i] += sign * h[i];
            if (!chart.feasible(nb)) interior = false;
          }
        }
        if (interior && val < best_val) {
          best_val = val;
          best = t;
        }
        if (val < fallback_val) {
          fallback_val = val;
          fallback = t;
        }
      }
      std::size_t pos = 0;
      while (pos < k && ++idx[pos] == grid) idx[pos++] = 0;
      if (pos == k) break;
    }
    if (!best.empty()) return best;
    if (!fallback.empty() && grid * 2 - 1 > 331) return fallback;
  }
  throw std::runtime_error("brute_force_project: no feasible grid point found");
}

// Largest rho in [0, limit] with origin + rho * dir feasible, to machine precision.
double boundary_distance(const Chart& chart, const Params& origin, const Params& dir, double limit) {
  const auto at = [&](double rho) {
    Params t = origin;
    for (std::size_t i = 0; i < t.size(); ++i) t[i] += rho * dir[i];
    return t;
  };
  if (chart.feasible(at(limit))) return limit;
  double lo = 0.0, hi = limit;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (chart.feasible(at(mid)) ? lo : hi) = mid;
  }
  return lo;
}

Params direction(const Params& angles) {
  if (angles.empty()) return {};
  if (angles.size() == 1) return {std::cos(angles[0]), std::sin(angles[0])};
  const double sp = std::sin(angles[1]);
  return {sp * std::cos(angles[0]), sp * std::sin(angles[0]), std::cos(angles[1])};
}

}  // namespace

Point brute_force_project(const SetSpec& set, const Point& x, double resolution) {
  require_compatible(set, x);
  if (x.dim() > 3) throw InputError("brute_force_project: supported only in dimension <= 3");
  if (!(resolution > 0.0)) throw InputError("brute_force_project: resolution must be positive");

  const Chart chart = make_chart(set, x);
  const std::size_t k = chart.rank();
  if (k == 0) return Point(chart.origin);

  const auto objective = [&](const Params& t) { return sq_dist(chart.embed(t), x.coords()); };

  // Unconstrained minimiser over the affine hull; the answer when it is feasible.
  Params free_min;
  bool full_rank_identity = chart.rank() == x.dim() && std::all_of(chart.origin.begin(), chart.origin.end(),
                                                                    [](double v) { return v == 0.0; });
  if (full_rank_identity) {
    free_min.assign(x.coords().begin(), x.coords().end());
  } else {
    double scale = 1.0 + norm(x);
    for (double v : chart.origin) scale += std::abs(v);
    free_min = nested_golden(objective, Params(k, -4.0 * scale), Params(k, 4.0 * scale));
  }
  if (chart.feasible(free_min)) {
    return full_rank_identity ? x : Point(chart.embed(free_min));
  }

  // Otherwise the answer is on the relative boundary: trace it radially from
  // an interior point and minimise over directions.
  const Params centre = interior_point(chart, x.coords());
  double limit = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    limit += (chart.upper[i] - chart.lower[i]) * (chart.upper[i] - chart.lower[i]);
    limit += (free_min[i] - centre[i]) * (free_min[i] - centre[i]);
  }
  limit = 4.0 * std::sqrt(limit) + 1.0;

  const auto boundary_point = [&](const Params& angles) {
    const Params dir = direction(angles);
    const double rho = boundary_distance(chart, centre, dir, limit);
    Params t = centre;
    for (std::size_t i = 0; i < k; ++i) t[i] += rho * dir[i];
    return t;
  };

  if (k == 1) {
    const Params plus = boundary_point({0.0});
    const Params minus = boundary_point({std::numbers::pi});
    return Point(chart.embed(objective(plus) <= objective(minus) ? plus : minus));
  }

  // Coarse scan over directions, then shrinking grids around the best one.
  const std::size_t angle_dims = k - 1;
  Params best_angles(angle_dims, 0.0);
  double best_val = std::numeric_limits<double>::infinity();
  const int scan = angle_dims == 1 ? 720 : 120;
  const double range0 = 2.0 * std::numbers::pi;
  const double range1 = std::numbers::pi;
  for (int i = 0; i < scan; ++i) {
    const int inner = angle_dims == 1 ? 1 : scan / 2 + 1;
    for (int j = 0; j < inner; ++j) {
      Params angles{range0 * i / scan};
      if (angle_dims == 2) angles.push_back(range1 * j / (inner - 1));
      const double val = objective(boundary_point(angles));
      if (val < best_val) {
        best_val = val;
        best_angles = angles;
      }
    }
  }

  const int half = angle_dims == 1 ? 10 : 5;
  double window = range0 / scan;
  while (window * limit > 1e-4 * resolution && window > 1e-15) {
    const Params centre_angles = best_angles;
    const int outer = 2 * half + 1;
    const int inner = angle_dims == 1 ? 1 : outer;
    for (int i = 0; i < outer; ++i) {
      for (int j = 0; j < inner; ++j) {
        Params angles = centre_angles;
        angles[0] += window * (i - half) / half;
        if (angle_dims == 2) angles[1] += window * (j - half) / half;
        const double val = objective(boundary_point(angles));
        if (val < best_val) {
          best_val = val;
          best_angles = angles;
        }
      }
    }
    window *= 2.0 / half;
  }
  return Point(chart.embed(boundary_point(best_angles)));
}

}  // namespace relaxproj
