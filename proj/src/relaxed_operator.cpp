#include "relaxproj/relaxed_operator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "relaxproj/error.hpp"

namespace relaxproj {

BetaVector::BetaVector(std::vector<double> weights) : weights_(std::move(weights)) {
  if (weights_.empty()) throw InputError("beta must have at least one weight");
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    const double w = weights_[i];
    if (!std::isfinite(w) || w < 0.0) {
      throw InputError("beta_" + std::to_string(i + 1) + " must be finite and nonnegative");
    }
    sum_ += w;
  }
  if (sum_ > 2.0 + kSumTolerance) {
    throw InputError("beta violates the constraint sum(beta) <= 2 (sum = " + std::to_string(sum_) + ")");
  }
}

BetaVector BetaVector::zeros(std::size_t count) { return BetaVector(std::vector<double>(count, 0.0)); }

Point apply_q(const BetaVector& beta, std::span<const SetSpec> sets, const Point& x) {
  if (sets.size() != beta.size()) {
    throw InputError("apply_q: " + std::to_string(beta.size()) + " weights for " + std::to_string(sets.size()) +
                     " sets");
  }
  Point out = x;
  for (std::size_t j = 0; j < sets.size(); ++j) {
    if (beta[j] == 0.0) {
      require_compatible(sets[j], x);
      continue;
    }
    out -= beta[j] * (x - project(sets[j], x));
  }
  return out;
}

CoefficientRow coefficients(const BetaVector& beta) {
  CoefficientRow row;
  row.s = beta.sum();
  // s may exceed 2 by at most BetaVector::kSumTolerance.
  const double margin = std::max(0.0, 2.0 - row.s);
  row.nu.resize(beta.size());
  row.mu.resize(beta.size());
  for (std::size_t i = 0; i < beta.size(); ++i) {
    const double b = beta[i];
    row.mu[i] = 2.0 * b * margin;
    row.nu[i] = b == 0.0 ? 0.0 : 2.0 * b * margin / (b + margin);
  }
  return row;
}

IndexSet active_indices(const BetaVector& beta) {
  IndexSet out;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    if (beta[i] > 0.0) out.push_back(i);
  }
  return out;
}

AlphaLambda decompose(const BetaVector& beta) {
  const std::size_t n = beta.size();
  AlphaLambda out;
  const double s = beta.sum();
  if (s > 0.0) {
    // alpha_i = s sits in [0, 2] up to the constructor's tolerance.
    out.alphas.assign(n, std::min(s, 2.0));
    out.lambdas.resize(n);
    for (std::size_t i = 0; i < n; ++i) out.lambdas[i] = beta[i] / s;
  } else {
    out.alphas.assign(n, 0.0);
    out.lambdas.assign(n, 1.0 / static_cast<double>(n));
  }
  return out;
}

double min_over(std::span<const double> values, const IndexSet& indices) {
  if (indices.empty()) return 0.0;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i : indices) best = std::min(best, values[i]);
  return best;
}

}  // namespace relaxproj
