#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "relaxproj/geometry.hpp"
#include "relaxproj/point.hpp"

namespace relaxproj {

/// Sorted, duplicate-free list of zero-based set indices.
using IndexSet = std::vector<std::size_t>;

/// Weights beta = (beta_1, ..., beta_N) with beta_i >= 0 and sum beta_i <= 2.
///
/// The operator built from beta only depends on the products lambda_i * alpha_i
/// of averaging weights and relaxation parameters, so this is the single
/// parameter every other component works with.
class BetaVector {
 public:
  /// Slack allowed on the constraint sum beta_i <= 2.
  static constexpr double kSumTolerance = 1e-12;

  /// Throws InputError if any weight is negative or non-finite, the vector is
  /// empty, or the weights sum to more than 2 + kSumTolerance.
  explicit BetaVector(std::vector<double> weights);

  static BetaVector zeros(std::size_t count);

  std::size_t size() const { return weights_.size(); }
  double operator[](std::size_t i) const { return weights_[i]; }
  std::span<const double> weights() const { return weights_; }

  /// s = sum of the weights.
  double sum() const { return sum_; }

  friend bool operator==(const BetaVector& a, const BetaVector& b) { return a.weights_ == b.weights_; }

 private:
  std::vector<double> weights_;
  double sum_ = 0.0;
};

/// A factorisation beta_i = lambda_i * alpha_i into relaxation parameters
/// alpha_i in [0, 2] and averaging weights lambda_i summing to 1.
struct AlphaLambda {
  std::vector<double> alphas;
  std::vector<double> lambdas;
};

/// Convergence coefficients of a single beta:
///   nu_i = 2 beta_i (2 - s) / (beta_i + 2 - s),   mu_i = 2 beta_i (2 - s).
struct CoefficientRow {
  double s = 0.0;
  std::vector<double> nu;
  std::vector<double> mu;
};

/// Q_beta(x) = x - sum_j beta_j (x - P_j x).
Point apply_q(const BetaVector& beta, std::span<const SetSpec> sets, const Point& x);

/// nu_i is 0 whenever beta_i is 0, including the 0/0 case beta_i = 0, s = 2.
CoefficientRow coefficients(const BetaVector& beta);

/// {i : beta_i > 0}.
IndexSet active_indices(const BetaVector& beta);

AlphaLambda decompose(const BetaVector& beta);

/// Smallest nu_i over `indices`, or 0 when `indices` is empty.
double min_over(std::span<const double> values, const IndexSet& indices);

}  // namespace relaxproj
