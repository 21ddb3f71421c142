#pragma once

#include <Eigen/Dense>
#include <vector>

namespace rangevol {

/// Result of the mean-constrained minimum-variance weight solve:
/// weights = Sigma^-1 1 / (1' Sigma^-1 1), variance = 1 / (1' Sigma^-1 1),
/// efficiency = 2 / variance (improvement factor over the classical c^2).
struct OptimalWeightsResult {
  std::vector<double> weights;
  double variance = 0.0;
  double efficiency = 0.0;
  /// Spectral condition number estimate of the input matrix.
  double condition = 0.0;
  /// Set when condition exceeds 1e12 (warn, not fail).
  bool ill_conditioned = false;
};

/// Minimum-variance weights for a mean-1 combination of unbiased estimators
/// with covariance `sigma` (n x n, n >= 2). Solves Sigma x = 1 by LDLT
/// factorization (no explicit inverse). Rejects non-symmetric input
/// (tolerance 1e-10 relative) and non-positive-definite input, each with a
/// distinct message.
OptimalWeightsResult solve_optimal_weights(const Eigen::MatrixXd& sigma);

}  // namespace rangevol
