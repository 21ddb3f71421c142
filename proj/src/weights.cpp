#include "rangevol/weights.hpp"

#include <cmath>
#include <stdexcept>

namespace rangevol {

OptimalWeightsResult solve_optimal_weights(const Eigen::MatrixXd& sigma) {
  const Eigen::Index n = sigma.rows();
  if (n < 2 || sigma.cols() != n)
    throw std::invalid_argument("solve_optimal_weights: need a square matrix, n >= 2");

  const double scale = sigma.cwiseAbs().maxCoeff();
  if (!(scale > 0.0) || !sigma.allFinite())
    throw std::invalid_argument("solve_optimal_weights: matrix entries must be finite");
  if ((sigma - sigma.transpose()).cwiseAbs().maxCoeff() > 1e-10 * scale)
    throw std::invalid_argument("solve_optimal_weights: matrix is not symmetric");

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(sigma, Eigen::EigenvaluesOnly);
  const double lo = eig.eigenvalues().minCoeff();
  const double hi = eig.eigenvalues().maxCoeff();
  if (!(lo > 0.0))
    throw std::invalid_argument("solve_optimal_weights: matrix is not positive definite");

  OptimalWeightsResult out;
  out.condition = hi / lo;
  out.ill_conditioned = out.condition > 1e12;

  Eigen::LDLT<Eigen::MatrixXd> ldlt(sigma);
  if (ldlt.info() != Eigen::Success)
    throw std::invalid_argument("solve_optimal_weights: factorization failed");
  const Eigen::VectorXd x = ldlt.solve(Eigen::VectorXd::Ones(n));
  const double denom = x.sum();  // 1' Sigma^-1 1 > 0 for SPD sigma
  out.variance = 1.0 / denom;
  out.efficiency = 2.0 * denom;
  out.weights.resize(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i)
    out.weights[static_cast<std::size_t>(i)] = x(i) / denom;
  return out;
}

}  // namespace rangevol
