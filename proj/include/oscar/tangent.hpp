#pragma once

#include <Eigen/Dense>

#include "oscar/market_data.hpp"
#include "oscar/spd_linalg.hpp"

// Unconstrained tangent-portfolio solve, Sharpe ratio evaluation and the
// angle between portfolios in Cholesky-transformed space.
namespace oscar {

struct Portfolio {
  Eigen::VectorXd weights;
  bool normalized = false;  // true iff the weights sum to one
};

/// Result of one tangent solve. The factor belongs to the conditioned
/// covariance of the instance that was solved and can be reused for
/// transforms; jitter is recorded on it.
struct TangentSolution {
  Portfolio portfolio;
  CholeskyFactor factor;
  bool budget_degenerate = false;  // 1^T Sigma^-1 mu <= 0: weights left unnormalized
};

/// Maximizes mu^T w / sqrt(w^T Sigma w) in closed form: the direction is
/// Sigma^-1 mu. When the component sum of that direction is positive the
/// weights are scaled to sum to one; otherwise the direction is returned as
/// is and flagged, since no positive rescaling can reach the unit budget.
TangentSolution solve_tangent(const Eigen::VectorXd& mu, const Eigen::MatrixXd& sigma,
                              double max_jitter = kDefaultMaxJitter);
TangentSolution solve_tangent(const MomentEstimate& moments,
                              double max_jitter = kDefaultMaxJitter);

/// mu^T w / sqrt(w^T Sigma w). Throws DegenerateRiskError when the variance
/// is not meaningfully positive.
double sharpe(const Eigen::VectorXd& weights, const MomentEstimate& moments);
double sharpe(const Portfolio& portfolio, const MomentEstimate& moments);

/// Angle in radians between L^T w and L^T ref, cosine clamped to [-1, 1].
double angle_to(const Eigen::VectorXd& w, const Eigen::VectorXd& ref,
                const CholeskyFactor& factor);

}  // namespace oscar
