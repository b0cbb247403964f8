#pragma once

#include <Eigen/Dense>
#include <utility>

#include "oscar/errors.hpp"

// Symmetric-positive-definite kernel: Cholesky factorization, triangular
// solves, and the jitter ladder that conditions near-singular covariance
// matrices. All dense double precision; no pivoting.
namespace oscar {

inline constexpr double kDefaultMaxJitter = 1e-6;

/// Lower-triangular factor L with L * L^T equal to the (conditioned) input.
struct CholeskyFactor {
  Eigen::MatrixXd l;
  double jitter_applied = 0.0;  // diagonal shift that was added, 0 if none

  int n() const { return static_cast<int>(l.rows()); }
};

/// In-place kernel: factors `a` (reading its lower triangle) into `l`.
/// Returns -1 on success, otherwise the 0-based index of the failing pivot.
/// `l` is resized and fully overwritten. No input validation.
int try_cholesky_lower(const Eigen::MatrixXd& a, Eigen::MatrixXd& l);

/// Plain Cholesky factorization. Fails rather than conditioning: a
/// non-positive pivot throws NotPositiveDefiniteError with the pivot index.
CholeskyFactor cholesky(const Eigen::MatrixXd& sigma);

/// Adds the smallest lambda * I, lambda in {0, 1e-12, 1e-11, ..., max_jitter}
/// (powers of ten), for which the Cholesky factorization succeeds. Returns the
/// conditioned matrix and the lambda used; throws IrrecoverableMatrixError if
/// no rung of the ladder works.
std::pair<Eigen::MatrixXd, double> condition_spd(const Eigen::MatrixXd& sigma,
                                                 double max_jitter);

/// condition_spd followed by cholesky, without factoring twice. The returned
/// factor records the jitter that was applied.
CholeskyFactor factor_conditioned(const Eigen::MatrixXd& sigma,
                                  double max_jitter = kDefaultMaxJitter);

/// Solves (L L^T) x = b by forward then backward substitution.
Eigen::VectorXd solve_spd(const CholeskyFactor& factor, const Eigen::VectorXd& b);

/// Returns L^T * w, the map under which portfolio angles order Sharpe ratios.
Eigen::VectorXd transform_by_lt(const CholeskyFactor& factor, const Eigen::VectorXd& w);

}  // namespace oscar
