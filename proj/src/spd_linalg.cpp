#include "oscar/spd_linalg.hpp"

#include <cmath>
#include <string>

#include "oscar/log.hpp"

namespace oscar {

namespace {

void check_symmetric(const Eigen::MatrixXd& sigma) {
  if (sigma.rows() != sigma.cols()) {
    throw ValidationError("matrix must be square, got " + std::to_string(sigma.rows()) +
                          "x" + std::to_string(sigma.cols()));
  }
  if (!sigma.allFinite()) {
    throw ValidationError("matrix contains non-finite entries");
  }
  const double scale = std::max(1.0, sigma.cwiseAbs().maxCoeff());
  const double asym = (sigma - sigma.transpose()).cwiseAbs().maxCoeff();
  if (asym > 1e-10 * scale) {
    throw ValidationError("matrix is not symmetric: max asymmetry " + std::to_string(asym));
  }
}

// Shared ladder: factors sigma + lambda*I into l_out, returns the lambda used.
double run_jitter_ladder(const Eigen::MatrixXd& sigma, double max_jitter,
                         Eigen::MatrixXd& l_out) {
  if (try_cholesky_lower(sigma, l_out) < 0) return 0.0;

  const int n = static_cast<int>(sigma.rows());
  Eigen::MatrixXd shifted(sigma.rows(), sigma.cols());
  for (int exp10 = -12;; ++exp10) {
    const double lambda = std::pow(10.0, exp10);
    if (lambda > max_jitter * (1.0 + 1e-12)) break;
    shifted = sigma;
    shifted.diagonal().array() += lambda;
    if (try_cholesky_lower(shifted, l_out) < 0) {
      log::info("conditioned matrix of dimension " + std::to_string(n) +
                " with jitter " + std::to_string(lambda));
      return lambda;
    }
  }
  throw IrrecoverableMatrixError("no jitter up to " + std::to_string(max_jitter) +
                                 " makes the matrix positive definite");
}

}  // namespace

int try_cholesky_lower(const Eigen::MatrixXd& a, Eigen::MatrixXd& l) {
  const int n = static_cast<int>(a.rows());
  l.setZero(n, n);
  for (int j = 0; j < n; ++j) {
    const double d = a(j, j) - l.row(j).head(j).squaredNorm();
    if (!(d > 0.0)) return j;
    l(j, j) = std::sqrt(d);
    for (int i = j + 1; i < n; ++i) {
      const double sum = l.row(i).head(j).dot(l.row(j).head(j));
      l(i, j) = (a(i, j) - sum) / l(j, j);
    }
  }
  return -1;
}

CholeskyFactor cholesky(const Eigen::MatrixXd& sigma) {
  check_symmetric(sigma);
  CholeskyFactor factor;
  const int pivot = try_cholesky_lower(sigma, factor.l);
  if (pivot >= 0) {
    const double value = sigma(pivot, pivot) - factor.l.row(pivot).head(pivot).squaredNorm();
    throw NotPositiveDefiniteError(pivot, value);
  }
  return factor;
}

std::pair<Eigen::MatrixXd, double> condition_spd(const Eigen::MatrixXd& sigma,
                                                 double max_jitter) {
  check_symmetric(sigma);
  Eigen::MatrixXd l;
  const double lambda = run_jitter_ladder(sigma, max_jitter, l);
  Eigen::MatrixXd conditioned = sigma;
  if (lambda > 0.0) conditioned.diagonal().array() += lambda;
  return {std::move(conditioned), lambda};
}

CholeskyFactor factor_conditioned(const Eigen::MatrixXd& sigma, double max_jitter) {
  check_symmetric(sigma);
  CholeskyFactor factor;
  factor.jitter_applied = run_jitter_ladder(sigma, max_jitter, factor.l);
  return factor;
}

Eigen::VectorXd solve_spd(const CholeskyFactor& factor, const Eigen::VectorXd& b) {
  if (b.size() != factor.l.rows()) {
    throw ValidationError("solve_spd: vector length " + std::to_string(b.size()) +
                          " does not match dimension " + std::to_string(factor.l.rows()));
  }
  Eigen::VectorXd y = factor.l.triangularView<Eigen::Lower>().solve(b);
  return factor.l.transpose().triangularView<Eigen::Upper>().solve(y);
}

Eigen::VectorXd transform_by_lt(const CholeskyFactor& factor, const Eigen::VectorXd& w) {
  if (w.size() != factor.l.rows()) {
    throw ValidationError("transform_by_lt: vector length " + std::to_string(w.size()) +
                          " does not match dimension " + std::to_string(factor.l.rows()));
  }
  return factor.l.transpose() * w;
}

}  // namespace oscar
