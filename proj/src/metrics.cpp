#include "oscar/metrics.hpp"

#include <cmath>
#include <string>

#include "oscar/errors.hpp"

namespace oscar {

double performance_ratio(const SparsePortfolio& heuristic, const OracleResult& oracle) {
  if (!std::isfinite(heuristic.sharpe) || !std::isfinite(oracle.best.sharpe)) {
    throw ValidationError("performance_ratio: non-finite Sharpe ratio");
  }
  if (!(oracle.best.sharpe > 0.0)) {
    throw UndefinedRatioError("performance_ratio: reference Sharpe ratio " +
                              std::to_string(oracle.best.sharpe) + " is not positive");
  }
  return 100.0 * heuristic.sharpe / oracle.best.sharpe;
}

int hit_count(const std::vector<int>& h_support, const std::vector<int>& oracle_support) {
  if (h_support.size() != oracle_support.size()) {
    throw ValidationError("hit_count: supports have different sizes");
  }
  // Both supports are kept sorted ascending.
  int hits = 0;
  std::size_t i = 0, j = 0;
  while (i < h_support.size() && j < oracle_support.size()) {
    if (h_support[i] == oracle_support[j]) {
      ++hits;
      ++i;
      ++j;
    } else if (h_support[i] < oracle_support[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  return hits;
}

double diagonal_dominance(const Eigen::MatrixXd& sigma) {
  const Eigen::Index n = sigma.rows();
  if (n < 2 || sigma.cols() != n) {
    throw ValidationError("diagonal_dominance: need a square matrix with n >= 2");
  }
  const double diag_sum = sigma.diagonal().cwiseAbs().sum();
  const double total_sum = sigma.cwiseAbs().sum();
  const double m_d = diag_sum / static_cast<double>(n);
  const double m_o = (total_sum - diag_sum) / static_cast<double>(n * n - n);
  return m_d / (m_d + m_o);
}

double pearson_correlation(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size() || xs.size() < 3) {
    throw ValidationError("pearson_correlation: need equally sized samples of length >= 3");
  }
  const double inv = 1.0 / static_cast<double>(xs.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx *= inv;
  my *= inv;

  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double dx = xs[i] - mx;
    const double dy = ys[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (!(sxx > 0.0) || !(syy > 0.0)) {
    throw ValidationError("pearson_correlation: zero variance in a sample");
  }
  return sxy / std::sqrt(sxx * syy);
}

}  // namespace oscar
