#pragma once

#include <Eigen/Dense>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "oscar/exact_oracle.hpp"
#include "oscar/sparse_select.hpp"

// Evaluation metrics: heuristic-vs-oracle performance ratio, support overlap,
// the diagonal-dominance measure of a covariance matrix, and Pearson
// correlation for aggregating sweeps.
namespace oscar {

/// 100 * heuristic Sharpe / oracle Sharpe. Throws UndefinedRatioError when the
/// oracle Sharpe is not positive.
double performance_ratio(const SparsePortfolio& heuristic, const OracleResult& oracle);

/// Size of the intersection of two equally sized supports.
int hit_count(const std::vector<int>& h_support, const std::vector<int>& oracle_support);

/// m_d / (m_d + m_o) with m_d the mean absolute diagonal entry and m_o the
/// mean absolute off-diagonal entry. 1.0 for diagonal matrices; lower values
/// mean stronger asset interdependence.
double diagonal_dominance(const Eigen::MatrixXd& sigma);

double pearson_correlation(std::span<const double> xs, std::span<const double> ys);

/// One benchmark cell: a heuristic run on one instance at one cardinality,
/// compared against the oracle when it ran.
struct BenchRecord {
  std::string instance_id;
  int n = 0;
  int k = 0;
  Heuristic heuristic = Heuristic::Oscar;
  double sharpe = 0.0;
  std::optional<double> performance_pct;  // absent when no oracle reference
  std::optional<int> hit_count;           // absent when no oracle reference
  double wall_time = 0.0;
  bool oracle_exhausted = false;
  double jitter_applied = 0.0;
  double dominance = 0.0;
};

}  // namespace oscar
