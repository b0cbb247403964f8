#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "oscar/market_data.hpp"
#include "oscar/tangent.hpp"

// Cardinality-constrained asset selection. select_oscar implements the
// Optimize / Select-with-Cholesky / Re-optimize pipeline; the four companions
// are the standard selection baselines it is benchmarked against. Every
// heuristic returns the subset re-optimized as a tangent portfolio.
namespace oscar {

enum class Heuristic { Oscar, TopSharpe, TopWeight, Forward, Backward, Exact };

std::string_view heuristic_name(Heuristic h);
std::optional<Heuristic> heuristic_from_name(std::string_view name);

/// Full ranking of the assets, best first. The ranking is k-independent:
/// the best k-subset under the transformed-weight criterion is always the
/// length-k prefix, so one ordering serves every cardinality.
struct SelectionOrder {
  std::vector<int> ranked_assets;  // permutation of 0..n-1
  std::vector<double> scores;      // ranking statistic, non-increasing
};

struct SparsePortfolio {
  std::vector<int> support;   // ascending asset indices, size <= k
  Eigen::VectorXd weights;    // length n, exactly zero off support
  double sharpe = 0.0;
  Heuristic heuristic = Heuristic::Oscar;
  double wall_time = 0.0;     // seconds, selection + re-optimization only
  double jitter_applied = 0.0;      // largest conditioning jitter used by any solve
  bool budget_degenerate = false;   // final re-optimization left weights unnormalized
  std::vector<std::string> warnings;
};

/// Ranks assets by |L^T w_hat| descending (ties by ascending index), where
/// w_hat is the unconstrained tangent direction and L the Cholesky factor of
/// the conditioned covariance.
SelectionOrder oscar_order(const MomentEstimate& moments);

/// Solves the tangent problem restricted to `support` and embeds the result
/// back into an n-vector. Shared by every heuristic and by the exhaustive
/// search, so equal supports yield bit-identical portfolios.
SparsePortfolio reoptimize_on_support(const MomentEstimate& moments,
                                      std::vector<int> support, Heuristic tag);

SparsePortfolio select_oscar(const MomentEstimate& moments, int k);
SparsePortfolio select_topk_sharpe(const MomentEstimate& moments, int k);
SparsePortfolio select_topk_weight(const MomentEstimate& moments, int k);
SparsePortfolio select_forward(const MomentEstimate& moments, int k);
SparsePortfolio select_backward(const MomentEstimate& moments, int k);

/// Dispatch by tag. Heuristic::Exact is not a selection heuristic; use
/// solve_exact instead.
SparsePortfolio select(const MomentEstimate& moments, Heuristic heuristic, int k);

}  // namespace oscar
