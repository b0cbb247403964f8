#pragma once

#include <vector>

#include "oscar/market_data.hpp"
#include "oscar/sparse_select.hpp"

// Ground truth by exhaustive enumeration: every k-subset is re-optimized as a
// tangent portfolio and the best Sharpe ratio wins. Subsets are visited in
// lexicographic order so partial (budget-limited) runs are reproducible.
namespace oscar {

struct OracleResult {
  SparsePortfolio best;               // tagged Heuristic::Exact
  long long subsets_evaluated = 0;
  bool exhausted = false;             // true iff all C(n,k) subsets were tried
  double budget_seconds = 0.0;
  std::vector<std::vector<int>> skipped;  // subsets whose sub-solve failed
};

/// C(n, k) as a double; saturates instead of overflowing.
double binomial_approx(int n, int k);

/// Enumerates all C(n,k) supports, keeping the maximum-Sharpe one (ties go to
/// the lexicographically smallest subset). Stops when the wall-clock budget
/// expires and flags the result as not exhausted. Failed sub-instances are
/// skipped and recorded, never silently dropped.
OracleResult solve_exact(const MomentEstimate& moments, int k,
                         double budget_seconds = 300.0);

}  // namespace oscar
