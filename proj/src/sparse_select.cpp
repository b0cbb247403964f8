#include "oscar/sparse_select.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "oscar/errors.hpp"

namespace oscar {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void check_k(const MomentEstimate& m, int k) {
  if (k < 1 || k > m.n()) {
    throw ValidationError("cardinality k = " + std::to_string(k) +
                          " must be in [1, " + std::to_string(m.n()) + "]");
  }
}

// Indices sorted by score descending, ties broken by ascending index.
std::vector<int> rank_desc(const Eigen::VectorXd& scores) {
  std::vector<int> idx(static_cast<std::size_t>(scores.size()));
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    if (scores[a] != scores[b]) return scores[a] > scores[b];
    return a < b;
  });
  return idx;
}

std::vector<int> prefix_sorted(const std::vector<int>& ranked, int k) {
  std::vector<int> support(ranked.begin(), ranked.begin() + k);
  std::sort(support.begin(), support.end());
  return support;
}

std::string subset_to_string(const std::vector<int>& subset) {
  std::ostringstream out;
  out << "{";
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (i > 0) out << ",";
    out << subset[i];
  }
  out << "}";
  return out.str();
}

Eigen::VectorXd gather(const Eigen::VectorXd& v, const std::vector<int>& idx) {
  Eigen::VectorXd out(static_cast<Eigen::Index>(idx.size()));
  for (std::size_t i = 0; i < idx.size(); ++i) out[static_cast<Eigen::Index>(i)] = v[idx[i]];
  return out;
}

Eigen::MatrixXd gather_principal(const Eigen::MatrixXd& m, const std::vector<int>& idx) {
  const auto k = static_cast<Eigen::Index>(idx.size());
  Eigen::MatrixXd out(k, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = 0; j < k; ++j) {
      out(i, j) = m(idx[static_cast<std::size_t>(i)], idx[static_cast<std::size_t>(j)]);
    }
  }
  return out;
}

struct RankedTangent {
  SelectionOrder order;
  TangentSolution solution;
};

RankedTangent rank_by_transformed_weight(const MomentEstimate& m) {
  RankedTangent out;
  out.solution = solve_tangent(m);
  const Eigen::VectorXd scores =
      transform_by_lt(out.solution.factor, out.solution.portfolio.weights).cwiseAbs();
  out.order.ranked_assets = rank_desc(scores);
  out.order.scores.reserve(out.order.ranked_assets.size());
  for (int i : out.order.ranked_assets) out.order.scores.push_back(scores[i]);
  return out;
}

}  // namespace

std::string_view heuristic_name(Heuristic h) {
  switch (h) {
    case Heuristic::Oscar: return "OSCAR";
    case Heuristic::TopSharpe: return "SR";
    case Heuristic::TopWeight: return "W";
    case Heuristic::Forward: return "F";
    case Heuristic::Backward: return "B";
    case Heuristic::Exact: return "EXACT";
  }
  return "?";
}

std::optional<Heuristic> heuristic_from_name(std::string_view name) {
  std::string upper(name);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  if (upper == "OSCAR") return Heuristic::Oscar;
  if (upper == "SR") return Heuristic::TopSharpe;
  if (upper == "W") return Heuristic::TopWeight;
  if (upper == "F") return Heuristic::Forward;
  if (upper == "B") return Heuristic::Backward;
  if (upper == "EXACT") return Heuristic::Exact;
  return std::nullopt;
}

SelectionOrder oscar_order(const MomentEstimate& moments) {
  return rank_by_transformed_weight(moments).order;
}

SparsePortfolio reoptimize_on_support(const MomentEstimate& moments,
                                      std::vector<int> support, Heuristic tag) {
  if (support.empty()) {
    throw ValidationError("reoptimize_on_support: empty support");
  }
  std::sort(support.begin(), support.end());
  if (support.front() < 0 || support.back() >= moments.n() ||
      std::adjacent_find(support.begin(), support.end()) != support.end()) {
    throw ValidationError("reoptimize_on_support: support is not a set of asset indices");
  }

  TangentSolution sub;
  try {
    sub = solve_tangent(gather(moments.mu, support), gather_principal(moments.sigma, support));
  } catch (const IrrecoverableMatrixError& e) {
    throw IrrecoverableMatrixError("sub-instance " + subset_to_string(support) + ": " + e.what());
  } catch (const NotPositiveDefiniteError& e) {
    throw IrrecoverableMatrixError("sub-instance " + subset_to_string(support) + ": " + e.what());
  }

  SparsePortfolio out;
  out.heuristic = tag;
  out.support = std::move(support);
  out.weights = Eigen::VectorXd::Zero(moments.n());
  for (std::size_t i = 0; i < out.support.size(); ++i) {
    out.weights[out.support[i]] = sub.portfolio.weights[static_cast<Eigen::Index>(i)];
  }
  out.sharpe = sharpe(out.weights, moments);
  out.jitter_applied = sub.factor.jitter_applied;
  out.budget_degenerate = sub.budget_degenerate;
  if (sub.budget_degenerate) {
    out.warnings.push_back("budget degeneracy on support " + subset_to_string(out.support) +
                           ": weights left unnormalized");
  }
  return out;
}

SparsePortfolio select_oscar(const MomentEstimate& moments, int k) {
  check_k(moments, k);
  const auto start = Clock::now();
  RankedTangent ranked = rank_by_transformed_weight(moments);
  SparsePortfolio out =
      reoptimize_on_support(moments, prefix_sorted(ranked.order.ranked_assets, k),
                            Heuristic::Oscar);
  out.jitter_applied = std::max(out.jitter_applied, ranked.solution.factor.jitter_applied);
  out.wall_time = seconds_since(start);
  return out;
}

SparsePortfolio select_topk_sharpe(const MomentEstimate& moments, int k) {
  check_k(moments, k);
  const auto start = Clock::now();
  const int n = moments.n();
  Eigen::VectorXd scores(n);
  std::vector<std::string> warnings;
  for (int i = 0; i < n; ++i) {
    const double var = moments.sigma(i, i);
    if (var > 0.0) {
      scores[i] = moments.mu[i] / std::sqrt(var);
    } else {
      // Zero-variance asset: rank at +-infinity by the sign of its mean.
      const double inf = std::numeric_limits<double>::infinity();
      scores[i] = moments.mu[i] > 0.0 ? inf : (moments.mu[i] < 0.0 ? -inf : 0.0);
      warnings.push_back("asset " + moments.tickers[static_cast<std::size_t>(i)] +
                         " has non-positive variance; ranked by sign of its mean");
    }
  }
  SparsePortfolio out =
      reoptimize_on_support(moments, prefix_sorted(rank_desc(scores), k), Heuristic::TopSharpe);
  out.warnings.insert(out.warnings.begin(), warnings.begin(), warnings.end());
  out.wall_time = seconds_since(start);
  return out;
}

SparsePortfolio select_topk_weight(const MomentEstimate& moments, int k) {
  check_k(moments, k);
  const auto start = Clock::now();
  TangentSolution full = solve_tangent(moments);
  const Eigen::VectorXd scores = full.portfolio.weights.cwiseAbs();
  SparsePortfolio out =
      reoptimize_on_support(moments, prefix_sorted(rank_desc(scores), k), Heuristic::TopWeight);
  out.jitter_applied = std::max(out.jitter_applied, full.factor.jitter_applied);
  out.wall_time = seconds_since(start);
  return out;
}

SparsePortfolio select_forward(const MomentEstimate& moments, int k) {
  check_k(moments, k);
  const auto start = Clock::now();
  const int n = moments.n();
  std::vector<int> remaining(static_cast<std::size_t>(n));
  std::iota(remaining.begin(), remaining.end(), 0);
  std::vector<int> selected;
  double max_jitter_seen = 0.0;

  for (int step = 0; step < k; ++step) {
    TangentSolution sol =
        solve_tangent(gather(moments.mu, remaining), gather_principal(moments.sigma, remaining));
    max_jitter_seen = std::max(max_jitter_seen, sol.factor.jitter_applied);
    // remaining is kept ascending, so strict > keeps the lowest index on ties
    std::size_t best = 0;
    double best_abs = std::abs(sol.portfolio.weights[0]);
    for (std::size_t j = 1; j < remaining.size(); ++j) {
      const double a = std::abs(sol.portfolio.weights[static_cast<Eigen::Index>(j)]);
      if (a > best_abs) {
        best_abs = a;
        best = j;
      }
    }
    selected.push_back(remaining[best]);
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(best));
  }

  SparsePortfolio out = reoptimize_on_support(moments, selected, Heuristic::Forward);
  out.jitter_applied = std::max(out.jitter_applied, max_jitter_seen);
  out.wall_time = seconds_since(start);
  return out;
}

SparsePortfolio select_backward(const MomentEstimate& moments, int k) {
  check_k(moments, k);
  const auto start = Clock::now();
  const int n = moments.n();
  std::vector<int> current(static_cast<std::size_t>(n));
  std::iota(current.begin(), current.end(), 0);
  double max_jitter_seen = 0.0;

  while (static_cast<int>(current.size()) > k) {
    TangentSolution sol =
        solve_tangent(gather(moments.mu, current), gather_principal(moments.sigma, current));
    max_jitter_seen = std::max(max_jitter_seen, sol.factor.jitter_applied);
    std::size_t worst = 0;
    double worst_abs = std::abs(sol.portfolio.weights[0]);
    for (std::size_t j = 1; j < current.size(); ++j) {
      const double a = std::abs(sol.portfolio.weights[static_cast<Eigen::Index>(j)]);
      if (a < worst_abs) {
        worst_abs = a;
        worst = j;
      }
    }
    current.erase(current.begin() + static_cast<std::ptrdiff_t>(worst));
  }

  SparsePortfolio out = reoptimize_on_support(moments, current, Heuristic::Backward);
  out.jitter_applied = std::max(out.jitter_applied, max_jitter_seen);
  out.wall_time = seconds_since(start);
  return out;
}

SparsePortfolio select(const MomentEstimate& moments, Heuristic heuristic, int k) {
  switch (heuristic) {
    case Heuristic::Oscar: return select_oscar(moments, k);
    case Heuristic::TopSharpe: return select_topk_sharpe(moments, k);
    case Heuristic::TopWeight: return select_topk_weight(moments, k);
    case Heuristic::Forward: return select_forward(moments, k);
    case Heuristic::Backward: return select_backward(moments, k);
    case Heuristic::Exact:
      throw ValidationError("select: EXACT is not a selection heuristic; use solve_exact");
  }
  throw ValidationError("select: unknown heuristic");
}

}  // namespace oscar
