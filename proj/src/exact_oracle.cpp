#include "oscar/exact_oracle.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "oscar/errors.hpp"
#include "oscar/log.hpp"
#include "oscar/spd_linalg.hpp"

namespace oscar {

namespace {

using Clock = std::chrono::steady_clock;

// Advances `comb` to the next k-combination of 0..n-1 in lexicographic order.
bool next_combination(std::vector<int>& comb, int n) {
  const int k = static_cast<int>(comb.size());
  for (int i = k - 1; i >= 0; --i) {
    if (comb[static_cast<std::size_t>(i)] < n - k + i) {
      ++comb[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j) {
        comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
      }
      return true;
    }
  }
  return false;
}

}  // namespace

double binomial_approx(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double result = 1.0;
  for (int i = 1; i <= k; ++i) {
    result *= static_cast<double>(n - k + i) / static_cast<double>(i);
    if (result > 1e300) return std::numeric_limits<double>::infinity();
  }
  return result;
}

OracleResult solve_exact(const MomentEstimate& moments, int k, double budget_seconds) {
  const int n = moments.n();
  if (k < 1 || k > n) {
    throw ValidationError("solve_exact: cardinality k = " + std::to_string(k) +
                          " must be in [1, " + std::to_string(n) + "]");
  }

  const double total = binomial_approx(n, k);
  // ~flop count of one subset evaluation at ~1 GFLOP/s; order of magnitude only
  const double est_seconds = total * (k * k * k / 3.0 + 20.0 * k + 100.0) * 1e-9;
  log::info("exhaustive search over " + std::to_string(total) + " subsets (n=" +
            std::to_string(n) + ", k=" + std::to_string(k) + "), ~" +
            std::to_string(est_seconds) + "s estimated, budget " +
            std::to_string(budget_seconds) + "s");

  OracleResult result;
  result.budget_seconds = budget_seconds;

  const auto start = Clock::now();
  const auto deadline = start + std::chrono::duration_cast<Clock::duration>(
                                    std::chrono::duration<double>(budget_seconds));

  // Preallocated workspace: the inner loop must not allocate.
  Eigen::MatrixXd sub(k, k);
  Eigen::MatrixXd l(k, k);
  Eigen::VectorXd sub_mu(k);
  std::vector<int> comb(static_cast<std::size_t>(k));
  std::iota(comb.begin(), comb.end(), 0);

  double best_q = -std::numeric_limits<double>::infinity();
  std::vector<int> best_comb;
  bool ran_out = false;
  long long since_check = 0;

  while (true) {
    for (int i = 0; i < k; ++i) {
      sub_mu[i] = moments.mu[comb[static_cast<std::size_t>(i)]];
      for (int j = 0; j < k; ++j) {
        sub(i, j) = moments.sigma(comb[static_cast<std::size_t>(i)],
                                  comb[static_cast<std::size_t>(j)]);
      }
    }

    if (sub_mu.lpNorm<Eigen::Infinity>() == 0.0) {
      result.skipped.push_back(comb);
    } else if (try_cholesky_lower(sub, l) < 0) {
      // q = mu_K^T Sigma_K^-1 mu_K, the squared optimal Sharpe ratio on K
      Eigen::VectorXd y = l.triangularView<Eigen::Lower>().solve(sub_mu);
      const double q = y.squaredNorm();
      ++result.subsets_evaluated;
      if (std::isfinite(q) && q > best_q) {
        best_q = q;
        best_comb = comb;
      }
    } else {
      // Rare: principal submatrix not numerically SPD. Escalate the ladder.
      bool recovered = false;
      try {
        CholeskyFactor factor = factor_conditioned(sub, kDefaultMaxJitter);
        Eigen::VectorXd x = solve_spd(factor, sub_mu);
        const double q = sub_mu.dot(x);
        ++result.subsets_evaluated;
        if (std::isfinite(q) && q > best_q) {
          best_q = q;
          best_comb = comb;
        }
        recovered = true;
      } catch (const Error&) {
        recovered = false;
      }
      if (!recovered) result.skipped.push_back(comb);
    }

    if (++since_check >= 256) {
      since_check = 0;
      if (Clock::now() > deadline) {
        ran_out = true;
        break;
      }
    }
    if (!next_combination(comb, n)) break;
  }

  result.exhausted = !ran_out;
  if (best_comb.empty()) {
    throw OracleError("solve_exact: no subset could be evaluated (" +
                      std::to_string(result.skipped.size()) + " skipped)");
  }
  if (!result.skipped.empty()) {
    log::warn("solve_exact skipped " + std::to_string(result.skipped.size()) +
              " subsets that could not be conditioned");
  }
  if (ran_out) {
    log::warn("solve_exact budget of " + std::to_string(budget_seconds) +
              "s expired after " + std::to_string(result.subsets_evaluated) +
              " subsets; result is not exhaustive");
  }

  result.best = reoptimize_on_support(moments, best_comb, Heuristic::Exact);
  result.best.wall_time = std::chrono::duration<double>(Clock::now() - start).count();
  return result;
}

}  // namespace oscar
