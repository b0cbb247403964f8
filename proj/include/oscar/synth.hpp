#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "oscar/market_data.hpp"

// Reproducible synthetic instance generation and the dominance-vs-performance
// sweep. Randomness comes from a counter-based generator keyed by
// (seed, instance index), so instances are independent of generation order.
namespace oscar {

/// splitmix64 stream with uniform and Box-Muller normal draws. Deterministic
/// for a given state on a given platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t state) : state_(state) {}

  std::uint64_t next();
  double uniform01();                       // [0, 1)
  double uniform(double lo, double hi);
  double normal();                          // standard normal

 private:
  std::uint64_t state_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

/// Derives an independent stream for instance `index` under `seed`.
SplitMix64 instance_stream(std::uint64_t seed, std::uint64_t index);

enum class CovStructure { Diagonal, Equicorrelated, RandomFactor };

struct SynthSpec {
  int n = 14;
  CovStructure structure = CovStructure::RandomFactor;
  double rho = 0.0;         // equicorrelated: rho in (-1/(n-1), 1)
  int factors = 3;          // random-factor: number of common factors
  double idio_scale = 8.0;  // random-factor: idiosyncratic variance scale
  double vol_min = 1.0;     // diagonal / equicorrelated: per-asset volatility range
  double vol_max = 1.0;
  double mu_min = 0.01;
  double mu_max = 0.12;
  std::uint64_t seed = 0;
};

/// Deterministic in (spec.seed, instance_index). The covariance is positive
/// definite by construction for every structure.
MomentEstimate generate(const SynthSpec& spec, std::uint64_t instance_index = 0);

struct SweepCell {
  double rho = 0.0;
  std::uint64_t seed_index = 0;
  double dominance = 0.0;
  double performance_pct = 0.0;  // NaN when the oracle did not exhaust
  bool oracle_exhausted = false;
};

struct SweepResult {
  std::vector<SweepCell> cells;                      // ordered by (rho, seed)
  std::vector<std::pair<double, double>> per_rho_mean;  // (rho, mean performance)
  double correlation = 0.0;  // Pearson of (dominance, performance); NaN if undefined
  int excluded_cells = 0;    // non-exhausted oracle runs, left out of aggregates
};

/// For each rho and seed: build a unit-variance equicorrelated instance, run
/// the Cholesky selection heuristic against the exhaustive oracle and record
/// (dominance, performance). Cells whose oracle did not exhaust are excluded
/// from the means and the correlation.
SweepResult dominance_sweep(int n, int k, std::span<const double> rhos,
                            int seeds_per_rho, std::uint64_t seed,
                            double oracle_budget = 300.0);

}  // namespace oscar
