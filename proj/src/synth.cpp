#include "oscar/synth.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "oscar/errors.hpp"
#include "oscar/exact_oracle.hpp"
#include "oscar/log.hpp"
#include "oscar/metrics.hpp"
#include "oscar/sparse_select.hpp"

namespace oscar {

namespace {

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

void validate(const SynthSpec& spec) {
  if (spec.n < 2) throw SpecError("synth: n must be >= 2");
  if (!std::isfinite(spec.mu_min) || !std::isfinite(spec.mu_max) || spec.mu_min > spec.mu_max) {
    throw SpecError("synth: invalid mu range");
  }
  if (!(spec.vol_min > 0.0) || spec.vol_min > spec.vol_max) {
    throw SpecError("synth: invalid volatility range");
  }
  if (spec.structure == CovStructure::Equicorrelated) {
    const double lo = -1.0 / static_cast<double>(spec.n - 1);
    if (!(spec.rho > lo && spec.rho < 1.0)) {
      throw SpecError("synth: rho = " + std::to_string(spec.rho) + " outside (" +
                      std::to_string(lo) + ", 1) for n = " + std::to_string(spec.n));
    }
  }
  if (spec.structure == CovStructure::RandomFactor) {
    if (spec.factors < 1) throw SpecError("synth: need at least one factor");
    if (!(spec.idio_scale > 0.0)) throw SpecError("synth: idiosyncratic scale must be positive");
  }
}

}  // namespace

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  return mix64(z);
}

double SplitMix64::uniform01() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

double SplitMix64::uniform(double lo, double hi) {
  return lo + (hi - lo) * uniform01();
}

double SplitMix64::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  // Box-Muller; u1 in (0, 1] so the log is finite.
  const double u1 = (static_cast<double>(next() >> 11) + 1.0) * 0x1.0p-53;
  const double u2 = uniform01();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double a = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(a);
  has_spare_ = true;
  return r * std::cos(a);
}

SplitMix64 instance_stream(std::uint64_t seed, std::uint64_t index) {
  return SplitMix64(mix64(seed + 0x9E3779B97F4A7C15ULL * (index + 1)));
}

MomentEstimate generate(const SynthSpec& spec, std::uint64_t instance_index) {
  validate(spec);
  SplitMix64 rng = instance_stream(spec.seed, instance_index);
  const int n = spec.n;

  Eigen::MatrixXd sigma(n, n);
  switch (spec.structure) {
    case CovStructure::Diagonal: {
      sigma.setZero();
      for (int i = 0; i < n; ++i) {
        const double vol = rng.uniform(spec.vol_min, spec.vol_max);
        sigma(i, i) = vol * vol;
      }
      break;
    }
    case CovStructure::Equicorrelated: {
      Eigen::VectorXd vol(n);
      for (int i = 0; i < n; ++i) vol[i] = rng.uniform(spec.vol_min, spec.vol_max);
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          sigma(i, j) = vol[i] * vol[j] * (i == j ? 1.0 : spec.rho);
        }
      }
      break;
    }
    case CovStructure::RandomFactor: {
      Eigen::MatrixXd loadings(n, spec.factors);
      for (int i = 0; i < n; ++i) {
        for (int f = 0; f < spec.factors; ++f) loadings(i, f) = rng.normal();
      }
      sigma = loadings * loadings.transpose();
      for (int i = 0; i < n; ++i) {
        sigma(i, i) += spec.idio_scale * rng.uniform(0.5, 1.5);
      }
      break;
    }
  }

  Eigen::VectorXd mu(n);
  for (int i = 0; i < n; ++i) mu[i] = rng.uniform(spec.mu_min, spec.mu_max);

  std::vector<std::string> tickers;
  tickers.reserve(static_cast<std::size_t>(n));
  const int width = n > 100 ? 3 : 2;
  for (int i = 0; i < n; ++i) {
    std::string num = std::to_string(i);
    tickers.push_back("A" + std::string(static_cast<std::size_t>(width) - std::min<std::size_t>(num.size(), width), '0') + num);
  }
  return make_moments(std::move(mu), std::move(sigma), std::move(tickers));
}

SweepResult dominance_sweep(int n, int k, std::span<const double> rhos,
                            int seeds_per_rho, std::uint64_t seed,
                            double oracle_budget) {
  if (rhos.empty() || seeds_per_rho < 1) {
    throw SpecError("dominance_sweep: need at least one rho and one seed per rho");
  }

  SweepResult result;
  std::vector<double> xs, ys;
  for (std::size_t ri = 0; ri < rhos.size(); ++ri) {
    const double rho = rhos[ri];
    double sum = 0.0;
    int counted = 0;
    for (int s = 0; s < seeds_per_rho; ++s) {
      SynthSpec spec;
      spec.n = n;
      spec.structure = CovStructure::Equicorrelated;
      spec.rho = rho;
      spec.vol_min = spec.vol_max = 1.0;
      spec.seed = seed;
      const auto index = static_cast<std::uint64_t>(ri) *
                             static_cast<std::uint64_t>(seeds_per_rho) +
                         static_cast<std::uint64_t>(s);
      const MomentEstimate m = generate(spec, index);

      SweepCell cell;
      cell.rho = rho;
      cell.seed_index = index;
      cell.dominance = diagonal_dominance(m.sigma);

      OracleResult oracle = solve_exact(m, k, oracle_budget);
      if (!oracle.exhausted) {
        cell.performance_pct = std::numeric_limits<double>::quiet_NaN();
        cell.oracle_exhausted = false;
        ++result.excluded_cells;
        log::warn("dominance_sweep: oracle not exhausted for rho=" + std::to_string(rho) +
                  " seed index " + std::to_string(index) + "; cell excluded");
      } else {
        const SparsePortfolio portfolio = select_oscar(m, k);
        cell.performance_pct = performance_ratio(portfolio, oracle);
        cell.oracle_exhausted = true;
        xs.push_back(cell.dominance);
        ys.push_back(cell.performance_pct);
        sum += cell.performance_pct;
        ++counted;
      }
      result.cells.push_back(cell);
    }
    result.per_rho_mean.emplace_back(
        rho, counted > 0 ? sum / counted : std::numeric_limits<double>::quiet_NaN());
  }

  try {
    result.correlation = pearson_correlation(xs, ys);
  } catch (const ValidationError&) {
    result.correlation = std::numeric_limits<double>::quiet_NaN();
  }
  return result;
}

}  // namespace oscar
