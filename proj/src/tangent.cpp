#include "oscar/tangent.hpp"

#include <algorithm>
#include <cmath>

#include "oscar/errors.hpp"
#include "oscar/log.hpp"

namespace oscar {

TangentSolution solve_tangent(const Eigen::VectorXd& mu, const Eigen::MatrixXd& sigma,
                              double max_jitter) {
  if (mu.size() == 0) {
    throw ValidationError("solve_tangent: empty instance");
  }
  if (mu.size() != sigma.rows()) {
    throw ValidationError("solve_tangent: mu length does not match sigma dimension");
  }
  if (mu.lpNorm<Eigen::Infinity>() == 0.0) {
    throw NoDirectionError("solve_tangent: mu is the zero vector");
  }

  TangentSolution solution;
  solution.factor = factor_conditioned(sigma, max_jitter);
  Eigen::VectorXd direction = solve_spd(solution.factor, mu);
  const double budget = direction.sum();
  if (budget > 0.0) {
    solution.portfolio.weights = direction / budget;
    solution.portfolio.normalized = true;
  } else {
    log::warn("budget degeneracy: component sum of the tangent direction is " +
              std::to_string(budget) + "; returning unnormalized weights");
    solution.portfolio.weights = std::move(direction);
    solution.portfolio.normalized = false;
    solution.budget_degenerate = true;
  }
  return solution;
}

TangentSolution solve_tangent(const MomentEstimate& moments, double max_jitter) {
  return solve_tangent(moments.mu, moments.sigma, max_jitter);
}

double sharpe(const Eigen::VectorXd& weights, const MomentEstimate& moments) {
  if (weights.size() != moments.mu.size()) {
    throw ValidationError("sharpe: weight length does not match instance dimension");
  }
  const double variance = weights.dot(moments.sigma * weights);
  if (!(variance > 1e-300)) {
    throw DegenerateRiskError("sharpe: portfolio variance " + std::to_string(variance) +
                              " is not positive");
  }
  return moments.mu.dot(weights) / std::sqrt(variance);
}

double sharpe(const Portfolio& portfolio, const MomentEstimate& moments) {
  return sharpe(portfolio.weights, moments);
}

double angle_to(const Eigen::VectorXd& w, const Eigen::VectorXd& ref,
                const CholeskyFactor& factor) {
  const Eigen::VectorXd tw = transform_by_lt(factor, w);
  const Eigen::VectorXd tref = transform_by_lt(factor, ref);
  const double nw = tw.norm();
  const double nref = tref.norm();
  if (!(nw > 0.0) || !(nref > 0.0)) {
    throw DegenerateAngleError("angle_to: transformed vector has zero norm");
  }
  const double cosine = std::clamp(tw.dot(tref) / (nw * nref), -1.0, 1.0);
  return std::acos(cosine);
}

}  // namespace oscar
