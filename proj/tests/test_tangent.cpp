#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>

#include "oscar/errors.hpp"
#include "oscar/synth.hpp"
#include "oscar/tangent.hpp"

using namespace oscar;

namespace {

MomentEstimate identity_instance(std::initializer_list<double> mu_values) {
  Eigen::VectorXd mu(static_cast<Eigen::Index>(mu_values.size()));
  Eigen::Index i = 0;
  for (double v : mu_values) mu[i++] = v;
  return make_moments(mu, Eigen::MatrixXd::Identity(mu.size(), mu.size()));
}

MomentEstimate random_instance(int n, std::uint64_t seed) {
  SynthSpec spec;
  spec.n = n;
  spec.structure = CovStructure::RandomFactor;
  spec.factors = 3;
  spec.idio_scale = 2.0;
  spec.seed = seed;
  return generate(spec);
}

Eigen::VectorXd random_direction(SplitMix64& rng, int n) {
  Eigen::VectorXd w(n);
  for (int i = 0; i < n; ++i) w[i] = rng.normal();
  if (w.lpNorm<Eigen::Infinity>() == 0.0) w[0] = 1.0;
  return w;
}

}  // namespace

TEST_CASE("solve_tangent on the identity covariance scales mu") {
  const MomentEstimate m = identity_instance({0.1, 0.2, 0.3});
  const TangentSolution sol = solve_tangent(m);
  CHECK(sol.portfolio.normalized);
  CHECK(sol.portfolio.weights[0] == doctest::Approx(1.0 / 6).epsilon(1e-12));
  CHECK(sol.portfolio.weights[1] == doctest::Approx(1.0 / 3).epsilon(1e-12));
  CHECK(sol.portfolio.weights[2] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(sharpe(sol.portfolio, m) == doctest::Approx(std::sqrt(0.14)).epsilon(1e-12));
}

TEST_CASE("solve_tangent with equal means gives equal weights") {
  const MomentEstimate m = identity_instance({0.07, 0.07, 0.07, 0.07});
  const TangentSolution sol = solve_tangent(m);
  for (int i = 0; i < 4; ++i) {
    CHECK(sol.portfolio.weights[i] == doctest::Approx(0.25).epsilon(1e-12));
  }
}

TEST_CASE("solve_tangent matches the hand-inverted 2x2") {
  Eigen::MatrixXd sigma(2, 2);
  sigma << 4, 2, 2, 3;
  Eigen::VectorXd mu(2);
  mu << 0.1, 0.2;
  const MomentEstimate m = make_moments(mu, sigma);
  const TangentSolution sol = solve_tangent(m);
  CHECK(sol.portfolio.normalized);
  CHECK(sol.portfolio.weights[0] == doctest::Approx(-0.2).epsilon(1e-12));
  CHECK(sol.portfolio.weights[1] == doctest::Approx(1.2).epsilon(1e-12));
  // squared maximum Sharpe ratio equals mu^T Sigma^-1 mu
  const double q = mu.dot(sigma.inverse() * mu);
  CHECK(sharpe(sol.portfolio, m) == doctest::Approx(std::sqrt(q)).epsilon(1e-8));
}

TEST_CASE("solve_tangent rejects a zero mean vector") {
  CHECK_THROWS_AS(solve_tangent(identity_instance({0.0, 0.0})), NoDirectionError);
}

TEST_CASE("solve_tangent flags a degenerate budget instead of flipping sign") {
  const MomentEstimate m = identity_instance({-0.1, -0.2});
  const TangentSolution sol = solve_tangent(m);
  CHECK(sol.budget_degenerate);
  CHECK_FALSE(sol.portfolio.normalized);
  CHECK(sol.portfolio.weights[0] == doctest::Approx(-0.1).epsilon(1e-12));
  CHECK(sol.portfolio.weights[1] == doctest::Approx(-0.2).epsilon(1e-12));
}

TEST_CASE("sharpe of a single-asset portfolio is mu over vol") {
  const MomentEstimate m = identity_instance({0.3, 0.1});
  Eigen::VectorXd w(2);
  w << 1, 0;
  CHECK(sharpe(w, m) == doctest::Approx(0.3).epsilon(1e-15));
}

TEST_CASE("sharpe rejects a riskless portfolio") {
  const MomentEstimate m = identity_instance({0.3, 0.1});
  CHECK_THROWS_AS(sharpe(Eigen::VectorXd::Zero(2), m), DegenerateRiskError);
}

TEST_CASE("sharpe is scale invariant") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const MomentEstimate m = random_instance(6, seed);
    SplitMix64 rng = instance_stream(50 + seed, 0);
    for (int rep = 0; rep < 100; ++rep) {
      const Eigen::VectorXd w = random_direction(rng, 6);
      const double lambda = std::pow(10.0, rng.uniform(-3.0, 3.0));
      const double base = sharpe(w, m);
      const double scaled = sharpe((lambda * w).eval(), m);
      CHECK(std::abs(scaled - base) <= 1e-12 * (1.0 + std::abs(base)));
    }
  }
}

TEST_CASE("no random portfolio beats the tangent portfolio") {
  const MomentEstimate m = random_instance(5, 99);
  const TangentSolution sol = solve_tangent(m);
  const double best = sharpe(sol.portfolio, m);
  SplitMix64 rng = instance_stream(123, 0);
  for (int rep = 0; rep < 1000; ++rep) {
    const Eigen::VectorXd w = random_direction(rng, 5);
    CHECK(sharpe(w, m) <= best + 1e-9);
  }
  CHECK(best * best == doctest::Approx(m.mu.dot(m.sigma.inverse() * m.mu)).epsilon(1e-8));
}

TEST_CASE("angle_to is zero for identical portfolios and pi/2 for orthogonal ones") {
  const MomentEstimate m = identity_instance({0.1, 0.2});
  const CholeskyFactor f = cholesky(m.sigma);
  Eigen::VectorXd a(2), b(2);
  a << 1, 0;
  b << 0, 1;
  CHECK(angle_to(a, a, f) == 0.0);
  CHECK(angle_to(a, b, f) == doctest::Approx(std::acos(0.0)).epsilon(1e-15));
  CHECK_THROWS_AS(angle_to(Eigen::VectorXd::Zero(2), a, f), DegenerateAngleError);
}

TEST_CASE("smaller angle to the tangent portfolio means higher Sharpe ratio") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const MomentEstimate m = random_instance(7, 500 + seed);
    const TangentSolution sol = solve_tangent(m);
    const Eigen::VectorXd& ref = sol.portfolio.weights;
    SplitMix64 rng = instance_stream(777 + seed, 0);
    int pairs = 0;
    while (pairs < 20) {
      const Eigen::VectorXd w1 = random_direction(rng, 7);
      const Eigen::VectorXd w2 = random_direction(rng, 7);
      const double s1 = sharpe(w1, m);
      const double s2 = sharpe(w2, m);
      if (s1 <= 0.0 || s2 <= 0.0) continue;
      if (std::abs(s1 - s2) <= 1e-12 * (1.0 + std::max(std::abs(s1), std::abs(s2)))) continue;
      ++pairs;
      const double t1 = angle_to(w1, ref, sol.factor);
      const double t2 = angle_to(w2, ref, sol.factor);
      CHECK(((s1 > s2) == (t1 < t2)));
    }
  }
}
