#include <doctest.h>

#include <unistd.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "oscar/errors.hpp"
#include "oscar/market_data.hpp"
#include "oscar/synth.hpp"

using namespace oscar;

namespace {

// Writes `content` to a unique temp file and removes it on scope exit.
struct TempCsv {
  explicit TempCsv(const std::string& content) {
    static int counter = 0;
    path = (std::filesystem::temp_directory_path() /
            ("oscar_md_" + std::to_string(::getpid()) + "_" + std::to_string(counter++) + ".csv"))
               .string();
    std::ofstream out(path);
    out << content;
  }
  ~TempCsv() { std::filesystem::remove(path); }
  std::string path;
};

}  // namespace

TEST_CASE("load_prices parses a small wide CSV") {
  TempCsv csv("date,A,B\n2020-01-01,10,20\n2020-01-02,11,19\n");
  const PricePanel panel = load_prices(csv.path);
  CHECK(panel.dates == std::vector<std::string>{"2020-01-01", "2020-01-02"});
  CHECK(panel.tickers == std::vector<std::string>{"A", "B"});
  CHECK(panel.prices(0, 0) == 10.0);
  CHECK(panel.prices(1, 1) == 19.0);
}

TEST_CASE("load_prices rejects duplicate tickers") {
  TempCsv csv("date,A,A\n2020-01-01,10,20\n");
  CHECK_THROWS_AS(load_prices(csv.path), ValidationError);
}

TEST_CASE("load_prices sorts unsorted dates ascending") {
  TempCsv csv("date,A\n2020-01-03,12\n2020-01-01,10\n2020-01-02,11\n");
  const PricePanel panel = load_prices(csv.path);
  CHECK(panel.dates == std::vector<std::string>{"2020-01-01", "2020-01-02", "2020-01-03"});
  CHECK(panel.prices(0, 0) == 10.0);
  CHECK(panel.prices(2, 0) == 12.0);
}

TEST_CASE("load_prices reports the location of a bad cell") {
  TempCsv csv("date,A,B\n2020-01-01,10,20\n2020-01-02,x,19\n");
  try {
    load_prices(csv.path);
    FAIL("expected FormatError");
  } catch (const FormatError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("row 3") != std::string::npos);
    CHECK(msg.find("column 2") != std::string::npos);
  }
}

TEST_CASE("load_prices rejects bad dates and duplicate dates") {
  TempCsv bad_date("date,A\n2020-13-01,10\n");
  CHECK_THROWS_AS(load_prices(bad_date.path), FormatError);
  TempCsv dup("date,A\n2020-01-01,10\n2020-01-01,11\n");
  CHECK_THROWS_AS(load_prices(dup.path), ValidationError);
}

TEST_CASE("is_iso_date validates the calendar") {
  CHECK(is_iso_date("2020-02-29"));
  CHECK_FALSE(is_iso_date("2021-02-29"));
  CHECK_FALSE(is_iso_date("2020-1-01"));
  CHECK_FALSE(is_iso_date("2020/01/01"));
}

TEST_CASE("drop_incomplete_assets removes exactly the gapped columns") {
  TempCsv csv("date,A,B,C\n2020-01-01,1,2,3\n2020-01-02,1,,3\n2020-01-03,1,2,3\n");
  const DropReport report = drop_incomplete_assets(load_prices(csv.path));
  CHECK(report.dropped == std::vector<std::string>{"B"});
  CHECK(report.panel.tickers == std::vector<std::string>{"A", "C"});
  CHECK(report.panel.prices.cols() == 2);
  CHECK(report.panel.prices.rows() == 3);
}

TEST_CASE("drop_incomplete_assets is the identity on complete panels") {
  TempCsv csv("date,A,B\n2020-01-01,1,2\n2020-01-02,1,2\n");
  const PricePanel panel = load_prices(csv.path);
  const DropReport report = drop_incomplete_assets(panel);
  CHECK(report.dropped.empty());
  CHECK(report.panel.tickers == panel.tickers);
  CHECK((report.panel.prices - panel.prices).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("drop_incomplete_assets fails when nothing survives") {
  TempCsv csv("date,A,B\n2020-01-01,,2\n2020-01-02,1,\n");
  CHECK_THROWS_AS(drop_incomplete_assets(load_prices(csv.path)), DataError);
}

TEST_CASE("compute_returns computes simple per-period returns") {
  TempCsv csv("date,A\n2020-01-01,10\n2020-01-02,11\n2020-01-03,11\n");
  const ReturnPanel returns = compute_returns(load_prices(csv.path));
  CHECK(returns.returns.rows() == 2);
  CHECK(returns.returns(0, 0) == doctest::Approx(0.10).epsilon(1e-15));
  CHECK(returns.returns(1, 0) == 0.0);
  CHECK(returns.dates == std::vector<std::string>{"2020-01-02", "2020-01-03"});
}

TEST_CASE("compute_returns of a constant series is all zero") {
  TempCsv csv("date,A,B\n2020-01-01,5,7\n2020-01-02,5,7\n2020-01-03,5,7\n2020-01-04,5,7\n");
  const ReturnPanel returns = compute_returns(load_prices(csv.path));
  CHECK(returns.returns.cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("compute_returns names the ticker and date of a non-positive price") {
  TempCsv csv("date,A,B\n2020-01-01,10,1\n2020-01-02,0,1\n2020-01-03,10,1\n");
  try {
    compute_returns(load_prices(csv.path));
    FAIL("expected DataError");
  } catch (const DataError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("A") != std::string::npos);
    CHECK(msg.find("2020-01-02") != std::string::npos);
  }
}

TEST_CASE("compute_returns needs at least three dates") {
  TempCsv csv("date,A\n2020-01-01,10\n2020-01-02,11\n");
  CHECK_THROWS_AS(compute_returns(load_prices(csv.path)), ValidationError);
}

TEST_CASE("estimate_moments matches the two-point variance by hand") {
  ReturnPanel returns;
  returns.tickers = {"A"};
  returns.dates = {"2020-01-02", "2020-01-03"};
  returns.returns.resize(2, 1);
  returns.returns << 0.1, -0.1;
  const MomentEstimate m = estimate_moments(returns);
  CHECK(m.mu[0] == 0.0);
  CHECK(m.sigma(0, 0) == doctest::Approx(0.02).epsilon(1e-15));
}

TEST_CASE("estimate_moments on identical columns gives a perfectly correlated sigma") {
  ReturnPanel returns;
  returns.tickers = {"A", "B"};
  returns.dates = {"d1", "d2", "d3"};
  returns.returns.resize(3, 2);
  returns.returns << 0.1, 0.1, -0.05, -0.05, 0.02, 0.02;
  const MomentEstimate m = estimate_moments(returns);
  CHECK(m.sigma(0, 0) == doctest::Approx(m.sigma(1, 1)).epsilon(1e-15));
  CHECK(m.sigma(0, 1) == doctest::Approx(m.sigma(0, 0)).epsilon(1e-15));
}

TEST_CASE("estimate_moments is consistent on a long diagonal sample") {
  // Independent columns with known variances; off-diagonals must vanish
  // within three standard errors of the sample covariance.
  const int rows = 100000;
  const double var_a = 0.04, var_b = 0.01;
  SplitMix64 rng = instance_stream(42, 0);
  ReturnPanel returns;
  returns.tickers = {"A", "B"};
  returns.returns.resize(rows, 2);
  for (int t = 0; t < rows; ++t) {
    returns.returns(t, 0) = std::sqrt(var_a) * rng.normal();
    returns.returns(t, 1) = std::sqrt(var_b) * rng.normal();
    returns.dates.push_back("d" + std::to_string(t));
  }
  const MomentEstimate m = estimate_moments(returns);
  const double se = std::sqrt(m.sigma(0, 0) * m.sigma(1, 1) / (rows - 1));
  CHECK(std::abs(m.sigma(0, 1)) <= 3.0 * se);
  CHECK(m.sigma(0, 0) == doctest::Approx(var_a).epsilon(0.05));
  CHECK(m.sigma(1, 1) == doctest::Approx(var_b).epsilon(0.05));
}

TEST_CASE("estimate_moments commutes with column permutation") {
  ReturnPanel returns;
  returns.tickers = {"A", "B", "C"};
  returns.dates = {"d1", "d2", "d3", "d4"};
  returns.returns.resize(4, 3);
  returns.returns << 0.01, -0.02, 0.005, 0.03, 0.01, -0.01, -0.02, 0.00, 0.02, 0.005, 0.015,
      -0.005;

  ReturnPanel permuted = returns;
  permuted.tickers = {"C", "A", "B"};
  const int perm[3] = {2, 0, 1};  // permuted column j = original column perm[j]
  for (int j = 0; j < 3; ++j) permuted.returns.col(j) = returns.returns.col(perm[j]);

  const MomentEstimate m = estimate_moments(returns);
  const MomentEstimate mp = estimate_moments(permuted);
  for (int i = 0; i < 3; ++i) {
    CHECK(mp.mu[i] == m.mu[perm[i]]);
    for (int j = 0; j < 3; ++j) {
      CHECK(mp.sigma(i, j) == m.sigma(perm[i], perm[j]));
    }
  }
}

TEST_CASE("estimated sigma is exactly symmetric with non-negative diagonal") {
  SplitMix64 rng = instance_stream(7, 3);
  ReturnPanel returns;
  returns.tickers = {"A", "B", "C", "D"};
  returns.returns.resize(40, 4);
  for (int t = 0; t < 40; ++t) {
    returns.dates.push_back("d" + std::to_string(t));
    for (int j = 0; j < 4; ++j) returns.returns(t, j) = 0.02 * rng.normal();
  }
  const MomentEstimate m = estimate_moments(returns);
  CHECK((m.sigma - m.sigma.transpose()).cwiseAbs().maxCoeff() == 0.0);
  CHECK(m.sigma.diagonal().minCoeff() >= 0.0);
}

TEST_CASE("pipeline from file keeps every return entry finite") {
  // Random well-formed files with scattered missing cells.
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    SplitMix64 rng = instance_stream(900, seed);
    std::string content = "date,A,B,C,D\n";
    for (int day = 1; day <= 12; ++day) {
      char date[16];
      std::snprintf(date, sizeof(date), "2021-03-%02d", day);
      content += date;
      for (int c = 0; c < 4; ++c) {
        content += ',';
        if (rng.uniform01() < 0.1) continue;  // missing cell
        content += std::to_string(50.0 + 10.0 * rng.uniform01());
      }
      content += '\n';
    }
    TempCsv csv(content);
    try {
      const ReturnPanel returns = compute_returns(drop_incomplete_assets(load_prices(csv.path)).panel);
      CHECK(returns.returns.allFinite());
    } catch (const DataError&) {
      // every asset had a gap: acceptable outcome for this input
    }
  }
}

TEST_CASE("make_moments rejects asymmetric or mismatched input") {
  Eigen::MatrixXd bad(2, 2);
  bad << 1, 0.5, 0.1, 1;
  CHECK_THROWS_AS(make_moments(Eigen::VectorXd::Ones(2), bad), ValidationError);
  CHECK_THROWS_AS(make_moments(Eigen::VectorXd::Ones(3), Eigen::MatrixXd::Identity(2, 2)),
                  ValidationError);
}
