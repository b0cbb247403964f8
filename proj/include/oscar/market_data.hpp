#pragma once

#include <Eigen/Dense>
#include <string>
#include <string_view>
#include <vector>

#include "oscar/errors.hpp"

// Price ingestion, cleaning, return computation and moment estimation.
// Dates are ISO-8601 strings; missing prices are stored as NaN until
// drop_incomplete_assets removes the affected asset.
namespace oscar {

/// Daily close prices: rows = dates (ascending), columns = tickers.
struct PricePanel {
  std::vector<std::string> dates;
  std::vector<std::string> tickers;
  Eigen::MatrixXd prices;  // NaN marks a missing cell
};

/// Per-period simple returns derived from a complete price panel.
struct ReturnPanel {
  std::vector<std::string> dates;  // date of each period end, length T-1
  std::vector<std::string> tickers;
  Eigen::MatrixXd returns;
};

/// Expected-return vector and covariance matrix, the pair every solver
/// consumes. sigma is symmetrized on construction via make_moments.
struct MomentEstimate {
  Eigen::VectorXd mu;
  Eigen::MatrixXd sigma;
  std::vector<std::string> tickers;

  int n() const { return static_cast<int>(mu.size()); }
};

/// Validates dimensions and symmetry (within 1e-10, scaled), symmetrizes
/// sigma as (S + S^T)/2 and returns the estimate. Empty tickers are filled
/// with generated names.
MomentEstimate make_moments(Eigen::VectorXd mu, Eigen::MatrixXd sigma,
                            std::vector<std::string> tickers = {});

/// True iff `s` is a calendar-valid YYYY-MM-DD date.
bool is_iso_date(std::string_view s);

/// Parses a wide CSV with header `date,<ticker>,...`. Empty cells become NaN.
/// Rows are sorted by date; columns keep file order.
PricePanel load_prices(const std::string& path);

struct DropReport {
  PricePanel panel;
  std::vector<std::string> dropped;
};

/// Removes every asset with at least one missing price. Throws DataError when
/// nothing survives.
DropReport drop_incomplete_assets(const PricePanel& panel);

/// returns[t][i] = prices[t+1][i] / prices[t][i] - 1. Requires a complete
/// panel with at least 3 dates; non-positive prices are rejected with the
/// offending ticker and date.
ReturnPanel compute_returns(const PricePanel& panel);

/// Column means and the unbiased sample covariance (divisor = rows - 1),
/// symmetrized. Requires at least 2 return rows.
MomentEstimate estimate_moments(const ReturnPanel& returns);

}  // namespace oscar
