#include "oscar/market_data.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <limits>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace oscar {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::stringstream ss(line);
  while (std::getline(ss, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

std::string to_lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

double parse_cell(const std::string& raw, std::size_t row, std::size_t col) {
  const std::string cell = trim(raw);
  if (cell.empty()) return kNaN;
  double value = 0.0;
  const char* first = cell.data();
  const char* last = cell.data() + cell.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw FormatError("row " + std::to_string(row) + ", column " + std::to_string(col) +
                      ": cannot parse numeric cell '" + cell + "'");
  }
  return value;
}

}  // namespace

bool is_iso_date(std::string_view s) {
  if (s.size() != 10 || s[4] != '-' || s[7] != '-') return false;
  auto digits = [&](int from, int to) {
    for (int i = from; i < to; ++i) {
      if (s[i] < '0' || s[i] > '9') return false;
    }
    return true;
  };
  if (!digits(0, 4) || !digits(5, 7) || !digits(8, 10)) return false;
  const int y = (s[0] - '0') * 1000 + (s[1] - '0') * 100 + (s[2] - '0') * 10 + (s[3] - '0');
  const int m = (s[5] - '0') * 10 + (s[6] - '0');
  const int d = (s[8] - '0') * 10 + (s[9] - '0');
  const std::chrono::year_month_day ymd{std::chrono::year{y}, std::chrono::month{unsigned(m)},
                                        std::chrono::day{unsigned(d)}};
  return ymd.ok();
}

MomentEstimate make_moments(Eigen::VectorXd mu, Eigen::MatrixXd sigma,
                            std::vector<std::string> tickers) {
  const auto n = mu.size();
  if (sigma.rows() != n || sigma.cols() != n) {
    throw ValidationError("moments: sigma is " + std::to_string(sigma.rows()) + "x" +
                          std::to_string(sigma.cols()) + " but mu has length " +
                          std::to_string(n));
  }
  if (!mu.allFinite() || !sigma.allFinite()) {
    throw ValidationError("moments: non-finite entries");
  }
  const double scale = std::max(1.0, sigma.size() > 0 ? sigma.cwiseAbs().maxCoeff() : 0.0);
  if (sigma.size() > 0) {
    const double asym = (sigma - sigma.transpose()).cwiseAbs().maxCoeff();
    if (asym > 1e-10 * scale) {
      throw ValidationError("moments: sigma asymmetry " + std::to_string(asym) +
                            " exceeds tolerance");
    }
  }
  sigma = ((sigma + sigma.transpose()) / 2.0).eval();
  if (tickers.empty()) {
    tickers.reserve(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) tickers.push_back("A" + std::to_string(i));
  } else if (tickers.size() != static_cast<std::size_t>(n)) {
    throw ValidationError("moments: ticker count does not match dimension");
  }
  return MomentEstimate{std::move(mu), std::move(sigma), std::move(tickers)};
}

PricePanel load_prices(const std::string& path) {
  std::ifstream file(path);
  if (!file.is_open()) {
    throw DataError("cannot open price file: " + path);
  }

  std::string line;
  if (!std::getline(file, line)) {
    throw FormatError(path + ": empty file");
  }
  auto header = split_csv_line(line);
  if (header.empty() || to_lower(trim(header[0])) != "date") {
    throw FormatError(path + ": row 1, column 1: header must start with 'date'");
  }

  PricePanel panel;
  std::unordered_set<std::string> seen;
  for (std::size_t c = 1; c < header.size(); ++c) {
    const std::string ticker = trim(header[c]);
    if (ticker.empty()) {
      throw FormatError(path + ": row 1, column " + std::to_string(c + 1) +
                        ": empty ticker name");
    }
    if (!seen.insert(ticker).second) {
      throw ValidationError(path + ": duplicate ticker '" + ticker + "' in header");
    }
    panel.tickers.push_back(ticker);
  }

  std::vector<std::pair<std::string, std::vector<double>>> rows;
  std::size_t line_no = 1;
  while (std::getline(file, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    auto fields = split_csv_line(line);
    if (fields.size() != header.size()) {
      throw FormatError(path + ": row " + std::to_string(line_no) + ": expected " +
                        std::to_string(header.size()) + " fields, got " +
                        std::to_string(fields.size()));
    }
    const std::string date = trim(fields[0]);
    if (!is_iso_date(date)) {
      throw FormatError(path + ": row " + std::to_string(line_no) +
                        ", column 1: invalid ISO date '" + date + "'");
    }
    std::vector<double> values(panel.tickers.size());
    for (std::size_t c = 1; c < fields.size(); ++c) {
      values[c - 1] = parse_cell(fields[c], line_no, c + 1);
    }
    rows.emplace_back(date, std::move(values));
  }

  std::stable_sort(rows.begin(), rows.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t r = 1; r < rows.size(); ++r) {
    if (rows[r].first == rows[r - 1].first) {
      throw ValidationError(path + ": duplicate date " + rows[r].first);
    }
  }

  panel.prices.resize(static_cast<Eigen::Index>(rows.size()),
                      static_cast<Eigen::Index>(panel.tickers.size()));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    panel.dates.push_back(rows[r].first);
    for (std::size_t c = 0; c < panel.tickers.size(); ++c) {
      panel.prices(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = rows[r].second[c];
    }
  }
  return panel;
}

DropReport drop_incomplete_assets(const PricePanel& panel) {
  std::vector<Eigen::Index> keep;
  DropReport report;
  for (Eigen::Index c = 0; c < panel.prices.cols(); ++c) {
    if (panel.prices.col(c).array().isNaN().any()) {
      report.dropped.push_back(panel.tickers[static_cast<std::size_t>(c)]);
    } else {
      keep.push_back(c);
    }
  }
  if (keep.empty()) {
    throw DataError("empty universe: every asset has missing prices");
  }
  report.panel.dates = panel.dates;
  report.panel.prices.resize(panel.prices.rows(), static_cast<Eigen::Index>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i) {
    report.panel.tickers.push_back(panel.tickers[static_cast<std::size_t>(keep[i])]);
    report.panel.prices.col(static_cast<Eigen::Index>(i)) = panel.prices.col(keep[i]);
  }
  return report;
}

ReturnPanel compute_returns(const PricePanel& panel) {
  const Eigen::Index rows = panel.prices.rows();
  const Eigen::Index cols = panel.prices.cols();
  if (rows < 3) {
    throw ValidationError("compute_returns: need at least 3 dates, got " +
                          std::to_string(rows));
  }
  for (Eigen::Index t = 0; t < rows; ++t) {
    for (Eigen::Index i = 0; i < cols; ++i) {
      const double p = panel.prices(t, i);
      if (std::isnan(p)) {
        throw DataError("compute_returns: missing price for " +
                        panel.tickers[static_cast<std::size_t>(i)] + " on " +
                        panel.dates[static_cast<std::size_t>(t)] +
                        " (drop incomplete assets first)");
      }
      if (p <= 0.0) {
        throw DataError("compute_returns: non-positive price for " +
                        panel.tickers[static_cast<std::size_t>(i)] + " on " +
                        panel.dates[static_cast<std::size_t>(t)]);
      }
    }
  }

  ReturnPanel out;
  out.tickers = panel.tickers;
  out.dates.assign(panel.dates.begin() + 1, panel.dates.end());
  out.returns.resize(rows - 1, cols);
  for (Eigen::Index t = 0; t + 1 < rows; ++t) {
    out.returns.row(t) =
        panel.prices.row(t + 1).array() / panel.prices.row(t).array() - 1.0;
  }
  return out;
}

MomentEstimate estimate_moments(const ReturnPanel& returns) {
  const Eigen::Index rows = returns.returns.rows();
  const Eigen::Index cols = returns.returns.cols();
  if (rows < 2) {
    throw ValidationError("estimate_moments: need at least 2 return rows, got " +
                          std::to_string(rows));
  }
  if (cols < 1) {
    throw ValidationError("estimate_moments: no assets");
  }
  if (!returns.returns.allFinite()) {
    throw DataError("estimate_moments: non-finite return entries");
  }

  Eigen::VectorXd mu = returns.returns.colwise().mean();
  Eigen::MatrixXd centered = returns.returns.rowwise() - mu.transpose();
  Eigen::MatrixXd sigma =
      (centered.transpose() * centered) / static_cast<double>(rows - 1);
  return make_moments(std::move(mu), std::move(sigma), returns.tickers);
}

}  // namespace oscar
