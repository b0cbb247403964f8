#include "oscar/bench.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <thread>

#include "oscar/errors.hpp"
#include "oscar/exact_oracle.hpp"
#include "oscar/log.hpp"
#include "oscar/spd_linalg.hpp"

namespace oscar {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

// Column order of the report grids, mirroring the usual benchmark layout.
constexpr Heuristic kReportOrder[] = {Heuristic::TopSharpe, Heuristic::TopWeight,
                                      Heuristic::Forward, Heuristic::Backward,
                                      Heuristic::Oscar, Heuristic::Exact};

int report_rank(Heuristic h) {
  for (int i = 0; i < 6; ++i) {
    if (kReportOrder[i] == h) return i;
  }
  return 6;
}

double parse_number(const std::string& text, const std::string& what) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ConfigError("cannot parse " + what + " from '" + text + "'");
  }
  return value;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string part;
  std::stringstream ss(text);
  while (std::getline(ss, part, sep)) parts.push_back(part);
  return parts;
}

std::string file_stem(const std::string& path) {
  return fs::path(path).stem().string();
}

std::string structure_name(CovStructure s) {
  switch (s) {
    case CovStructure::Diagonal: return "diagonal";
    case CovStructure::Equicorrelated: return "equicorr";
    case CovStructure::RandomFactor: return "factor";
  }
  return "?";
}

// Runs fn(0..count-1) on up to `jobs` threads. fn must not throw.
void run_parallel(int jobs, std::size_t count, const std::function<void(std::size_t)>& fn) {
  jobs = std::max(1, std::min<int>(jobs, static_cast<int>(count)));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) break;
      fn(i);
    }
  };
  std::vector<std::thread> threads;
  for (int t = 0; t < jobs - 1; ++t) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();
}

std::string csv_optional(const std::optional<double>& v) {
  return v.has_value() ? format_double(*v) : "";
}

std::string fixed(double value, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", precision, value);
  return buf;
}

void write_text_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write " + path.string());
  out << content;
}

struct CellKey {
  int k;
  Heuristic heuristic;
};

void write_reports(const fs::path& dir, const RunConfig& config, const BenchOutput& output,
                   const LoadedInstance& instance, const std::vector<int>& ks,
                   const std::map<int, OracleResult>& oracles) {
  fs::create_directories(dir);

  // records.csv
  {
    std::ostringstream out;
    out << "instance_id,n,k,heuristic,sharpe,performance_pct,hit_count,wall_time_s,"
           "oracle_exhausted,jitter,dominance\n";
    for (const BenchRecord& r : output.records) {
      out << r.instance_id << ',' << r.n << ',' << r.k << ',' << heuristic_name(r.heuristic)
          << ',' << format_double(r.sharpe) << ',' << csv_optional(r.performance_pct) << ','
          << (r.hit_count.has_value() ? std::to_string(*r.hit_count) : "") << ','
          << format_double(r.wall_time) << ',' << (r.oracle_exhausted ? "true" : "false")
          << ',' << format_double(r.jitter_applied) << ',' << format_double(r.dominance)
          << '\n';
    }
    write_text_file(dir / "records.csv", out.str());
  }

  // records.jsonl
  {
    std::ostringstream out;
    for (const BenchRecord& r : output.records) {
      json j{{"instance_id", r.instance_id},
             {"n", r.n},
             {"k", r.k},
             {"heuristic", std::string(heuristic_name(r.heuristic))},
             {"sharpe", r.sharpe},
             {"wall_time_s", r.wall_time},
             {"oracle_exhausted", r.oracle_exhausted},
             {"jitter", r.jitter_applied},
             {"dominance", r.dominance},
             {"config_hash", output.conf_hash},
             {"seed", config.seed}};
      j["performance_pct"] = r.performance_pct.has_value() ? json(*r.performance_pct) : json();
      j["hit_count"] = r.hit_count.has_value() ? json(*r.hit_count) : json();
      if (r.hit_count.has_value() && r.k > 0) {
        j["hit_pct"] = 100.0 * *r.hit_count / r.k;
      }
      out << j.dump() << '\n';
    }
    write_text_file(dir / "records.jsonl", out.str());
  }

  auto find_record = [&](int k, Heuristic h) -> const BenchRecord* {
    for (const BenchRecord& r : output.records) {
      if (r.k == k && r.heuristic == h) return &r;
    }
    return nullptr;
  };

  // table1.txt: per-k grid, time on one line and performance on the next
  {
    std::ostringstream out;
    out << "instance " << output.instance_id << "  (n=" << output.n
        << ", dominance=" << fixed(output.dominance, 4) << ")\n\n";
    for (int k : ks) {
      out << "k=" << k << '\n';
      out << "  " << std::left;
      out.width(8);
      out << "";
      for (Heuristic h : kReportOrder) {
        out.width(14);
        out << heuristic_name(h);
      }
      out << '\n';
      out << "  ";
      out.width(8);
      out << "time";
      for (Heuristic h : kReportOrder) {
        const BenchRecord* r = find_record(k, h);
        out.width(14);
        out << (r ? fixed(r->wall_time, 4) + "s" : "-");
      }
      out << '\n';
      out << "  ";
      out.width(8);
      out << "perf";
      for (Heuristic h : kReportOrder) {
        const BenchRecord* r = find_record(k, h);
        out.width(14);
        out << (r && r->performance_pct.has_value() ? fixed(*r->performance_pct, 2) + "%" : "-");
      }
      out << "\n\n";
    }
    if (!oracles.empty()) {
      out << "performance denominator: exhaustive enumeration"
          << " (exhausted-exact; ratios cannot exceed 100% when exhausted)\n";
    }
    write_text_file(dir / "table1.txt", out.str());
  }

  // table2.txt: hit counts
  {
    std::ostringstream out;
    out << "hit counts vs exact support, instance " << output.instance_id << '\n';
    out << std::left;
    out.width(6);
    out << "k";
    for (Heuristic h : kReportOrder) {
      if (h == Heuristic::Exact) continue;
      out.width(8);
      out << heuristic_name(h);
    }
    out << '\n';
    for (int k : ks) {
      out.width(6);
      out << k;
      for (Heuristic h : kReportOrder) {
        if (h == Heuristic::Exact) continue;
        const BenchRecord* r = find_record(k, h);
        out.width(8);
        out << (r && r->hit_count.has_value() ? std::to_string(*r->hit_count) : "-");
      }
      out << '\n';
    }
    write_text_file(dir / "table2.txt", out.str());
  }

  // scatter.csv: time-vs-performance points, one per heuristic cell
  {
    std::ostringstream out;
    out << "k,heuristic,wall_time_s,performance_pct\n";
    for (const BenchRecord& r : output.records) {
      if (r.heuristic == Heuristic::Exact) continue;
      out << r.k << ',' << heuristic_name(r.heuristic) << ',' << format_double(r.wall_time)
          << ',' << csv_optional(r.performance_pct) << '\n';
    }
    write_text_file(dir / "scatter.csv", out.str());
  }

  // summary.json
  {
    json heuristics = json::array();
    for (Heuristic h : config.heuristics) heuristics.push_back(std::string(heuristic_name(h)));
    json oracle_info;
    oracle_info["enabled"] = config.oracle;
    oracle_info["budget_seconds"] = config.oracle_budget;
    json per_k = json::object();
    for (const auto& [k, res] : oracles) {
      per_k[std::to_string(k)] = {{"exhausted", res.exhausted},
                                  {"subsets_evaluated", res.subsets_evaluated},
                                  {"skipped", res.skipped.size()},
                                  {"wall_time_s", res.best.wall_time}};
    }
    oracle_info["per_k"] = per_k;

    json summary{{"config_hash", output.conf_hash},
                 {"seed", config.seed},
                 {"input", config.input},
                 {"instance_id", output.instance_id},
                 {"n", output.n},
                 {"dominance", output.dominance},
                 {"ingest_jitter", instance.ingest_jitter},
                 {"rf", config.rf},
                 {"k_values", ks},
                 {"heuristics", heuristics},
                 {"oracle", oracle_info},
                 {"failures", output.cell_errors},
                 {"records", output.records.size()}};
    write_text_file(dir / "summary.json", summary.dump(2) + "\n");
  }
}

}  // namespace

std::string format_double(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

SynthSpec parse_synth_spec(const std::string& text, std::uint64_t seed) {
  auto parts = split(text, ':');
  if (parts.size() < 2 || parts[0] != "synth") {
    throw ConfigError("synthetic spec must look like synth:<structure>[:key=value]...");
  }
  SynthSpec spec;
  spec.seed = seed;
  const std::string& structure = parts[1];
  if (structure == "diagonal") {
    spec.structure = CovStructure::Diagonal;
    spec.vol_min = 0.3;
    spec.vol_max = 1.2;
  } else if (structure == "equicorr" || structure == "equicorrelated") {
    spec.structure = CovStructure::Equicorrelated;
  } else if (structure == "factor" || structure == "random-factor") {
    spec.structure = CovStructure::RandomFactor;
  } else {
    throw ConfigError("unknown synthetic structure '" + structure +
                      "' (expected diagonal, equicorr or factor)");
  }

  for (std::size_t i = 2; i < parts.size(); ++i) {
    const auto eq = parts[i].find('=');
    if (eq == std::string::npos) {
      throw ConfigError("synthetic spec entry '" + parts[i] + "' is not key=value");
    }
    const std::string key = parts[i].substr(0, eq);
    const std::string value = parts[i].substr(eq + 1);
    auto parse_range = [&](double& lo, double& hi) {
      const auto dots = value.find("..");
      if (dots == std::string::npos) {
        throw ConfigError("range '" + value + "' must look like lo..hi");
      }
      lo = parse_number(value.substr(0, dots), key);
      hi = parse_number(value.substr(dots + 2), key);
    };
    if (key == "n") {
      spec.n = static_cast<int>(parse_number(value, "n"));
    } else if (key == "rho") {
      spec.rho = parse_number(value, "rho");
    } else if (key == "f") {
      spec.factors = static_cast<int>(parse_number(value, "f"));
    } else if (key == "idio") {
      spec.idio_scale = parse_number(value, "idio");
    } else if (key == "vol") {
      parse_range(spec.vol_min, spec.vol_max);
    } else if (key == "mu") {
      parse_range(spec.mu_min, spec.mu_max);
    } else {
      throw ConfigError("unknown synthetic spec key '" + key + "'");
    }
  }
  return spec;
}

LoadedInstance ingest_csv(const std::string& csv_path) {
  const PricePanel raw = load_prices(csv_path);
  DropReport cleaned = drop_incomplete_assets(raw);
  const ReturnPanel returns = compute_returns(cleaned.panel);
  MomentEstimate moments = estimate_moments(returns);
  auto [conditioned, jitter] = condition_spd(moments.sigma, kDefaultMaxJitter);
  moments.sigma = std::move(conditioned);

  LoadedInstance instance;
  instance.moments = std::move(moments);
  instance.instance_id = file_stem(csv_path);
  instance.ingest_jitter = jitter;
  instance.source_rows = static_cast<int>(returns.returns.rows());
  instance.dropped = std::move(cleaned.dropped);
  return instance;
}

nlohmann::json instance_to_json(const LoadedInstance& instance) {
  const MomentEstimate& m = instance.moments;
  json mu = json::array();
  for (Eigen::Index i = 0; i < m.mu.size(); ++i) mu.push_back(m.mu[i]);
  json sigma = json::array();
  for (Eigen::Index i = 0; i < m.sigma.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.sigma.cols(); ++j) row.push_back(m.sigma(i, j));
    sigma.push_back(std::move(row));
  }
  return json{{"tickers", m.tickers},
              {"mu", std::move(mu)},
              {"sigma", std::move(sigma)},
              {"meta", {{"rows", instance.source_rows},
                        {"dropped", instance.dropped},
                        {"jitter", instance.ingest_jitter}}}};
}

LoadedInstance instance_from_json(const nlohmann::json& j, std::string instance_id) {
  if (!j.contains("tickers") || !j.contains("mu") || !j.contains("sigma")) {
    throw FormatError("instance json: missing tickers, mu or sigma");
  }
  std::vector<std::string> tickers = j.at("tickers").get<std::vector<std::string>>();
  std::vector<double> mu_values = j.at("mu").get<std::vector<double>>();
  const auto n = static_cast<Eigen::Index>(mu_values.size());
  if (tickers.size() != mu_values.size()) {
    throw FormatError("instance json: tickers and mu lengths differ");
  }
  Eigen::VectorXd mu(n);
  for (Eigen::Index i = 0; i < n; ++i) mu[i] = mu_values[static_cast<std::size_t>(i)];

  const json& sig = j.at("sigma");
  if (!sig.is_array() || static_cast<Eigen::Index>(sig.size()) != n) {
    throw FormatError("instance json: sigma must be an n x n array");
  }
  Eigen::MatrixXd sigma(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const json& row = sig.at(static_cast<std::size_t>(i));
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) {
      throw FormatError("instance json: sigma row " + std::to_string(i) + " has wrong length");
    }
    for (Eigen::Index jj = 0; jj < n; ++jj) {
      sigma(i, jj) = row.at(static_cast<std::size_t>(jj)).get<double>();
    }
  }

  LoadedInstance instance;
  instance.instance_id = std::move(instance_id);
  if (j.contains("meta")) {
    const json& meta = j.at("meta");
    instance.ingest_jitter = meta.value("jitter", 0.0);
    instance.source_rows = meta.value("rows", 0);
    if (meta.contains("dropped")) {
      instance.dropped = meta.at("dropped").get<std::vector<std::string>>();
    }
  }
  instance.moments = make_moments(std::move(mu), std::move(sigma), std::move(tickers));
  return instance;
}

LoadedInstance read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open instance file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw FormatError(path + ": " + e.what());
  }
  return instance_from_json(j, file_stem(path));
}

LoadedInstance load_input(const std::string& input, std::uint64_t seed, double rf) {
  LoadedInstance instance;
  if (input.rfind("synth:", 0) == 0) {
    const SynthSpec spec = parse_synth_spec(input, seed);
    instance.moments = generate(spec, 0);
    instance.instance_id = "synth-" + structure_name(spec.structure) + "-n" +
                           std::to_string(spec.n) + "-seed" + std::to_string(seed);
  } else if (input.size() > 4 && input.substr(input.size() - 4) == ".csv") {
    instance = ingest_csv(input);
  } else if (input.size() > 5 && input.substr(input.size() - 5) == ".json") {
    instance = read_instance_file(input);
  } else {
    throw ConfigError("input '" + input + "' is neither *.csv, *.json nor synth:...");
  }
  if (rf != 0.0) {
    instance.moments.mu.array() -= rf;
  }
  return instance;
}

std::vector<int> resolve_k(std::vector<int> ks, const std::vector<double>& fractions, int n) {
  for (double f : fractions) {
    if (!(f > 0.0) || f > 1.0) {
      throw ConfigError("cardinality fraction " + std::to_string(f) + " must be in (0, 1]");
    }
    ks.push_back(static_cast<int>(std::ceil(f * static_cast<double>(n))));
  }
  if (ks.empty()) {
    throw ConfigError("no cardinality given: use --k or --k-frac");
  }
  std::sort(ks.begin(), ks.end());
  ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
  for (int k : ks) {
    if (k < 1 || k > n) {
      throw ConfigError("cardinality k = " + std::to_string(k) + " outside [1, " +
                        std::to_string(n) + "]");
    }
  }
  return ks;
}

std::string config_hash(const RunConfig& config) {
  std::ostringstream canon;
  canon << "input=" << config.input << ";k=";
  for (int k : config.k_values) canon << k << ',';
  canon << ";kfrac=";
  for (double f : config.k_fractions) canon << format_double(f) << ',';
  canon << ";heuristics=";
  for (Heuristic h : config.heuristics) canon << heuristic_name(h) << ',';
  canon << ";oracle=" << config.oracle << ";budget=" << format_double(config.oracle_budget)
        << ";rf=" << format_double(config.rf) << ";seed=" << config.seed;

  const std::string s = canon.str();
  std::uint64_t hash = 1469598103934665603ULL;
  for (unsigned char c : s) {
    hash ^= c;
    hash *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

BenchOutput run_bench(const RunConfig& config) {
  if (config.heuristics.empty()) {
    throw ConfigError("no heuristics selected");
  }
  const LoadedInstance instance = load_input(config.input, config.seed, config.rf);
  const MomentEstimate& m = instance.moments;
  const int n = m.n();
  const std::vector<int> ks = resolve_k(config.k_values, config.k_fractions, n);

  BenchOutput output;
  output.conf_hash = config_hash(config);
  output.instance_id = instance.instance_id;
  output.n = n;
  output.dominance = n >= 2 ? diagonal_dominance(m.sigma) : 1.0;

  // Phase 1: oracle per cardinality.
  std::map<int, OracleResult> oracles;
  std::vector<std::string> oracle_errors(ks.size());
  if (config.oracle) {
    std::vector<std::optional<OracleResult>> slots(ks.size());
    run_parallel(config.jobs, ks.size(), [&](std::size_t i) {
      const int k = ks[i];
      const double count = binomial_approx(n, k);
      const double est_seconds = count * (k * k * k / 3.0 + 20.0 * k + 100.0) * 1e-9;
      if (est_seconds > config.oracle_budget && !config.force_oracle) {
        oracle_errors[i] = "oracle guard: k=" + std::to_string(k) + " has " +
                           format_double(count) + " subsets, ~" + fixed(est_seconds, 1) +
                           "s estimated vs budget " + fixed(config.oracle_budget, 1) +
                           "s; raise --oracle-budget or pass --force";
        return;
      }
      try {
        slots[i] = solve_exact(m, k, config.oracle_budget);
      } catch (const Error& e) {
        oracle_errors[i] = std::string("oracle failed for k=") + std::to_string(k) + ": " +
                           e.what();
      }
    });
    for (std::size_t i = 0; i < ks.size(); ++i) {
      if (slots[i].has_value()) {
        oracles.emplace(ks[i], std::move(*slots[i]));
      } else if (!oracle_errors[i].empty()) {
        output.cell_errors.push_back(oracle_errors[i]);
        log::warn(oracle_errors[i]);
      }
    }
  }

  // Phase 2: heuristic cells.
  struct Cell {
    int k;
    Heuristic heuristic;
  };
  std::vector<Cell> cells;
  for (int k : ks) {
    for (Heuristic h : config.heuristics) cells.push_back({k, h});
  }
  std::vector<std::optional<BenchRecord>> results(cells.size());
  std::vector<std::string> cell_errors(cells.size());
  run_parallel(config.jobs, cells.size(), [&](std::size_t i) {
    const Cell& cell = cells[i];
    try {
      SparsePortfolio sp = select(m, cell.heuristic, cell.k);
      BenchRecord record;
      record.instance_id = instance.instance_id;
      record.n = n;
      record.k = cell.k;
      record.heuristic = cell.heuristic;
      record.sharpe = sp.sharpe;
      record.wall_time = sp.wall_time;
      record.jitter_applied = sp.jitter_applied;
      record.dominance = output.dominance;
      const auto it = oracles.find(cell.k);
      if (it != oracles.end()) {
        record.oracle_exhausted = it->second.exhausted;
        try {
          record.performance_pct = performance_ratio(sp, it->second);
        } catch (const UndefinedRatioError& e) {
          cell_errors[i] = std::string(heuristic_name(cell.heuristic)) +
                           " k=" + std::to_string(cell.k) + ": " + e.what();
        }
        record.hit_count = hit_count(sp.support, it->second.best.support);
      }
      results[i] = std::move(record);
    } catch (const Error& e) {
      cell_errors[i] = std::string(heuristic_name(cell.heuristic)) + " k=" +
                       std::to_string(cell.k) + ": " + e.what();
    }
  });
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (results[i].has_value()) output.records.push_back(std::move(*results[i]));
    if (!cell_errors[i].empty()) {
      output.cell_errors.push_back(cell_errors[i]);
      log::warn(cell_errors[i]);
    }
  }

  // Oracle reference rows.
  for (const auto& [k, oracle] : oracles) {
    BenchRecord record;
    record.instance_id = instance.instance_id;
    record.n = n;
    record.k = k;
    record.heuristic = Heuristic::Exact;
    record.sharpe = oracle.best.sharpe;
    record.performance_pct = 100.0;
    record.hit_count = k;
    record.wall_time = oracle.best.wall_time;
    record.oracle_exhausted = oracle.exhausted;
    record.jitter_applied = oracle.best.jitter_applied;
    record.dominance = output.dominance;
    output.records.push_back(std::move(record));
  }

  std::sort(output.records.begin(), output.records.end(),
            [](const BenchRecord& a, const BenchRecord& b) {
              if (a.k != b.k) return a.k < b.k;
              return report_rank(a.heuristic) < report_rank(b.heuristic);
            });

  if (!config.out_dir.empty()) {
    write_reports(config.out_dir, config, output, instance, ks, oracles);
  }
  return output;
}

nlohmann::json portfolio_to_json(const SparsePortfolio& portfolio,
                                 const LoadedInstance& instance) {
  json support = json::array();
  json weights = json::object();
  for (int i : portfolio.support) {
    const std::string& ticker = instance.moments.tickers[static_cast<std::size_t>(i)];
    support.push_back(ticker);
    weights[ticker] = portfolio.weights[i];
  }
  return json{{"instance_id", instance.instance_id},
              {"heuristic", std::string(heuristic_name(portfolio.heuristic))},
              {"k", portfolio.support.size()},
              {"n", instance.moments.n()},
              {"support", std::move(support)},
              {"support_indices", portfolio.support},
              {"weights", std::move(weights)},
              {"sharpe", portfolio.sharpe},
              {"wall_time_s", portfolio.wall_time},
              {"jitter", portfolio.jitter_applied},
              {"budget_degenerate", portfolio.budget_degenerate},
              {"warnings", portfolio.warnings}};
}

void write_sweep_outputs(const std::string& out_dir, const SweepResult& sweep,
                         int n, int k, std::uint64_t seed) {
  const fs::path dir(out_dir);
  fs::create_directories(dir);

  std::ostringstream csv;
  csv << "rho,seed,dominance,performance_pct,oracle_exhausted\n";
  for (const SweepCell& cell : sweep.cells) {
    csv << format_double(cell.rho) << ',' << cell.seed_index << ','
        << format_double(cell.dominance) << ','
        << (cell.oracle_exhausted ? format_double(cell.performance_pct) : std::string()) << ','
        << (cell.oracle_exhausted ? "true" : "false") << '\n';
  }
  write_text_file(dir / "sweep.csv", csv.str());

  json per_rho = json::array();
  for (const auto& [rho, mean] : sweep.per_rho_mean) {
    per_rho.push_back({{"rho", rho},
                       {"mean_performance_pct", std::isnan(mean) ? json() : json(mean)}});
  }
  json summary{{"n", n},
               {"k", k},
               {"seed", seed},
               {"cells", sweep.cells.size()},
               {"excluded_cells", sweep.excluded_cells},
               {"correlation", std::isnan(sweep.correlation) ? json() : json(sweep.correlation)},
               {"per_rho", std::move(per_rho)}};
  write_text_file(dir / "sweep_summary.json", summary.dump(2) + "\n");
}

}  // namespace oscar
