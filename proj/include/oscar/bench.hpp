#pragma once

#include <cstdint>
#include <json.hpp>
#include <string>
#include <vector>

#include "oscar/market_data.hpp"
#include "oscar/metrics.hpp"
#include "oscar/sparse_select.hpp"
#include "oscar/synth.hpp"

// Benchmark driver shared by the CLI: instance loading (price CSV, canonical
// instance JSON, or inline synthetic spec), cardinality resolution, the
// (k, heuristic) cell grid with optional exhaustive-oracle reference, and
// report emission. Everything except wall times is reproducible bit for bit
// from (input, seed, config).
namespace oscar {

struct RunConfig {
  std::string input;                  // *.csv | *.json | synth:...
  std::vector<int> k_values;
  std::vector<double> k_fractions;    // resolved as ceil(f * n)
  std::vector<Heuristic> heuristics = {Heuristic::TopSharpe, Heuristic::TopWeight,
                                       Heuristic::Forward, Heuristic::Backward,
                                       Heuristic::Oscar};
  bool oracle = false;
  double oracle_budget = 300.0;
  bool force_oracle = false;          // run past the cost guard
  double rf = 0.0;                    // per-period risk-free rate subtracted from mu
  std::uint64_t seed = 0;
  int jobs = 1;
  std::string out_dir;                // empty: compute only, write nothing
  bool strict = false;
};

struct LoadedInstance {
  MomentEstimate moments;
  std::string instance_id;
  double ingest_jitter = 0.0;             // conditioning applied at ingest
  int source_rows = 0;                    // return observations behind the estimate
  std::vector<std::string> dropped;       // tickers removed for missing data
};

/// Parses `synth:<structure>[:key=value]...` where structure is one of
/// diagonal, equicorr, factor. Keys: n, rho, f, idio, vol=lo..hi, mu=lo..hi.
SynthSpec parse_synth_spec(const std::string& text, std::uint64_t seed);

/// Full ingestion pipeline for a wide price CSV: load, drop incomplete
/// assets, compute returns, estimate moments, condition the covariance.
LoadedInstance ingest_csv(const std::string& csv_path);

/// Dispatches on the input form (.csv / .json / synth:) and subtracts the
/// risk-free rate from mu.
LoadedInstance load_input(const std::string& input, std::uint64_t seed, double rf);

/// Canonical instance file schema.
nlohmann::json instance_to_json(const LoadedInstance& instance);
LoadedInstance instance_from_json(const nlohmann::json& j, std::string instance_id);
LoadedInstance read_instance_file(const std::string& path);

/// Merges explicit cardinalities with ceiling-resolved fractions, sorted and
/// deduplicated. Every k must land in [1, n].
std::vector<int> resolve_k(std::vector<int> ks, const std::vector<double>& fractions, int n);

/// FNV-1a hash of the result-relevant configuration fields, as 16 hex chars.
std::string config_hash(const RunConfig& config);

/// Round-trip decimal formatting for doubles (%.17g).
std::string format_double(double value);

struct BenchOutput {
  std::vector<BenchRecord> records;        // sorted by (k, report order)
  std::vector<std::string> cell_errors;    // one entry per failed cell
  std::string conf_hash;
  std::string instance_id;
  int n = 0;
  double dominance = 1.0;
};

/// Runs the full (k, heuristic) grid. When `out_dir` is set, writes
/// records.csv, records.jsonl, table1.txt, table2.txt, scatter.csv and
/// summary.json into it.
BenchOutput run_bench(const RunConfig& config);

/// cmd_solve payload: one heuristic, one cardinality, JSON out.
nlohmann::json portfolio_to_json(const SparsePortfolio& portfolio,
                                 const LoadedInstance& instance);

/// Sweep serialization: sweep.csv (per cell) and sweep_summary.json.
void write_sweep_outputs(const std::string& out_dir, const SweepResult& sweep,
                         int n, int k, std::uint64_t seed);

}  // namespace oscar
