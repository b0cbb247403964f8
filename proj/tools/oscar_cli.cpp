// Command-line front end: ingest price data, benchmark the selection
// heuristics against the exhaustive oracle, run the dominance sweep, or solve
// a single instance. Exit codes: 0 ok, 1 failed cells under --strict,
// 2 input/config error, 3 internal error.

#include <CLI11.hpp>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <string>
#include <vector>

#include "oscar/bench.hpp"
#include "oscar/errors.hpp"
#include "oscar/exact_oracle.hpp"
#include "oscar/log.hpp"
#include "oscar/sparse_select.hpp"
#include "oscar/synth.hpp"

namespace {

std::vector<oscar::Heuristic> parse_heuristics(const std::string& csv) {
  std::vector<oscar::Heuristic> out;
  std::string token;
  std::stringstream ss(csv);
  while (std::getline(ss, token, ',')) {
    if (token.empty()) continue;
    const auto h = oscar::heuristic_from_name(token);
    if (!h.has_value() || *h == oscar::Heuristic::Exact) {
      throw oscar::ConfigError("unknown heuristic '" + token +
                               "' (expected a subset of OSCAR,SR,W,F,B)");
    }
    out.push_back(*h);
  }
  if (out.empty()) throw oscar::ConfigError("no heuristics selected");
  return out;
}

std::vector<double> parse_doubles(const std::string& csv, const std::string& what) {
  std::vector<double> out;
  std::string token;
  std::stringstream ss(csv);
  while (std::getline(ss, token, ',')) {
    if (token.empty()) continue;
    try {
      out.push_back(std::stod(token));
    } catch (const std::exception&) {
      throw oscar::ConfigError("cannot parse " + what + " value '" + token + "'");
    }
  }
  return out;
}

std::vector<int> parse_ints(const std::string& csv, const std::string& what) {
  std::vector<int> out;
  for (double v : parse_doubles(csv, what)) out.push_back(static_cast<int>(v));
  return out;
}

int run_ingest(const std::string& input, const std::string& out_path) {
  oscar::LoadedInstance instance = oscar::ingest_csv(input);
  const nlohmann::json j = oscar::instance_to_json(instance);
  std::ofstream out(out_path);
  if (!out) throw oscar::DataError("cannot write " + out_path);
  out << j.dump(2) << "\n";
  std::cerr << "ingested " << input << ": n=" << instance.moments.n() << ", rows="
            << instance.source_rows << ", dropped=" << instance.dropped.size()
            << ", jitter=" << instance.ingest_jitter << " -> " << out_path << "\n";
  return 0;
}

int run_bench_cmd(const oscar::RunConfig& config) {
  const oscar::BenchOutput output = oscar::run_bench(config);
  std::cerr << "instance " << output.instance_id << ": " << output.records.size()
            << " records";
  if (!config.out_dir.empty()) std::cerr << " -> " << config.out_dir;
  std::cerr << "\n";
  if (!output.cell_errors.empty()) {
    std::cerr << output.cell_errors.size() << " cell(s) failed:\n";
    for (const auto& e : output.cell_errors) std::cerr << "  " << e << "\n";
    if (config.strict) return 1;
  }
  return 0;
}

int run_sweep_cmd(int n, int k, const std::string& rhos_csv, int seeds_per_rho,
                  std::uint64_t seed, double budget, const std::string& out_dir) {
  const std::vector<double> rhos = parse_doubles(rhos_csv, "rho");
  if (rhos.empty()) throw oscar::ConfigError("no rho values given");
  const oscar::SweepResult sweep =
      oscar::dominance_sweep(n, k, rhos, seeds_per_rho, seed, budget);
  oscar::write_sweep_outputs(out_dir, sweep, n, k, seed);
  std::cerr << "sweep: " << sweep.cells.size() << " cells (" << sweep.excluded_cells
            << " excluded), correlation=" << sweep.correlation << " -> " << out_dir << "\n";
  return 0;
}

int run_solve_cmd(const std::string& input, const std::string& heuristic_name, int k,
                  std::uint64_t seed, double rf) {
  const auto heuristic = oscar::heuristic_from_name(heuristic_name);
  if (!heuristic.has_value() || *heuristic == oscar::Heuristic::Exact) {
    throw oscar::ConfigError("unknown heuristic '" + heuristic_name + "'");
  }
  const oscar::LoadedInstance instance = oscar::load_input(input, seed, rf);
  const oscar::SparsePortfolio portfolio = oscar::select(instance.moments, *heuristic, k);
  std::cout << oscar::portfolio_to_json(portfolio, instance).dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sparse tangent portfolio selection benchmark"};
  app.require_subcommand(1);

  // ingest
  auto* ingest = app.add_subcommand("ingest", "price CSV -> canonical instance JSON");
  std::string ingest_input, ingest_out = "instance.json";
  ingest->add_option("--input", ingest_input, "wide price CSV")->required();
  ingest->add_option("--out", ingest_out, "output instance JSON path");

  // bench
  auto* bench = app.add_subcommand("bench", "run heuristics (and oracle) over a k grid");
  oscar::RunConfig config;
  std::string bench_k, bench_kfrac, bench_heuristics;
  bench->add_option("--input", config.input, "price CSV, instance JSON or synth:...")->required();
  bench->add_option("--k", bench_k, "comma list of cardinalities");
  bench->add_option("--k-frac", bench_kfrac, "comma list of fractions, resolved as ceil(f*n)");
  bench->add_option("--heuristics", bench_heuristics, "subset of OSCAR,SR,W,F,B (default all)");
  bench->add_flag("--oracle", config.oracle, "run the exhaustive oracle per k");
  bench->add_option("--oracle-budget", config.oracle_budget, "oracle wall-clock budget, seconds");
  bench->add_flag("--force", config.force_oracle, "run the oracle past the cost guard");
  bench->add_option("--rf", config.rf, "per-period risk-free rate subtracted from mu");
  bench->add_option("--seed", config.seed, "seed for synthetic inputs");
  bench->add_option("--jobs", config.jobs, "worker threads for bench cells");
  bench->add_option("--out", config.out_dir, "report directory")->required();
  bench->add_flag("--strict", config.strict, "exit 1 when any cell fails");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "dominance vs performance sweep");
  int sweep_n = 14, sweep_k = 4, sweep_seeds = 30;
  std::string sweep_rhos = "0,0.3,0.6,0.9", sweep_out;
  std::uint64_t sweep_seed = 0;
  double sweep_budget = 300.0;
  sweep->add_option("--n", sweep_n, "assets per instance");
  sweep->add_option("--k", sweep_k, "cardinality");
  sweep->add_option("--rhos", sweep_rhos, "comma list of equicorrelation levels");
  sweep->add_option("--seeds-per-rho", sweep_seeds, "instances per rho");
  sweep->add_option("--seed", sweep_seed, "base seed");
  sweep->add_option("--oracle-budget", sweep_budget, "oracle budget per instance, seconds");
  sweep->add_option("--out", sweep_out, "report directory")->required();

  // solve
  auto* solve = app.add_subcommand("solve", "one heuristic, one k, portfolio JSON to stdout");
  std::string solve_input, solve_heuristic = "OSCAR";
  int solve_k = 0;
  std::uint64_t solve_seed = 0;
  double solve_rf = 0.0;
  solve->add_option("--input", solve_input, "price CSV, instance JSON or synth:...")->required();
  solve->add_option("--heuristic", solve_heuristic, "OSCAR, SR, W, F or B");
  solve->add_option("--k", solve_k, "cardinality")->required();
  solve->add_option("--seed", solve_seed, "seed for synthetic inputs");
  solve->add_option("--rf", solve_rf, "per-period risk-free rate");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (ingest->parsed()) return run_ingest(ingest_input, ingest_out);
    if (bench->parsed()) {
      if (!bench_k.empty()) config.k_values = parse_ints(bench_k, "k");
      if (!bench_kfrac.empty()) config.k_fractions = parse_doubles(bench_kfrac, "k fraction");
      if (!bench_heuristics.empty()) config.heuristics = parse_heuristics(bench_heuristics);
      return run_bench_cmd(config);
    }
    if (sweep->parsed()) {
      return run_sweep_cmd(sweep_n, sweep_k, sweep_rhos, sweep_seeds, sweep_seed,
                           sweep_budget, sweep_out);
    }
    if (solve->parsed()) {
      return run_solve_cmd(solve_input, solve_heuristic, solve_k, solve_seed, solve_rf);
    }
  } catch (const oscar::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const oscar::FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const oscar::DataError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const oscar::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const oscar::SpecError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const oscar::Error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
