// Copyright 2026 The qroute Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Command-line front end: circuit generation, single-circuit routing, full
// benchmark runs, G sweeps, curve fits, crossover grids and plot-data export.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qroute/circuitgen.hpp"
#include "qroute/fitting.hpp"
#include "qroute/harness.hpp"
#include "qroute/naive.hpp"
#include "qroute/random.hpp"
#include "qroute/sabre.hpp"

namespace {

using namespace qroute;
namespace fs = std::filesystem;

constexpr int kExitInvalid = 1;
constexpr int kExitRuntime = 2;

// Bad user input, reported with exit code 1.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Globals {
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> jobs;
  std::string out;
};

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  return in;
}

// Writes to `path`, or stdout when it is empty or "-".
template <class Fn>
void with_output(const std::string& path, Fn&& fn) {
  if (path.empty() || path == "-") {
    fn(std::cout);
    return;
  }
  if (fs::path(path).has_parent_path()) fs::create_directories(fs::path(path).parent_path());
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path);
  fn(out);
  if (!out) throw std::runtime_error("failed writing " + path);
}

Topology topology_arg(const std::string& name) {
  const auto t = parse_topology(name);
  if (!t) throw UsageError("connectivity must be path or square, got '" + name + "'");
  return *t;
}

// Options shared by bench and gsweep: a config file, then flag overrides.
struct ExperimentFlags {
  std::string config_file;
  std::string connectivity;
  std::string qubits;
  std::optional<std::size_t> circuits;
  std::optional<std::size_t> gates_per_qubit;
  std::string heuristics;
  std::optional<double> w;
  std::optional<std::size_t> extended_size;
  std::optional<double> delta;

  void attach(CLI::App* cmd) {
    cmd->add_option("--config", config_file, "key = value experiment file")->check(CLI::ExistingFile);
    cmd->add_option("--connectivity", connectivity, "path or square");
    cmd->add_option("--circuits", circuits, "random circuits per point");
    cmd->add_option("--gates-per-qubit", gates_per_qubit, "G = k * N");
    cmd->add_option("--heuristics", heuristics, "comma-separated router names");
    cmd->add_option("--w", w, "lookahead weight");
    cmd->add_option("--extended-size", extended_size, "extended set size");
    cmd->add_option("--delta", delta, "decay increment");
  }

  ExperimentConfig build(const Globals& g, const std::string& default_out) const {
    ExperimentConfig c;
    if (!config_file.empty()) {
      auto in = open_input(config_file);
      c = parse_config(in);
    }
    if (!connectivity.empty()) c.connectivity = topology_arg(connectivity);
    if (!qubits.empty()) c.qubit_counts = parse_size_list(qubits);
    if (circuits) c.circuits_per_point = *circuits;
    if (gates_per_qubit) c.gates_per_qubit = *gates_per_qubit;
    if (!heuristics.empty()) apply_config_entry(c, "heuristics", heuristics);
    if (w) c.sabre.lookahead_weight = *w;
    if (extended_size) c.sabre.extended_set_size = *extended_size;
    if (delta) c.sabre.decay_delta = *delta;
    if (g.seed) c.base_seed = *g.seed;
    if (g.jobs) c.jobs = *g.jobs;
    if (!g.out.empty()) c.output_dir = g.out;
    if (c.output_dir.empty()) c.output_dir = default_out;
    return c;
  }
};

void print_point_table(const std::vector<PointSummary>& summary) {
  std::printf("%-8s %-16s %6s %8s %10s %10s %12s\n", "conn", "router", "N", "G", "S/G", "D/G", "mean F");
  for (const PointSummary& p : summary) {
    std::printf("%-8s %-16s %6zu %8zu %10.4f %10.4f %12.4e\n", std::string(to_string(p.connectivity)).c_str(),
                p.heuristic.c_str(), p.n, p.g, p.s_over_g.mean, p.d_over_g.mean, p.mean_fidelity);
  }
}

int cmd_gen(const Globals& g, std::size_t qubits, std::size_t gates) {
  const Circuit c = random_circuit({qubits, gates, g.seed.value_or(1)});
  with_output(g.out, [&](std::ostream& out) { write_circuit(out, c); });
  return 0;
}

struct RouteFlags {
  std::string circuit;
  std::string connectivity = "square";
  std::optional<std::size_t> qubits;
  std::string heuristic = "basic";
  bool identity = false;
  std::optional<double> w;
  std::optional<std::size_t> extended_size;
  std::optional<double> delta;
  std::string stats;
};

int cmd_route(const Globals& g, const RouteFlags& f) {
  auto in = open_input(f.circuit);
  Circuit circuit;
  try {
    circuit = read_circuit(in);
  } catch (const std::runtime_error& e) {
    throw UsageError(e.what());
  }
  const std::size_t n = f.qubits.value_or(circuit.num_qubits());
  if (n < circuit.num_qubits()) throw UsageError("device has fewer qubits than the circuit");
  if (!is_valid_router(f.heuristic)) throw UsageError("unknown heuristic '" + f.heuristic + "'");
  const std::uint64_t seed = g.seed.value_or(1);
  const CouplingGraph graph = build_graph(topology_arg(f.connectivity), n);
  const DistanceMatrix dist = all_pairs_distances(graph);
  // Same stream split as the benchmark harness.
  const Layout layout = f.identity ? Layout::identity(n) : Layout::random(n, combine_seed(seed, 1));

  RoutedResult routed;
  if (f.heuristic == "naive") {
    routed = route_naive(circuit, graph, dist, layout);
  } else {
    HeuristicConfig hc;
    hc.variant = *parse_heuristic(f.heuristic);
    if (f.w) hc.lookahead_weight = *f.w;
    if (f.extended_size) hc.extended_set_size = *f.extended_size;
    if (f.delta) hc.decay_delta = *f.delta;
    try {
      hc.validate();
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    routed = route(circuit, graph, dist, layout, hc, combine_seed(seed, 2));
  }
  if (const auto err = find_routing_error(circuit, graph, routed)) {
    throw std::runtime_error("routing failed verification: " + *err);
  }
  if (!g.out.empty()) with_output(g.out, [&](std::ostream& out) { write_circuit(out, routed.circuit); });

  nlohmann::json stats = {{"S", routed.swap_count},     {"D_tilde", routed.routed_depth}, {"G", circuit.size()},
                          {"N", n},                     {"heuristic", f.heuristic},       {"seed", seed},
                          {"D", routed.original_depth}, {"forced_swaps", routed.forced_swaps}};
  with_output(f.stats, [&](std::ostream& out) { out << stats.dump() << '\n'; });
  return 0;
}

int cmd_bench(const Globals& g, const ExperimentFlags& f) {
  const ExperimentConfig c = f.build(g, "results");
  try {
    c.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const ExperimentResult r = run_experiment(c);
  print_point_table(r.summary);
  std::printf("wrote %zu records to %s\n", r.records.size(), c.output_dir.string().c_str());
  return 0;
}

int cmd_gsweep(const Globals& g, const ExperimentFlags& f, std::size_t n, const std::string& gates) {
  ExperimentConfig c = f.build(g, "gsweep");
  std::vector<std::size_t> gate_counts = gates.empty() ? std::vector<std::size_t>{2 * n, 5 * n, 10 * n, 20 * n}
                                                       : parse_size_list(gates);
  c.qubit_counts = {n};
  c.gate_counts = gate_counts;
  try {
    c.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const ExperimentResult r = g_sweep(c, n, gate_counts);
  print_point_table(r.summary);
  return 0;
}

int cmd_fit(const std::string& csv, const std::string& model, const std::string& connectivity,
            const std::string& heuristics, double lo, double hi, const std::string& out) {
  const auto kind = parse_curve_kind(model);
  if (!kind) throw UsageError("unknown model '" + model + "'");
  auto in = open_input(csv);
  const auto summary = read_summary_csv(in);
  std::optional<Topology> conn;
  if (!connectivity.empty()) conn = topology_arg(connectivity);
  std::vector<std::string> wanted;
  if (!heuristics.empty()) {
    ExperimentConfig scratch;
    apply_config_entry(scratch, "heuristics", heuristics);
    wanted = scratch.routers;
  }

  std::map<std::pair<Topology, std::string>, std::vector<FitPoint>> series;
  for (const PointSummary& p : summary) {
    if (conn && p.connectivity != *conn) continue;
    if (!wanted.empty() && std::find(wanted.begin(), wanted.end(), p.heuristic) == wanted.end()) continue;
    const double n = static_cast<double>(p.n);
    if (n < lo || n > hi) continue;
    double y = 0.0;
    switch (*kind) {
      case CurveKind::SwapPower1D:
      case CurveKind::SwapPower2D: y = p.s_over_g.mean; break;
      case CurveKind::DepthLog1D:
      case CurveKind::DepthLog2D: y = p.d_over_g.mean; break;
      case CurveKind::FidelityExp: y = p.log_mean_fidelity; break;
    }
    series[{p.connectivity, p.heuristic}].push_back({n, y});
  }
  if (series.empty()) throw UsageError("no rows of " + csv + " match the filters");

  with_output(out, [&](std::ostream& os) {
    for (const auto& [key, points] : series) {
      const FitResult r = fit(*kind, points);
      nlohmann::json j = {{"connectivity", std::string(to_string(key.first))},
                          {"heuristic", key.second},
                          {"model", model},
                          {"params", r.model.params},
                          {"r_squared", r.r_squared},
                          {"points", points.size()}};
      os << j.dump() << '\n';
    }
  });
  return 0;
}

struct CrossoverFlags {
  std::vector<std::string> runs;
  std::string connectivity = "square";
  std::string challenger = "basic-decay";
  std::string incumbent = "lookahead-decay";
  std::string tqg = "0.999:0.9999:4";
  std::string idle = "0.99999:0.999999:4";
  int lo = 10;
  int hi = 200;
};

int cmd_crossover(const Globals& g, const CrossoverFlags& f) {
  std::vector<RunRecord> records;
  for (const auto& path : f.runs) {
    auto in = open_input(path);
    const auto part = read_records_jsonl(in);
    records.insert(records.end(), part.begin(), part.end());
  }
  if (!is_valid_router(f.challenger) || !is_valid_router(f.incumbent)) throw UsageError("unknown router name");
  if (f.lo >= f.hi) throw UsageError("--lo must be below --hi");
  const auto fs_list = parse_real_list(f.tqg);
  const auto idle_list = parse_real_list(f.idle);
  for (double x : fs_list)
    if (!(x > 0.0 && x <= 1.0)) throw UsageError("gate fidelities must lie in (0, 1]");
  for (double x : idle_list)
    if (!(x > 0.0 && x <= 1.0)) throw UsageError("idling fidelities must lie in (0, 1]");
  const auto cells = crossover_grid(records, topology_arg(f.connectivity), f.challenger, f.incumbent, fs_list,
                                    idle_list, f.lo, f.hi, g.jobs.value_or(1));
  with_output(g.out, [&](std::ostream& out) { write_crossover_csv(out, cells); });
  return 0;
}

int cmd_report(const Globals& g, const std::string& csv) {
  auto in = open_input(csv);
  const auto summary = read_summary_csv(in);
  const fs::path dir = g.out.empty() ? fs::path("report") : fs::path(g.out);
  for (const auto& p : write_report(summary, dir)) std::printf("%s\n", p.string().c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qroute: qubit routing benchmarks"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--seed", g.seed, "base random seed");
  app.add_option("--jobs", g.jobs, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--out", g.out, "output file or directory");

  std::size_t gen_qubits = 0, gen_gates = 0;
  auto* gen = app.add_subcommand("gen", "generate a random circuit");
  gen->add_option("--qubits", gen_qubits, "qubit count")->required()->check(CLI::Range(2, 1 << 30));
  gen->add_option("--gates", gen_gates, "gate count")->required();

  RouteFlags rf;
  auto* rt = app.add_subcommand("route", "route one circuit and print its statistics");
  rt->add_option("--circuit", rf.circuit, "circuit file")->required();
  rt->add_option("--connectivity", rf.connectivity, "path or square");
  rt->add_option("--qubits", rf.qubits, "device size (defaults to the circuit width)");
  rt->add_option("--heuristic", rf.heuristic, "basic, lookahead, lookahead-decay, basic-decay or naive");
  rt->add_flag("--identity-layout", rf.identity, "start from the identity layout");
  rt->add_option("--w", rf.w, "lookahead weight");
  rt->add_option("--extended-size", rf.extended_size, "extended set size");
  rt->add_option("--delta", rf.delta, "decay increment");
  rt->add_option("--stats", rf.stats, "write the statistics record here instead of stdout");

  ExperimentFlags bench_flags;
  auto* bench = app.add_subcommand("bench", "run the benchmark protocol");
  bench_flags.attach(bench);
  bench->add_option("--qubits", bench_flags.qubits, "qubit counts, a:b:step or a,b,c");

  ExperimentFlags sweep_flags;
  std::size_t sweep_n = 100;
  std::string sweep_gates;
  auto* sweep = app.add_subcommand("gsweep", "vary G at fixed N");
  sweep_flags.attach(sweep);
  sweep->add_option("--qubits", sweep_n, "qubit count")->check(CLI::Range(2, 1 << 30));
  sweep->add_option("--gates", sweep_gates, "gate counts (default 2N,5N,10N,20N)");

  std::string fit_csv, fit_model, fit_conn, fit_heur, fit_out;
  double fit_lo = 0.0, fit_hi = 1e18;
  auto* fitc = app.add_subcommand("fit", "fit a scaling curve to aggregate data");
  fitc->add_option("--csv", fit_csv, "aggregate.csv from bench")->required();
  fitc->add_option("--model", fit_model, "swap-1d, swap-2d, depth-1d, depth-2d or fidelity")->required();
  fitc->add_option("--connectivity", fit_conn, "keep only this connectivity");
  fitc->add_option("--heuristics", fit_heur, "keep only these routers");
  fitc->add_option("--min-n", fit_lo, "smallest N to include");
  fitc->add_option("--max-n", fit_hi, "largest N to include");

  CrossoverFlags cf;
  auto* cross = app.add_subcommand("crossover", "crossover grid over gate and idling fidelity");
  cross->add_option("--runs", cf.runs, "runs_*.jsonl files")->required()->check(CLI::ExistingFile);
  cross->add_option("--connectivity", cf.connectivity, "path or square");
  cross->add_option("--challenger", cf.challenger, "router expected to overtake");
  cross->add_option("--incumbent", cf.incumbent, "router being overtaken");
  cross->add_option("--tqg-fidelity", cf.tqg, "lo:hi:count or list");
  cross->add_option("--idling-fidelity", cf.idle, "lo:hi:count or list");
  cross->add_option("--lo", cf.lo, "smallest N searched");
  cross->add_option("--hi", cf.hi, "largest N searched");

  std::string report_csv;
  auto* report = app.add_subcommand("report", "write plot-ready series per router");
  report->add_option("--csv", report_csv, "aggregate.csv from bench")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInvalid;
  }

  try {
    if (*gen) return cmd_gen(g, gen_qubits, gen_gates);
    if (*rt) return cmd_route(g, rf);
    if (*bench) return cmd_bench(g, bench_flags);
    if (*sweep) return cmd_gsweep(g, sweep_flags, sweep_n, sweep_gates);
    if (*fitc) return cmd_fit(fit_csv, fit_model, fit_conn, fit_heur, fit_lo, fit_hi, g.out);
    if (*cross) return cmd_crossover(g, cf);
    if (*report) return cmd_report(g, report_csv);
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "qroute: %s\n", e.what());
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "qroute: %s\n", e.what());
    return kExitRuntime;
  }
  return kExitRuntime;
}
