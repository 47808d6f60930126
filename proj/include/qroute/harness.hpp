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

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qroute/connectivity.hpp"
#include "qroute/fitting.hpp"
#include "qroute/metrics.hpp"
#include "qroute/sabre.hpp"

namespace qroute {

/// Router names accepted by the harness: the four SABRE heuristics plus
/// "naive", in canonical order.
const std::vector<std::string>& router_names();
bool is_valid_router(std::string_view name);

struct ExperimentConfig {
  Topology connectivity = Topology::Square;
  std::vector<std::size_t> qubit_counts = default_qubit_counts();
  std::size_t circuits_per_point = 50;
  /// G = gates_per_qubit * N unless gate_counts is set.
  std::size_t gates_per_qubit = 10;
  /// Fixed gate counts; every N is routed at each of them (G sweep).
  std::vector<std::size_t> gate_counts;
  std::vector<std::string> routers = router_names();
  /// Knobs shared by every SABRE variant; the variant itself comes from the
  /// router name.
  HeuristicConfig sabre;
  NoiseParams noise;
  std::uint64_t base_seed = 1;
  std::size_t jobs = 1;
  /// Empty: keep results in memory only.
  std::filesystem::path output_dir;

  static std::vector<std::size_t> default_qubit_counts();
  /// Throws std::invalid_argument naming the first bad field.
  void validate() const;
};

struct RunRecord {
  std::size_t n = 0;
  std::size_t g = 0;
  std::size_t s = 0;
  std::size_t depth_original = 0;
  std::size_t depth_routed = 0;
  double g_tilde = 0.0;
  std::size_t idle_layers = 0;
  double fidelity = 0.0;
  double log_fidelity = 0.0;
  std::string heuristic;
  Topology connectivity = Topology::Path;
  std::uint64_t seed = 0;
  std::size_t circuit_index = 0;
  std::size_t forced_swaps = 0;
};

struct Moments {
  double mean = 0.0;
  double std = 0.0;  // sample standard deviation; 0 for a single value
};

struct PointSummary {
  Topology connectivity = Topology::Path;
  std::string heuristic;
  std::size_t n = 0;
  std::size_t g = 0;
  std::size_t count = 0;
  Moments s_over_g;
  Moments d_over_g;
  Moments log_fidelity;
  /// Mean of F over the group, and its logarithm computed without leaving
  /// log space.
  double mean_fidelity = 0.0;
  double log_mean_fidelity = 0.0;
};

struct ExperimentResult {
  std::vector<RunRecord> records;
  std::vector<PointSummary> summary;
};

/// Child seed for circuit `index` at `n` qubits. Injective in (n, index) for
/// n, index < 2^32 at a fixed base seed.
std::uint64_t derive_seed(std::uint64_t base_seed, std::size_t n, std::size_t index);

/// Routes one circuit with one router. The circuit comes from the child seed,
/// the initial layout and tie-breaking from streams derived from it.
RunRecord run_single(const ExperimentConfig& config, const CouplingGraph& graph, const DistanceMatrix& dist,
                     std::size_t gates, std::size_t index, std::string_view router);

/// Full protocol. Records come back sorted by (N, G, circuit index, router);
/// with output_dir set, per-(connectivity, router) JSON-lines files are
/// appended after every point, then aggregate.csv and config.txt are written.
ExperimentResult run_experiment(const ExperimentConfig& config);

/// run_experiment at a single N over explicit gate counts.
ExperimentResult g_sweep(ExperimentConfig config, std::size_t n, std::vector<std::size_t> gate_counts);

/// Groups by (connectivity, router, N, G).
std::vector<PointSummary> aggregate(std::span<const RunRecord> records);

// Serialization. Records: one JSON object per line, or CSV with a header.
std::string to_json_line(const RunRecord& record);
RunRecord parse_record(std::string_view json_line);
void write_records_jsonl(std::ostream& out, std::span<const RunRecord> records);
std::vector<RunRecord> read_records_jsonl(std::istream& in);
void write_records_csv(std::ostream& out, std::span<const RunRecord> records);
void write_summary_csv(std::ostream& out, std::span<const PointSummary> summary);
std::vector<PointSummary> read_summary_csv(std::istream& in);

/// Plot-ready series, one CSV per (connectivity, router). Returns the paths.
std::vector<std::filesystem::path> write_report(std::span<const PointSummary> summary,
                                                const std::filesystem::path& dir);

// Config files: `key = value` lines, '#' comments.
ExperimentConfig parse_config(std::istream& in, ExperimentConfig base = {});
void apply_config_entry(ExperimentConfig& config, std::string_view key, std::string_view value);
std::string format_config(const ExperimentConfig& config);
/// "a:b:step" (inclusive) or "a,b,c".
std::vector<std::size_t> parse_size_list(std::string_view text);
std::vector<double> parse_real_list(std::string_view text);

/// (N, log of the mean fidelity) for one router, re-evaluated at a gate and
/// idling fidelity.
std::vector<FitPoint> fidelity_series(std::span<const RunRecord> records, Topology connectivity,
                                      std::string_view router, double tqg_fidelity, double idling_fidelity);

struct CrossoverCell {
  double tqg_fidelity = 0.0;
  double idling_fidelity = 0.0;
  std::optional<Crossover> crossover;
};

/// For each (f, f_idle) pair, fits both routers' fidelity series and locates
/// the N past which `challenger` stays ahead of `incumbent` up to hi. Cells
/// whose fits fail, or where the incumbent ends ahead, have no crossover.
std::vector<CrossoverCell> crossover_grid(std::span<const RunRecord> records, Topology connectivity,
                                          std::string_view challenger, std::string_view incumbent,
                                          std::span<const double> tqg_fidelities,
                                          std::span<const double> idling_fidelities, int lo, int hi,
                                          std::size_t jobs = 1);
void write_crossover_csv(std::ostream& out, std::span<const CrossoverCell> cells);

}  // namespace qroute
