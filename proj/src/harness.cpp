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

#include "qroute/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <istream>
#include <json.hpp>
#include <limits>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "qroute/circuitgen.hpp"
#include "qroute/naive.hpp"
#include "qroute/random.hpp"

namespace qroute {

namespace {

using json = nlohmann::json;

constexpr std::string_view kNaive = "naive";

// Stream tags for child-seed derivation.
constexpr std::uint64_t kLayoutStream = 1;
constexpr std::uint64_t kRouteStream = 2;

std::size_t router_rank(std::string_view name) {
  const auto& names = router_names();
  return static_cast<std::size_t>(std::find(names.begin(), names.end(), name) - names.begin());
}

// Runs fn(i) for i in [0, count) on up to `jobs` threads; rethrows the first
// failure after all workers stop.
template <class Fn>
void parallel_for(std::size_t count, std::size_t jobs, Fn&& fn) {
  jobs = std::max<std::size_t>(1, std::min(jobs, count));
  if (jobs == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  {
    std::vector<std::jthread> workers;
    workers.reserve(jobs);
    for (std::size_t w = 0; w < jobs; ++w) {
      workers.emplace_back([&] {
        for (std::size_t i = next++; i < count && !failed; i = next++) {
          try {
            fn(i);
          } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error) error = std::current_exception();
            failed = true;
          }
        }
      });
    }
  }
  if (error) std::rethrow_exception(error);
}

std::string format_real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

Moments moments(const std::vector<double>& xs) {
  Moments m;
  if (xs.empty()) return m;
  for (double x : xs) m.mean += x;
  m.mean /= static_cast<double>(xs.size());
  if (xs.size() > 1) {
    double ss = 0.0;
    for (double x : xs) ss += (x - m.mean) * (x - m.mean);
    m.std = std::sqrt(ss / static_cast<double>(xs.size() - 1));
  }
  return m;
}

double log_mean_exp(const std::vector<double>& logs) {
  const double top = *std::max_element(logs.begin(), logs.end());
  if (!std::isfinite(top)) return top;
  double sum = 0.0;
  for (double l : logs) sum += std::exp(l - top);
  return top + std::log(sum / static_cast<double>(logs.size()));
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::size_t to_size(std::string_view text) {
  const std::string t = trim(text);
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    if (!t.empty() && t.front() == '-') throw std::invalid_argument("negative");
    v = std::stoull(t, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("expected a non-negative integer, got '" + t + "'");
  }
  if (used != t.size()) throw std::invalid_argument("expected a non-negative integer, got '" + t + "'");
  return static_cast<std::size_t>(v);
}

double to_real(std::string_view text) {
  const std::string t = trim(text);
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(t, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("expected a number, got '" + t + "'");
  }
  if (used != t.size()) throw std::invalid_argument("expected a number, got '" + t + "'");
  return v;
}

template <class T>
std::string join(const std::vector<T>& xs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
  return os.str();
}

std::vector<std::string> csv_fields(const std::string& line) { return split(line, ','); }

}  // namespace

const std::vector<std::string>& router_names() {
  static const std::vector<std::string> names = {"basic", "lookahead", "lookahead-decay", "basic-decay",
                                                 std::string(kNaive)};
  return names;
}

bool is_valid_router(std::string_view name) { return router_rank(name) < router_names().size(); }

std::vector<std::size_t> ExperimentConfig::default_qubit_counts() {
  std::vector<std::size_t> counts;
  for (std::size_t n = 10; n <= 200; n += 10) counts.push_back(n);
  return counts;
}

void ExperimentConfig::validate() const {
  if (qubit_counts.empty()) throw std::invalid_argument("qubits: at least one qubit count is required");
  for (std::size_t n : qubit_counts) {
    if (n < 2) throw std::invalid_argument("qubits: every count must be at least 2");
    if (n >= (std::size_t{1} << 32)) throw std::invalid_argument("qubits: count too large");
  }
  if (circuits_per_point < 1) throw std::invalid_argument("circuits: at least one circuit per point");
  if (gate_counts.empty() && gates_per_qubit < 1) throw std::invalid_argument("gates_per_qubit must be positive");
  if (routers.empty()) throw std::invalid_argument("heuristics: at least one router is required");
  for (const auto& r : routers) {
    if (!is_valid_router(r)) throw std::invalid_argument("heuristics: unknown router '" + r + "'");
  }
  if (jobs < 1) throw std::invalid_argument("jobs must be at least 1");
  sabre.validate();
  noise.validate();
}

std::uint64_t derive_seed(std::uint64_t base_seed, std::size_t n, std::size_t index) {
  const std::uint64_t packed = (static_cast<std::uint64_t>(n) << 32) | (static_cast<std::uint64_t>(index) & 0xffffffffULL);
  return mix64(mix64(packed) + base_seed);
}

RunRecord run_single(const ExperimentConfig& config, const CouplingGraph& graph, const DistanceMatrix& dist,
                     std::size_t gates, std::size_t index, std::string_view router) {
  const std::size_t n = graph.num_qubits();
  const std::uint64_t seed = derive_seed(config.base_seed, n, index);
  const Circuit circuit = random_circuit({n, gates, seed});
  const Layout layout = Layout::random(n, combine_seed(seed, kLayoutStream));

  RoutedResult routed;
  if (router == kNaive) {
    routed = route_naive(circuit, graph, dist, layout);
  } else {
    const auto variant = parse_heuristic(router);
    if (!variant) throw std::invalid_argument("unknown router '" + std::string(router) + "'");
    HeuristicConfig hc = config.sabre;
    hc.variant = *variant;
    routed = route(circuit, graph, dist, layout, hc, combine_seed(seed, kRouteStream));
  }
  const ExecutionStats stats = compute_stats(circuit, routed, config.noise);

  RunRecord r;
  r.n = n;
  r.g = gates;
  r.s = routed.swap_count;
  r.depth_original = routed.original_depth;
  r.depth_routed = routed.routed_depth;
  r.g_tilde = stats.total_tqgs;
  r.idle_layers = stats.idle_layers;
  r.log_fidelity = stats.log_fidelity;
  r.fidelity = stats.fidelity;
  r.heuristic = std::string(router);
  r.connectivity = config.connectivity;
  r.seed = seed;
  r.circuit_index = index;
  r.forced_swaps = routed.forced_swaps;
  return r;
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
  config.validate();
  ExperimentResult result;
  std::map<std::string, std::ofstream> sinks;
  if (!config.output_dir.empty()) {
    std::filesystem::create_directories(config.output_dir);
    for (const auto& r : config.routers) {
      const auto path = config.output_dir / ("runs_" + std::string(to_string(config.connectivity)) + "_" + r + ".jsonl");
      auto& out = sinks[r];
      out.open(path, std::ios::trunc);
      if (!out) throw std::runtime_error("cannot open " + path.string());
    }
    std::ofstream snapshot(config.output_dir / "config.txt", std::ios::trunc);
    snapshot << format_config(config);
  }

  std::vector<std::size_t> qubits = config.qubit_counts;
  std::sort(qubits.begin(), qubits.end());
  for (std::size_t n : qubits) {
    const CouplingGraph graph = build_graph(config.connectivity, n);
    const DistanceMatrix dist = all_pairs_distances(graph);
    std::vector<std::size_t> gate_list = config.gate_counts;
    if (gate_list.empty()) gate_list.push_back(config.gates_per_qubit * n);
    std::sort(gate_list.begin(), gate_list.end());

    for (std::size_t gates : gate_list) {
      const std::size_t per_circuit = config.routers.size();
      std::vector<RunRecord> point(config.circuits_per_point * per_circuit);
      parallel_for(point.size(), config.jobs, [&](std::size_t task) {
        const std::size_t index = task / per_circuit;
        const std::string& router = config.routers[task % per_circuit];
        try {
          point[task] = run_single(config, graph, dist, gates, index, router);
        } catch (const std::exception& e) {
          throw std::runtime_error("run N=" + std::to_string(n) + " G=" + std::to_string(gates) + " circuit=" +
                                   std::to_string(index) + " router=" + router + ": " + e.what());
        }
      });
      std::stable_sort(point.begin(), point.end(), [](const RunRecord& a, const RunRecord& b) {
        return std::tuple(a.circuit_index, router_rank(a.heuristic)) <
               std::tuple(b.circuit_index, router_rank(b.heuristic));
      });
      for (const RunRecord& r : point) {
        if (!sinks.empty()) sinks[r.heuristic] << to_json_line(r) << '\n';
      }
      for (auto& [name, out] : sinks) out.flush();
      result.records.insert(result.records.end(), point.begin(), point.end());
    }
  }

  result.summary = aggregate(result.records);
  if (!config.output_dir.empty()) {
    std::ofstream csv(config.output_dir / "aggregate.csv", std::ios::trunc);
    write_summary_csv(csv, result.summary);
    if (!csv) throw std::runtime_error("failed writing aggregate.csv");
  }
  return result;
}

ExperimentResult g_sweep(ExperimentConfig config, std::size_t n, std::vector<std::size_t> gate_counts) {
  if (gate_counts.empty()) throw std::invalid_argument("G sweep needs at least one gate count");
  config.qubit_counts = {n};
  config.gate_counts = std::move(gate_counts);
  return run_experiment(config);
}

std::vector<PointSummary> aggregate(std::span<const RunRecord> records) {
  using Key = std::tuple<Topology, std::size_t, std::string, std::size_t, std::size_t>;
  std::map<Key, std::vector<const RunRecord*>> groups;
  for (const RunRecord& r : records) {
    groups[Key{r.connectivity, router_rank(r.heuristic), r.heuristic, r.n, r.g}].push_back(&r);
  }
  std::vector<PointSummary> out;
  out.reserve(groups.size());
  for (const auto& [key, group] : groups) {
    PointSummary p;
    p.connectivity = std::get<0>(key);
    p.heuristic = std::get<2>(key);
    p.n = std::get<3>(key);
    p.g = std::get<4>(key);
    p.count = group.size();
    std::vector<double> sg, dg, lf;
    for (const RunRecord* r : group) {
      const double g = r->g > 0 ? static_cast<double>(r->g) : std::numeric_limits<double>::quiet_NaN();
      sg.push_back(static_cast<double>(r->s) / g);
      dg.push_back(static_cast<double>(r->depth_routed) / g);
      lf.push_back(r->log_fidelity);
    }
    p.s_over_g = moments(sg);
    p.d_over_g = moments(dg);
    p.log_fidelity = moments(lf);
    double mean_f = 0.0;
    for (double l : lf) mean_f += std::exp(l);
    p.mean_fidelity = mean_f / static_cast<double>(lf.size());
    p.log_mean_fidelity = log_mean_exp(lf);
    out.push_back(std::move(p));
  }
  return out;
}

std::string to_json_line(const RunRecord& r) {
  json j;
  j["n"] = r.n;
  j["g"] = r.g;
  j["s"] = r.s;
  j["depth_original"] = r.depth_original;
  j["depth_routed"] = r.depth_routed;
  j["g_tilde"] = r.g_tilde;
  j["idle_layers"] = r.idle_layers;
  j["fidelity"] = r.fidelity;
  j["log_fidelity"] = r.log_fidelity;
  j["heuristic"] = r.heuristic;
  j["connectivity"] = std::string(to_string(r.connectivity));
  j["seed"] = r.seed;
  j["circuit_index"] = r.circuit_index;
  j["forced_swaps"] = r.forced_swaps;
  return j.dump();
}

RunRecord parse_record(std::string_view line) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::parse_error& e) {
    throw std::runtime_error(std::string("record is not valid JSON: ") + e.what());
  }
  auto need = [&](const char* key) -> const json& {
    if (!j.contains(key)) throw std::runtime_error(std::string("record missing field '") + key + "'");
    return j.at(key);
  };
  RunRecord r;
  try {
    r.n = need("n").get<std::size_t>();
    r.g = need("g").get<std::size_t>();
    r.s = need("s").get<std::size_t>();
    r.depth_original = need("depth_original").get<std::size_t>();
    r.depth_routed = need("depth_routed").get<std::size_t>();
    r.g_tilde = need("g_tilde").get<double>();
    r.fidelity = need("fidelity").get<double>();
    r.log_fidelity = need("log_fidelity").get<double>();
    r.heuristic = need("heuristic").get<std::string>();
    const auto conn = parse_topology(need("connectivity").get<std::string>());
    if (!conn) throw std::runtime_error("record has unknown connectivity");
    r.connectivity = *conn;
    r.seed = need("seed").get<std::uint64_t>();
    r.idle_layers = j.value("idle_layers", std::size_t{0});
    r.circuit_index = j.value("circuit_index", std::size_t{0});
    r.forced_swaps = j.value("forced_swaps", std::size_t{0});
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("record field has the wrong type: ") + e.what());
  }
  if (!is_valid_router(r.heuristic)) throw std::runtime_error("record has unknown heuristic '" + r.heuristic + "'");
  return r;
}

void write_records_jsonl(std::ostream& out, std::span<const RunRecord> records) {
  for (const RunRecord& r : records) out << to_json_line(r) << '\n';
}

std::vector<RunRecord> read_records_jsonl(std::istream& in) {
  std::vector<RunRecord> out;
  std::string line;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    out.push_back(parse_record(line));
  }
  return out;
}

void write_records_csv(std::ostream& out, std::span<const RunRecord> records) {
  out << "n,g,s,depth_original,depth_routed,g_tilde,fidelity,log_fidelity,heuristic,connectivity,seed,"
         "circuit_index,idle_layers\n";
  for (const RunRecord& r : records) {
    out << r.n << ',' << r.g << ',' << r.s << ',' << r.depth_original << ',' << r.depth_routed << ','
        << format_real(r.g_tilde) << ',' << format_real(r.fidelity) << ',' << format_real(r.log_fidelity) << ','
        << r.heuristic << ',' << to_string(r.connectivity) << ',' << r.seed << ',' << r.circuit_index << ','
        << r.idle_layers << '\n';
  }
}

namespace {
constexpr const char* kSummaryHeader =
    "connectivity,heuristic,n,g,count,s_over_g_mean,s_over_g_std,d_over_g_mean,d_over_g_std,"
    "log_fidelity_mean,log_fidelity_std,mean_fidelity,log_mean_fidelity";
}

void write_summary_csv(std::ostream& out, std::span<const PointSummary> summary) {
  out << kSummaryHeader << '\n';
  for (const PointSummary& p : summary) {
    out << to_string(p.connectivity) << ',' << p.heuristic << ',' << p.n << ',' << p.g << ',' << p.count << ','
        << format_real(p.s_over_g.mean) << ',' << format_real(p.s_over_g.std) << ','
        << format_real(p.d_over_g.mean) << ',' << format_real(p.d_over_g.std) << ','
        << format_real(p.log_fidelity.mean) << ',' << format_real(p.log_fidelity.std) << ','
        << format_real(p.mean_fidelity) << ',' << format_real(p.log_mean_fidelity) << '\n';
  }
}

std::vector<PointSummary> read_summary_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || trim(line) != kSummaryHeader) {
    throw std::runtime_error("aggregate CSV: unexpected header");
  }
  std::vector<PointSummary> out;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto f = csv_fields(line);
    if (f.size() != 13) throw std::runtime_error("aggregate CSV line " + std::to_string(line_no) + ": 13 fields expected");
    PointSummary p;
    const auto conn = parse_topology(f[0]);
    if (!conn) throw std::runtime_error("aggregate CSV line " + std::to_string(line_no) + ": bad connectivity");
    p.connectivity = *conn;
    p.heuristic = f[1];
    p.n = to_size(f[2]);
    p.g = to_size(f[3]);
    p.count = to_size(f[4]);
    p.s_over_g = {to_real(f[5]), to_real(f[6])};
    p.d_over_g = {to_real(f[7]), to_real(f[8])};
    p.log_fidelity = {to_real(f[9]), to_real(f[10])};
    p.mean_fidelity = to_real(f[11]);
    p.log_mean_fidelity = to_real(f[12]);
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<std::filesystem::path> write_report(std::span<const PointSummary> summary,
                                                const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  std::map<std::pair<std::string, std::string>, std::vector<const PointSummary*>> series;
  for (const PointSummary& p : summary) series[{std::string(to_string(p.connectivity)), p.heuristic}].push_back(&p);
  std::vector<std::filesystem::path> paths;
  for (const auto& [key, points] : series) {
    const auto path = dir / ("series_" + key.first + "_" + key.second + ".csv");
    std::ofstream out(path, std::ios::trunc);
    out << "n,g,s_over_g,s_over_g_std,d_over_g,d_over_g_std,mean_fidelity,log_mean_fidelity\n";
    for (const PointSummary* p : points) {
      out << p->n << ',' << p->g << ',' << format_real(p->s_over_g.mean) << ',' << format_real(p->s_over_g.std)
          << ',' << format_real(p->d_over_g.mean) << ',' << format_real(p->d_over_g.std) << ','
          << format_real(p->mean_fidelity) << ',' << format_real(p->log_mean_fidelity) << '\n';
    }
    if (!out) throw std::runtime_error("failed writing " + path.string());
    paths.push_back(path);
  }
  return paths;
}

std::vector<std::size_t> parse_size_list(std::string_view text) {
  const std::string t = trim(text);
  if (t.empty()) throw std::invalid_argument("empty list");
  if (t.find(':') != std::string::npos) {
    const auto parts = split(t, ':');
    if (parts.size() != 3) throw std::invalid_argument("range must be start:stop:step, got '" + t + "'");
    const std::size_t lo = to_size(parts[0]), hi = to_size(parts[1]), step = to_size(parts[2]);
    if (step == 0 || lo > hi) throw std::invalid_argument("bad range '" + t + "'");
    std::vector<std::size_t> out;
    for (std::size_t v = lo; v <= hi; v += step) out.push_back(v);
    return out;
  }
  std::vector<std::size_t> out;
  for (const auto& part : split(t, ',')) out.push_back(to_size(part));
  return out;
}

std::vector<double> parse_real_list(std::string_view text) {
  const std::string t = trim(text);
  if (t.empty()) throw std::invalid_argument("empty list");
  if (t.find(':') != std::string::npos) {
    // lo:hi:count, evenly spaced and inclusive.
    const auto parts = split(t, ':');
    if (parts.size() != 3) throw std::invalid_argument("range must be lo:hi:count, got '" + t + "'");
    const double lo = to_real(parts[0]), hi = to_real(parts[1]);
    const std::size_t count = to_size(parts[2]);
    if (count < 1) throw std::invalid_argument("range count must be positive");
    std::vector<double> out;
    for (std::size_t i = 0; i < count; ++i) {
      out.push_back(count == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1));
    }
    return out;
  }
  std::vector<double> out;
  for (const auto& part : split(t, ',')) out.push_back(to_real(part));
  return out;
}

void apply_config_entry(ExperimentConfig& c, std::string_view key, std::string_view value) {
  const std::string k = trim(key);
  const std::string v = trim(value);
  try {
    if (k == "connectivity") {
      const auto t = parse_topology(v);
      if (!t) throw std::invalid_argument("expected path or square");
      c.connectivity = *t;
    } else if (k == "qubits") {
      c.qubit_counts = parse_size_list(v);
    } else if (k == "circuits") {
      c.circuits_per_point = to_size(v);
    } else if (k == "gates_per_qubit") {
      c.gates_per_qubit = to_size(v);
    } else if (k == "gates") {
      c.gate_counts = v.empty() ? std::vector<std::size_t>{} : parse_size_list(v);
    } else if (k == "heuristics") {
      c.routers = split(v, ',');
    } else if (k == "seed") {
      c.base_seed = std::stoull(v);
    } else if (k == "jobs") {
      c.jobs = to_size(v);
    } else if (k == "out") {
      c.output_dir = v;
    } else if (k == "tqg_fidelity") {
      c.noise.tqg_fidelity = to_real(v);
    } else if (k == "tqg_duration") {
      c.noise.tqg_duration = to_real(v);
    } else if (k == "t1") {
      c.noise.t1 = to_real(v);
    } else if (k == "swap_gate_cost") {
      c.noise.swap_gate_cost = static_cast<unsigned>(to_size(v));
    } else if (k == "lookahead_weight") {
      c.sabre.lookahead_weight = to_real(v);
    } else if (k == "extended_set_size") {
      c.sabre.extended_set_size = to_size(v);
    } else if (k == "decay_delta") {
      c.sabre.decay_delta = to_real(v);
    } else if (k == "decay_reset_interval") {
      c.sabre.decay_reset_interval = to_size(v);
    } else if (k == "stall_limit") {
      c.sabre.stall_limit = to_size(v);
    } else {
      throw std::invalid_argument("unknown key");
    }
  } catch (const std::exception& e) {
    throw std::invalid_argument("config '" + k + "': " + e.what());
  }
}

ExperimentConfig parse_config(std::istream& in, ExperimentConfig base) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config line " + std::to_string(line_no) + ": expected key = value");
    }
    apply_config_entry(base, t.substr(0, eq), t.substr(eq + 1));
  }
  return base;
}

std::string format_config(const ExperimentConfig& c) {
  std::ostringstream os;
  os << "connectivity = " << to_string(c.connectivity) << '\n'
     << "qubits = " << join(c.qubit_counts) << '\n'
     << "circuits = " << c.circuits_per_point << '\n'
     << "gates_per_qubit = " << c.gates_per_qubit << '\n'
     << "gates = " << join(c.gate_counts) << '\n'
     << "heuristics = " << join(c.routers) << '\n'
     << "seed = " << c.base_seed << '\n'
     << "tqg_fidelity = " << format_real(c.noise.tqg_fidelity) << '\n'
     << "tqg_duration = " << format_real(c.noise.tqg_duration) << '\n'
     << "t1 = " << format_real(c.noise.t1) << '\n'
     << "swap_gate_cost = " << c.noise.swap_gate_cost << '\n'
     << "lookahead_weight = " << format_real(c.sabre.lookahead_weight) << '\n'
     << "extended_set_size = " << c.sabre.extended_set_size << '\n'
     << "decay_delta = " << format_real(c.sabre.decay_delta) << '\n'
     << "decay_reset_interval = " << c.sabre.decay_reset_interval << '\n'
     << "stall_limit = " << c.sabre.stall_limit << '\n';
  return os.str();
}

std::vector<FitPoint> fidelity_series(std::span<const RunRecord> records, Topology connectivity,
                                      std::string_view router, double tqg_fidelity, double idling_fidelity) {
  std::map<std::size_t, std::vector<double>> by_n;
  for (const RunRecord& r : records) {
    if (r.connectivity != connectivity || r.heuristic != router) continue;
    by_n[r.n].push_back(log_fidelity_at(r.g_tilde, r.idle_layers, tqg_fidelity, idling_fidelity));
  }
  std::vector<FitPoint> out;
  for (const auto& [n, logs] : by_n) out.push_back({static_cast<double>(n), log_mean_exp(logs)});
  return out;
}

std::vector<CrossoverCell> crossover_grid(std::span<const RunRecord> records, Topology connectivity,
                                          std::string_view challenger, std::string_view incumbent,
                                          std::span<const double> tqg_fidelities,
                                          std::span<const double> idling_fidelities, int lo, int hi,
                                          std::size_t jobs) {
  std::vector<CrossoverCell> cells(tqg_fidelities.size() * idling_fidelities.size());
  parallel_for(cells.size(), jobs, [&](std::size_t i) {
    CrossoverCell& cell = cells[i];
    cell.tqg_fidelity = tqg_fidelities[i / idling_fidelities.size()];
    cell.idling_fidelity = idling_fidelities[i % idling_fidelities.size()];
    const auto a = fidelity_series(records, connectivity, challenger, cell.tqg_fidelity, cell.idling_fidelity);
    const auto b = fidelity_series(records, connectivity, incumbent, cell.tqg_fidelity, cell.idling_fidelity);
    try {
      const auto c = find_last_crossover(fit(CurveKind::FidelityExp, a), fit(CurveKind::FidelityExp, b), lo, hi);
      if (c && c->a_overtakes_b) cell.crossover = c;
    } catch (const FitError&) {
      // Cell stays empty.
    }
  });
  return cells;
}

void write_crossover_csv(std::ostream& out, std::span<const CrossoverCell> cells) {
  out << "tqg_fidelity,idling_fidelity,crossover_n\n";
  for (const CrossoverCell& c : cells) {
    out << format_real(c.tqg_fidelity) << ',' << format_real(c.idling_fidelity) << ',';
    if (c.crossover) out << c.crossover->n;
    out << '\n';
  }
}

}  // namespace qroute
