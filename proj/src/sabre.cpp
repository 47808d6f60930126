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

#include "qroute/sabre.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "qroute/random.hpp"

namespace qroute {

namespace {

constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();
constexpr double kTieTolerance = 1e-12;

// Both the reference scorer and the router go through this, so their scores
// agree bit for bit.
double combine_terms(std::int64_t front_sum, std::size_t front_size, std::int64_t ext_sum, std::size_t ext_size,
                     double decay, const HeuristicConfig& config) {
  double h = static_cast<double>(front_sum) / static_cast<double>(front_size);
  if (config.uses_lookahead() && ext_size > 0) {
    h += config.lookahead_weight * (static_cast<double>(ext_sum) / static_cast<double>(ext_size));
  }
  if (config.uses_decay()) h *= decay;
  return h;
}

inline Qubit through(Qubit p, Edge e) noexcept { return p == e.u ? e.v : (p == e.v ? e.u : p); }

// Counts in `remaining` are decremented while walking and restored afterwards.
void walk_extended(const DependencyDag& dag, std::vector<std::uint8_t>& remaining,
                   std::vector<std::uint32_t>& to_visit, std::vector<std::uint32_t>& touched, std::size_t size,
                   std::vector<std::uint32_t>& out) {
  out.clear();
  touched.clear();
  for (std::size_t i = 0; i < to_visit.size() && out.size() < size; ++i) {
    for (std::uint32_t s : dag.successors(to_visit[i])) {
      touched.push_back(s);
      if (--remaining[s] == 0) {
        out.push_back(s);
        to_visit.push_back(s);
        if (out.size() == size) break;
      }
    }
  }
  for (std::uint32_t s : touched) ++remaining[s];
}

class SabreRouter {
 public:
  SabreRouter(const Circuit& circuit, const CouplingGraph& graph, const DistanceMatrix& dist, const Layout& layout,
              const HeuristicConfig& config, std::uint64_t seed)
      : circuit_(circuit),
        graph_(graph),
        dist_(dist),
        config_(config),
        dag_(build_dag(circuit)),
        layout_(layout),
        decay_(graph.num_qubits(), config.decay_delta),
        rng_(seed),
        front_of_logical_(graph.num_qubits(), kNone),
        ext_of_logical_(graph.num_qubits()) {
    stall_limit_ = config.stall_limit != 0
                       ? config.stall_limit
                       : std::max<std::size_t>(1, 10 * static_cast<std::size_t>(dist.diameter()));
    GateId max_id = 0;
    for (const Gate& g : circuit.gates()) max_id = std::max(max_id, g.id);
    next_swap_id_ = circuit.empty() ? 0 : max_id + 1;
  }

  RoutedResult run() {
    RoutedResult result;
    result.initial_layout = layout_;
    result.original_depth = compute_layers(circuit_).depth;

    remaining_.resize(dag_.size());
    for (std::size_t i = 0; i < dag_.size(); ++i) {
      remaining_[i] = static_cast<std::uint8_t>(dag_.predecessors(i).size());
      if (remaining_[i] == 0) front_.push_back(static_cast<std::uint32_t>(i));
    }
    routed_.reserve(circuit_.size() * 2);

    bool first = true;
    for (;;) {
      const bool progressed = execute_ready();
      if (front_.empty()) break;
      if (progressed) {
        decay_.reset();
        swaps_since_reset_ = 0;
        stall_ = 0;
      }
      if (progressed || first) refresh_sets();
      first = false;
      if (stall_ >= stall_limit_) {
        force_progress();
        continue;
      }
      choose_and_apply();
    }

    result.circuit = Circuit::from_gates(graph_.num_qubits(), std::move(routed_));
    result.final_layout = layout_;
    result.swap_count = swap_count_;
    result.forced_swaps = forced_swaps_;
    result.routed_depth = compute_layers(result.circuit).depth;
    return result;
  }

 private:
  [[nodiscard]] std::int32_t current_distance(std::uint32_t node) const {
    const Gate& g = circuit_[node];
    return dist_(layout_.physical(g.q1), layout_.physical(g.q2));
  }

  [[nodiscard]] std::int32_t distance_delta(std::uint32_t node, Edge e) const {
    const Gate& g = circuit_[node];
    const Qubit p1 = layout_.physical(g.q1);
    const Qubit p2 = layout_.physical(g.q2);
    return dist_(through(p1, e), through(p2, e)) - dist_(p1, p2);
  }

  // Runs every front gate sitting on a coupling edge, repeatedly.
  bool execute_ready() {
    bool any = false;
    ready_.swap(front_);
    front_.clear();
    while (!ready_.empty()) {
      const std::uint32_t node = ready_.back();
      ready_.pop_back();
      if (current_distance(node) != 1) {
        front_.push_back(node);
        continue;
      }
      const Gate& g = circuit_[node];
      routed_.push_back(Gate{g.id, layout_.physical(g.q1), layout_.physical(g.q2), GateKind::Original});
      any = true;
      for (std::uint32_t s : dag_.successors(node)) {
        if (--remaining_[s] == 0) ready_.push_back(s);
      }
    }
    std::sort(front_.begin(), front_.end());
    return any;
  }

  void refresh_sets() {
    std::fill(front_of_logical_.begin(), front_of_logical_.end(), kNone);
    front_sum_ = 0;
    for (std::uint32_t node : front_) {
      const Gate& g = circuit_[node];
      front_of_logical_[g.q1] = front_of_logical_[g.q2] = node;
      front_sum_ += current_distance(node);
    }
    if (!config_.uses_lookahead()) return;
    for (std::uint32_t node : extended_) {
      ext_of_logical_[circuit_[node].q1].clear();
      ext_of_logical_[circuit_[node].q2].clear();
    }
    to_visit_.assign(front_.begin(), front_.end());
    walk_extended(dag_, remaining_, to_visit_, touched_, config_.extended_set_size, extended_);
    ext_sum_ = 0;
    for (std::uint32_t node : extended_) {
      const Gate& g = circuit_[node];
      ext_of_logical_[g.q1].push_back(node);
      ext_of_logical_[g.q2].push_back(node);
      ext_sum_ += current_distance(node);
    }
  }

  void collect_candidates() {
    candidates_.clear();
    for (std::uint32_t node : front_) {
      const Gate& g = circuit_[node];
      for (Qubit p : {layout_.physical(g.q1), layout_.physical(g.q2)}) {
        for (Qubit nb : graph_.neighbors(p)) candidates_.emplace_back(p, nb);
      }
    }
    std::sort(candidates_.begin(), candidates_.end());
    candidates_.erase(std::unique(candidates_.begin(), candidates_.end()), candidates_.end());
  }

  void choose_and_apply() {
    collect_candidates();
    best_.clear();
    double best_score = std::numeric_limits<double>::infinity();
    for (const Edge& e : candidates_) {
      const Qubit la = layout_.logical(e.u);
      const Qubit lb = layout_.logical(e.v);
      std::int64_t df = 0;
      const std::uint32_t fa = front_of_logical_[la];
      const std::uint32_t fb = front_of_logical_[lb];
      if (fa != kNone) df += distance_delta(fa, e);
      if (fb != kNone && fb != fa) df += distance_delta(fb, e);
      std::int64_t de = 0;
      if (config_.uses_lookahead()) {
        for (std::uint32_t node : ext_of_logical_[la]) de += distance_delta(node, e);
        for (std::uint32_t node : ext_of_logical_[lb]) {
          if (!circuit_[node].acts_on(la)) de += distance_delta(node, e);
        }
      }
      const double decay = std::max(decay_.factor(e.u), decay_.factor(e.v));
      const double score =
          combine_terms(front_sum_ + df, front_.size(), ext_sum_ + de, extended_.size(), decay, config_);
      if (score < best_score - kTieTolerance) {
        best_score = score;
        best_.clear();
        best_.push_back({e, df, de});
      } else if (score <= best_score + kTieTolerance) {
        best_.push_back({e, df, de});
      }
    }
    const auto& pick = best_[best_.size() == 1 ? 0 : rng_.below(best_.size())];
    front_sum_ += pick.front_delta;
    ext_sum_ += pick.ext_delta;
    apply_swap_gate(pick.edge);
  }

  void apply_swap_gate(Edge e) {
    layout_.swap_physical(e.u, e.v);
    routed_.push_back(Gate{next_swap_id_++, e.u, e.v, GateKind::InsertedSwap});
    ++swap_count_;
    ++stall_;
    if (config_.uses_decay()) {
      if (++swaps_since_reset_ >= config_.decay_reset_interval) {
        decay_.reset();
        swaps_since_reset_ = 0;
      } else {
        decay_.bump(e.u);
        decay_.bump(e.v);
      }
    }
  }

  // Walks the first qubit of the oldest front gate along a shortest path
  // until the gate becomes executable. Leaves the cached sums stale; the next
  // execute_ready() always makes progress and triggers a refresh.
  void force_progress() {
    const Gate& g = circuit_[front_.front()];
    Qubit p = layout_.physical(g.q1);
    const Qubit target = layout_.physical(g.q2);
    while (dist_(p, target) > 1) {
      Qubit next = p;
      for (Qubit nb : graph_.neighbors(p)) {
        if (dist_(nb, target) == dist_(p, target) - 1) {
          next = nb;
          break;
        }
      }
      if (next == p) throw std::logic_error("routing stalled: no shortest-path step available");
      apply_swap_gate(Edge(p, next));
      ++forced_swaps_;
      p = next;
    }
    stall_ = 0;
  }

  struct Candidate {
    Edge edge;
    std::int64_t front_delta;
    std::int64_t ext_delta;
  };

  const Circuit& circuit_;
  const CouplingGraph& graph_;
  const DistanceMatrix& dist_;
  const HeuristicConfig& config_;
  DependencyDag dag_;
  Layout layout_;
  DecayState decay_;
  Rng rng_;

  std::vector<std::uint8_t> remaining_;
  std::vector<std::uint32_t> front_;
  std::vector<std::uint32_t> ready_;
  std::vector<std::uint32_t> front_of_logical_;
  std::int64_t front_sum_ = 0;

  std::vector<std::uint32_t> extended_;
  std::vector<std::vector<std::uint32_t>> ext_of_logical_;
  std::vector<std::uint32_t> to_visit_;
  std::vector<std::uint32_t> touched_;
  std::int64_t ext_sum_ = 0;

  std::vector<Edge> candidates_;
  std::vector<Candidate> best_;
  std::vector<Gate> routed_;
  GateId next_swap_id_ = 0;
  std::size_t swap_count_ = 0;
  std::size_t forced_swaps_ = 0;
  std::size_t swaps_since_reset_ = 0;
  std::size_t stall_ = 0;
  std::size_t stall_limit_ = 0;
};

}  // namespace

std::string_view to_string(Heuristic h) {
  switch (h) {
    case Heuristic::Basic: return "basic";
    case Heuristic::Lookahead: return "lookahead";
    case Heuristic::LookaheadDecay: return "lookahead-decay";
    case Heuristic::BasicDecay: return "basic-decay";
  }
  return "unknown";
}

std::optional<Heuristic> parse_heuristic(std::string_view name) {
  for (Heuristic h : {Heuristic::Basic, Heuristic::Lookahead, Heuristic::LookaheadDecay, Heuristic::BasicDecay}) {
    if (name == to_string(h)) return h;
  }
  return std::nullopt;
}

void HeuristicConfig::validate() const {
  if (!(lookahead_weight > 0.0 && lookahead_weight <= 1.0)) {
    throw std::invalid_argument("lookahead weight must lie in (0, 1]");
  }
  if (extended_set_size < 1) throw std::invalid_argument("extended set size must be at least 1");
  if (!(decay_delta > 0.0)) throw std::invalid_argument("decay delta must be positive");
  if (decay_reset_interval < 1) throw std::invalid_argument("decay reset interval must be at least 1");
}

double score_swap(Edge swap, std::span<const Gate> front, std::span<const Gate> extended, const Layout& layout,
                  const CouplingGraph& graph, const DistanceMatrix& dist, const DecayState& decay,
                  const HeuristicConfig& config) {
  if (!graph.has_edge(swap.u, swap.v)) {
    throw std::invalid_argument("swap (" + std::to_string(swap.u) + "," + std::to_string(swap.v) +
                                ") is not a coupling edge");
  }
  if (front.empty()) throw std::invalid_argument("cannot score a swap against an empty front layer");
  const Layout after = apply_swap(layout, swap);
  auto total = [&](std::span<const Gate> gates) {
    std::int64_t sum = 0;
    for (const Gate& g : gates) sum += dist(after.physical(g.q1), after.physical(g.q2));
    return sum;
  };
  const double factor = std::max(decay.factor(swap.u), decay.factor(swap.v));
  return combine_terms(total(front), front.size(), total(extended), extended.size(), factor, config);
}

std::vector<Edge> candidate_swaps(std::span<const Gate> front, const Layout& layout, const CouplingGraph& graph) {
  std::vector<Edge> out;
  for (const Gate& g : front) {
    for (Qubit p : {layout.physical(g.q1), layout.physical(g.q2)}) {
      for (Qubit nb : graph.neighbors(p)) out.emplace_back(p, nb);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::size_t> build_extended_set(const DependencyDag& dag, std::span<const std::size_t> front,
                                            const std::vector<bool>& executed, std::size_t size) {
  if (executed.size() != dag.size()) throw std::invalid_argument("executed mask does not match the DAG");
  std::vector<std::uint8_t> remaining(dag.size(), 0);
  for (std::size_t i = 0; i < dag.size(); ++i) {
    for (std::uint32_t p : dag.predecessors(i)) remaining[i] += executed[p] ? 0 : 1;
  }
  std::vector<std::uint32_t> to_visit(front.begin(), front.end());
  std::vector<std::uint32_t> touched;
  std::vector<std::uint32_t> out;
  walk_extended(dag, remaining, to_visit, touched, size, out);
  return {out.begin(), out.end()};
}

RoutedResult route(const Circuit& circuit, const CouplingGraph& graph, const DistanceMatrix& dist,
                   const Layout& initial_layout, const HeuristicConfig& config, std::uint64_t seed) {
  config.validate();
  if (circuit.num_qubits() > graph.num_qubits()) {
    throw std::invalid_argument("circuit needs " + std::to_string(circuit.num_qubits()) + " qubits, device has " +
                                std::to_string(graph.num_qubits()));
  }
  if (initial_layout.size() != graph.num_qubits()) {
    throw std::invalid_argument("initial layout must cover every device qubit");
  }
  if (dist.size() != graph.num_qubits()) throw std::invalid_argument("distance matrix does not match the device");
  return SabreRouter(circuit, graph, dist, initial_layout, config, seed).run();
}

RoutedResult route(const Circuit& circuit, const CouplingGraph& graph, const Layout& initial_layout,
                   const HeuristicConfig& config, std::uint64_t seed) {
  const DistanceMatrix dist = all_pairs_distances(graph);
  return route(circuit, graph, dist, initial_layout, config, seed);
}

}  // namespace qroute
