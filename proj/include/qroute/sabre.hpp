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

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "qroute/circuit.hpp"
#include "qroute/connectivity.hpp"
#include "qroute/layout.hpp"
#include "qroute/routing.hpp"

namespace qroute {

/// Which terms of the SWAP loss are active.
enum class Heuristic {
  Basic,           // front-layer term only
  Lookahead,       // front + weighted extended-set term
  LookaheadDecay,  // front + extended, scaled by the decay factor
  BasicDecay,      // front term scaled by the decay factor
};

std::string_view to_string(Heuristic h);
std::optional<Heuristic> parse_heuristic(std::string_view name);

struct HeuristicConfig {
  Heuristic variant = Heuristic::Basic;
  double lookahead_weight = 0.5;
  std::size_t extended_set_size = 20;
  double decay_delta = 0.001;
  /// Decay factors return to 1 after this many consecutive SWAPs.
  std::size_t decay_reset_interval = 5;
  /// SWAPs without executing a gate before the fallback kicks in. 0 selects
  /// 10 x graph diameter.
  std::size_t stall_limit = 0;

  [[nodiscard]] bool uses_lookahead() const noexcept {
    return variant == Heuristic::Lookahead || variant == Heuristic::LookaheadDecay;
  }
  [[nodiscard]] bool uses_decay() const noexcept {
    return variant == Heuristic::LookaheadDecay || variant == Heuristic::BasicDecay;
  }
  /// Throws std::invalid_argument for out-of-range knobs.
  void validate() const;
};

/// Per-physical-qubit decay factors, each 1 + k * delta.
class DecayState {
 public:
  DecayState(std::size_t num_qubits, double delta) : factors_(num_qubits, 1.0), delta_(delta) {}

  [[nodiscard]] double factor(Qubit q) const { return factors_[q]; }
  void bump(Qubit q) { factors_[q] += delta_; }
  void reset() { std::fill(factors_.begin(), factors_.end(), 1.0); }

 private:
  std::vector<double> factors_;
  double delta_;
};

/**
 * Loss of applying `swap` (a coupling edge, physical qubits): the mean
 * post-swap distance over `front`, plus lookahead_weight times the mean over
 * `extended` when the variant has lookahead and `extended` is non-empty, all
 * multiplied by the larger decay factor of the two swapped qubits when the
 * variant has decay. Gates carry logical qubits. Throws for non-edges and an
 * empty front.
 */
double score_swap(Edge swap, std::span<const Gate> front, std::span<const Gate> extended, const Layout& layout,
                  const CouplingGraph& graph, const DistanceMatrix& dist, const DecayState& decay,
                  const HeuristicConfig& config);

/// Every coupling edge touching a physical qubit that hosts a qubit of a
/// front gate, sorted.
std::vector<Edge> candidate_swaps(std::span<const Gate> front, const Layout& layout, const CouplingGraph& graph);

/**
 * Breadth-first walk over the successors of `front`: a gate joins once all of
 * its unexecuted predecessors are in the front or already collected. Stops at
 * `size` gates. `executed` is the DAG mask the front was derived from.
 */
std::vector<std::size_t> build_extended_set(const DependencyDag& dag, std::span<const std::size_t> front,
                                            const std::vector<bool>& executed, std::size_t size);

/// SWAP-insertion routing with the configured loss. The layout spans every
/// device qubit; ties between equal scores are broken with an Rng seeded by
/// `seed`.
RoutedResult route(const Circuit& circuit, const CouplingGraph& graph, const DistanceMatrix& dist,
                   const Layout& initial_layout, const HeuristicConfig& config, std::uint64_t seed);

RoutedResult route(const Circuit& circuit, const CouplingGraph& graph, const Layout& initial_layout,
                   const HeuristicConfig& config, std::uint64_t seed);

}  // namespace qroute
