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
#include <optional>
#include <string>

#include "qroute/circuit.hpp"
#include "qroute/connectivity.hpp"
#include "qroute/layout.hpp"

namespace qroute {

/// Output of a router. Gates act on physical qubits; original gates keep their
/// ids and inserted SWAPs are numbered above every original id.
struct RoutedResult {
  Circuit circuit;
  Layout initial_layout;
  Layout final_layout;
  std::size_t swap_count = 0;
  std::size_t original_depth = 0;
  std::size_t routed_depth = 0;
  /// SWAPs placed by the stall fallback rather than by the heuristic.
  std::size_t forced_swaps = 0;
};

/**
 * Replays `result` against `original` and returns a description of the first
 * violation, or nullopt when the routing is valid: every routed gate sits on a
 * coupling edge, each original gate runs exactly once on the right logical
 * pair after all of its predecessors, the replayed layout ends at
 * final_layout, and the counters match the circuit.
 */
std::optional<std::string> find_routing_error(const Circuit& original, const CouplingGraph& graph,
                                              const RoutedResult& result);

}  // namespace qroute
