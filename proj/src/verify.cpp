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

#include <string>
#include <unordered_map>
#include <vector>

#include "qroute/routing.hpp"

namespace qroute {

std::optional<std::string> find_routing_error(const Circuit& original, const CouplingGraph& graph,
                                              const RoutedResult& result) {
  const Circuit& routed = result.circuit;
  if (routed.num_qubits() != graph.num_qubits()) return "routed circuit width differs from device";
  if (result.initial_layout.size() != graph.num_qubits()) return "initial layout does not cover the device";

  const DependencyDag dag = build_dag(original);
  std::vector<bool> done(original.size(), false);
  Layout layout = result.initial_layout;
  std::size_t swaps = 0;
  std::size_t executed = 0;
  std::unordered_map<GateId, std::size_t> position;
  position.reserve(original.size());
  for (std::size_t i = 0; i < original.size(); ++i) position.emplace(original[i].id, i);

  for (const Gate& g : routed.gates()) {
    if (!graph.has_edge(g.q1, g.q2)) {
      return "gate " + std::to_string(g.id) + " on non-edge (" + std::to_string(g.q1) + "," +
             std::to_string(g.q2) + ")";
    }
    if (g.is_swap()) {
      layout.swap_physical(g.q1, g.q2);
      ++swaps;
      continue;
    }
    const auto it = position.find(g.id);
    if (it == position.end()) return "unknown original gate id " + std::to_string(g.id);
    const std::size_t node = it->second;
    const Gate& want = original[node];
    if (done[node]) return "gate " + std::to_string(g.id) + " executed twice";
    const Qubit a = layout.logical(g.q1);
    const Qubit b = layout.logical(g.q2);
    if (!((a == want.q1 && b == want.q2) || (a == want.q2 && b == want.q1))) {
      return "gate " + std::to_string(g.id) + " runs on logical (" + std::to_string(a) + "," + std::to_string(b) +
             ") instead of (" + std::to_string(want.q1) + "," + std::to_string(want.q2) + ")";
    }
    for (std::uint32_t p : dag.predecessors(node)) {
      if (!done[p]) return "gate " + std::to_string(g.id) + " runs before predecessor " + std::to_string(p);
    }
    done[node] = true;
    ++executed;
  }
  if (executed != original.size()) {
    return std::to_string(original.size() - executed) + " original gates never executed";
  }
  if (!(layout == result.final_layout)) return "replayed layout differs from final_layout";
  if (swaps != result.swap_count) return "swap_count does not match inserted SWAPs";
  if (compute_layers(routed).depth != result.routed_depth) return "routed_depth is stale";
  if (result.routed_depth < result.original_depth) return "routed depth below original depth";
  return std::nullopt;
}

}  // namespace qroute
