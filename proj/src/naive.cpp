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

#include "qroute/naive.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace qroute {

RoutedResult route_naive(const Circuit& circuit, const CouplingGraph& graph, const DistanceMatrix& dist,
                         const Layout& initial_layout) {
  if (circuit.num_qubits() > graph.num_qubits()) {
    throw std::invalid_argument("circuit needs " + std::to_string(circuit.num_qubits()) + " qubits, device has " +
                                std::to_string(graph.num_qubits()));
  }
  if (initial_layout.size() != graph.num_qubits()) {
    throw std::invalid_argument("initial layout must cover every device qubit");
  }
  if (dist.size() != graph.num_qubits()) throw std::invalid_argument("distance matrix does not match the device");

  RoutedResult result;
  result.initial_layout = initial_layout;
  result.original_depth = compute_layers(circuit).depth;

  Layout layout = initial_layout;
  GateId next_id = 0;
  for (const Gate& g : circuit.gates()) next_id = std::max(next_id, g.id + 1);

  std::vector<Gate> routed;
  routed.reserve(circuit.size() * 2);
  for (const Gate& g : circuit.gates()) {
    Qubit p = layout.physical(g.q1);
    const Qubit target = layout.physical(g.q2);
    while (dist(p, target) > 1) {
      const auto nbs = graph.neighbors(p);
      const auto step = std::find_if(nbs.begin(), nbs.end(),
                                     [&](Qubit nb) { return dist(nb, target) == dist(p, target) - 1; });
      if (step == nbs.end()) throw std::logic_error("naive routing found no shortest-path step");
      layout.swap_physical(p, *step);
      routed.push_back(Gate{next_id++, std::min(p, *step), std::max(p, *step), GateKind::InsertedSwap});
      ++result.swap_count;
      p = *step;
    }
    routed.push_back(Gate{g.id, p, target, GateKind::Original});
  }

  result.circuit = Circuit::from_gates(graph.num_qubits(), std::move(routed));
  result.final_layout = std::move(layout);
  result.routed_depth = compute_layers(result.circuit).depth;
  return result;
}

RoutedResult route_naive(const Circuit& circuit, const CouplingGraph& graph, const Layout& initial_layout) {
  const DistanceMatrix dist = all_pairs_distances(graph);
  return route_naive(circuit, graph, dist, initial_layout);
}

}  // namespace qroute
