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

#include "qroute/circuit.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace qroute {

namespace {
constexpr std::uint32_t kNoGate = std::numeric_limits<std::uint32_t>::max();
}

void Circuit::check_gate(const Gate& g) const {
  if (g.q1 == g.q2) {
    throw std::invalid_argument("gate " + std::to_string(g.id) + " acts twice on qubit " +
                                std::to_string(g.q1));
  }
  if (g.q1 >= num_qubits_ || g.q2 >= num_qubits_) {
    throw std::invalid_argument("gate " + std::to_string(g.id) + " on (" + std::to_string(g.q1) +
                                "," + std::to_string(g.q2) + ") exceeds " +
                                std::to_string(num_qubits_) + " qubits");
  }
}

Circuit Circuit::from_gates(std::size_t num_qubits, std::vector<Gate> gates) {
  Circuit c(num_qubits);
  std::unordered_set<GateId> seen;
  seen.reserve(gates.size());
  for (const Gate& g : gates) {
    c.check_gate(g);
    if (!seen.insert(g.id).second) {
      throw std::invalid_argument("duplicate gate id " + std::to_string(g.id));
    }
    c.next_id_ = std::max(c.next_id_, g.id + 1);
  }
  c.gates_ = std::move(gates);
  return c;
}

const Gate& Circuit::add_gate(Qubit q1, Qubit q2, GateKind kind) {
  Gate g{next_id_, q1, q2, kind};
  check_gate(g);
  ++next_id_;
  gates_.push_back(g);
  return gates_.back();
}

std::size_t Circuit::count(GateKind kind) const noexcept {
  return static_cast<std::size_t>(
      std::count_if(gates_.begin(), gates_.end(), [kind](const Gate& g) { return g.kind == kind; }));
}

DependencyDag build_dag(const Circuit& circuit) {
  DependencyDag dag;
  const std::size_t n = circuit.size();
  dag.preds_.resize(n);
  dag.succs_.resize(n);
  std::vector<std::uint32_t> last(circuit.num_qubits(), kNoGate);
  for (std::size_t i = 0; i < n; ++i) {
    const Gate& g = circuit[i];
    const auto node = static_cast<std::uint32_t>(i);
    for (Qubit q : {g.q1, g.q2}) {
      if (last[q] != kNoGate) {
        dag.preds_[i].add(last[q]);
        dag.succs_[last[q]].add(node);
      }
      last[q] = node;
    }
  }
  return dag;
}

LayerSchedule compute_layers(const Circuit& circuit) {
  LayerSchedule s;
  s.layer.resize(circuit.size());
  std::vector<std::uint32_t> qubit_layer(circuit.num_qubits(), 0);
  for (std::size_t i = 0; i < circuit.size(); ++i) {
    const Gate& g = circuit[i];
    const std::uint32_t l = std::max(qubit_layer[g.q1], qubit_layer[g.q2]) + 1;
    qubit_layer[g.q1] = qubit_layer[g.q2] = l;
    s.layer[i] = l;
    s.depth = std::max<std::size_t>(s.depth, l);
  }
  return s;
}

LayerSchedule compute_layers(const DependencyDag& dag) {
  LayerSchedule s;
  s.layer.resize(dag.size());
  // Node order is a topological order.
  for (std::size_t i = 0; i < dag.size(); ++i) {
    std::uint32_t l = 0;
    for (std::uint32_t p : dag.predecessors(i)) l = std::max(l, s.layer[p]);
    s.layer[i] = l + 1;
    s.depth = std::max<std::size_t>(s.depth, l + 1);
  }
  return s;
}

std::vector<std::size_t> front_layer(const DependencyDag& dag, const std::vector<bool>& executed) {
  if (executed.size() != dag.size()) {
    throw std::invalid_argument("executed mask has " + std::to_string(executed.size()) +
                                " entries for a DAG of " + std::to_string(dag.size()));
  }
  std::vector<std::size_t> front;
  for (std::size_t i = 0; i < dag.size(); ++i) {
    const auto preds = dag.predecessors(i);
    const bool ready = std::all_of(preds.begin(), preds.end(), [&](std::uint32_t p) { return executed[p]; });
    if (executed[i]) {
      if (!ready) {
        throw std::invalid_argument("executed set is not downward-closed at gate " + std::to_string(i));
      }
      continue;
    }
    if (ready) front.push_back(i);
  }
  return front;
}

}  // namespace qroute
