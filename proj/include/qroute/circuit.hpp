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

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

namespace qroute {

using Qubit = std::uint32_t;
using GateId = std::uint32_t;

enum class GateKind : std::uint8_t { Original, InsertedSwap };

/// A two-qubit gate. Qubits are logical in an input circuit and physical in a
/// routed one.
struct Gate {
  GateId id = 0;
  Qubit q1 = 0;
  Qubit q2 = 0;
  GateKind kind = GateKind::Original;

  [[nodiscard]] bool acts_on(Qubit q) const noexcept { return q1 == q || q2 == q; }
  [[nodiscard]] bool is_swap() const noexcept { return kind == GateKind::InsertedSwap; }

  friend bool operator==(const Gate&, const Gate&) = default;
};

/**
 * Ordered sequence of two-qubit gates on `num_qubits` qubits.
 *
 * Gates appended with add_gate() receive sequential ids, so for generated and
 * parsed circuits the id of a gate equals its position. Routed circuits keep
 * the ids of the original gates and number inserted SWAPs above them; they are
 * assembled with from_gates(), which only requires ids to be unique.
 */
class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(std::size_t num_qubits) : num_qubits_(num_qubits) {}

  static Circuit from_gates(std::size_t num_qubits, std::vector<Gate> gates);

  const Gate& add_gate(Qubit q1, Qubit q2, GateKind kind = GateKind::Original);

  [[nodiscard]] std::size_t num_qubits() const noexcept { return num_qubits_; }
  [[nodiscard]] std::span<const Gate> gates() const noexcept { return gates_; }
  [[nodiscard]] const Gate& operator[](std::size_t i) const { return gates_[i]; }
  [[nodiscard]] std::size_t size() const noexcept { return gates_.size(); }
  [[nodiscard]] bool empty() const noexcept { return gates_.empty(); }
  [[nodiscard]] std::size_t count(GateKind kind) const noexcept;

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  void check_gate(const Gate& g) const;

  std::size_t num_qubits_ = 0;
  std::vector<Gate> gates_;
  GateId next_id_ = 0;
};

/**
 * Gate dependency graph. Node i is the gate at position i of the circuit; its
 * predecessor on qubit q is the most recent earlier gate touching q. Duplicate
 * links (two consecutive gates on the same pair) are stored once, so every
 * node has at most two predecessors and two successors.
 */
class DependencyDag {
 public:
  static constexpr std::uint32_t kMaxLinks = 2;

  [[nodiscard]] std::size_t size() const noexcept { return preds_.size(); }
  [[nodiscard]] std::span<const std::uint32_t> predecessors(std::size_t node) const {
    return {preds_[node].ids.data(), preds_[node].count};
  }
  [[nodiscard]] std::span<const std::uint32_t> successors(std::size_t node) const {
    return {succs_[node].ids.data(), succs_[node].count};
  }

 private:
  struct Links {
    std::array<std::uint32_t, kMaxLinks> ids{};
    std::uint8_t count = 0;
    void add(std::uint32_t id) {
      for (std::uint8_t i = 0; i < count; ++i)
        if (ids[i] == id) return;
      ids[count++] = id;
    }
  };

  friend DependencyDag build_dag(const Circuit& circuit);

  std::vector<Links> preds_;
  std::vector<Links> succs_;
};

/// ASAP layering: layer[i] is the 1-based layer of gate i.
struct LayerSchedule {
  std::vector<std::uint32_t> layer;
  std::size_t depth = 0;

  friend bool operator==(const LayerSchedule&, const LayerSchedule&) = default;
};

DependencyDag build_dag(const Circuit& circuit);

LayerSchedule compute_layers(const Circuit& circuit);
LayerSchedule compute_layers(const DependencyDag& dag);

/// Unexecuted nodes whose predecessors are all executed. `executed` is a mask
/// over DAG nodes and must be downward-closed; throws std::invalid_argument
/// otherwise.
std::vector<std::size_t> front_layer(const DependencyDag& dag, const std::vector<bool>& executed);

// Text format: a `qubits N` header, then `tqg a b` or `swap a b` per line.
// Blank lines and lines starting with '#' are ignored.
void write_circuit(std::ostream& out, const Circuit& circuit);
Circuit read_circuit(std::istream& in);

}  // namespace qroute
