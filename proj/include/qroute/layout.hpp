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
#include <vector>

#include "qroute/circuit.hpp"
#include "qroute/connectivity.hpp"

namespace qroute {

/// Bijection between logical and physical qubits.
class Layout {
 public:
  Layout() = default;

  static Layout identity(std::size_t n);
  /// Uniform random bijection (Fisher-Yates on the portable Rng).
  static Layout random(std::size_t n, std::uint64_t seed);
  /// Throws std::invalid_argument unless `to_physical` is a permutation.
  static Layout from_physical(std::vector<Qubit> to_physical);

  [[nodiscard]] std::size_t size() const noexcept { return to_physical_.size(); }
  [[nodiscard]] Qubit physical(Qubit logical) const { return to_physical_[logical]; }
  [[nodiscard]] Qubit logical(Qubit physical) const { return to_logical_[physical]; }
  [[nodiscard]] const std::vector<Qubit>& to_physical() const noexcept { return to_physical_; }

  /// Exchanges the logical occupants of two physical qubits.
  void swap_physical(Qubit a, Qubit b) noexcept;

  friend bool operator==(const Layout&, const Layout&) = default;

 private:
  std::vector<Qubit> to_physical_;
  std::vector<Qubit> to_logical_;
};

[[nodiscard]] Layout apply_swap(Layout layout, Edge edge);

}  // namespace qroute
