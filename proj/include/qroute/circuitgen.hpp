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

#include "qroute/circuit.hpp"

namespace qroute {

struct GenSpec {
  std::size_t num_qubits = 2;
  std::size_t num_gates = 0;
  std::uint64_t seed = 0;
};

/// Random circuit: every gate acts on an unordered pair drawn uniformly from
/// all N(N-1)/2 pairs, stored as q1 < q2. A pure function of its argument.
Circuit random_circuit(const GenSpec& spec);

}  // namespace qroute
