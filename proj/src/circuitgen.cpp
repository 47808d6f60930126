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

#include "qroute/circuitgen.hpp"

#include <cmath>
#include <stdexcept>

#include "qroute/random.hpp"

namespace qroute {

Circuit random_circuit(const GenSpec& spec) {
  if (spec.num_qubits < 2) throw std::invalid_argument("random circuit needs at least 2 qubits");
  const std::uint64_t n = spec.num_qubits;
  Rng rng(spec.seed);
  Circuit circuit(spec.num_qubits);
  for (std::size_t i = 0; i < spec.num_gates; ++i) {
    // q1 uniform, q2 uniform over the other n-1 qubits: every ordered pair is
    // equally likely, hence every unordered pair too.
    const auto a = static_cast<Qubit>(rng.below(n));
    auto b = static_cast<Qubit>(rng.below(n - 1));
    if (b >= a) ++b;
    circuit.add_gate(a < b ? a : b, a < b ? b : a);
  }
  return circuit;
}

}  // namespace qroute
