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

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "qroute/circuit.hpp"

namespace qroute {

void write_circuit(std::ostream& out, const Circuit& circuit) {
  out << "qubits " << circuit.num_qubits() << '\n';
  for (const Gate& g : circuit.gates()) {
    out << (g.is_swap() ? "swap " : "tqg ") << g.q1 << ' ' << g.q2 << '\n';
  }
}

Circuit read_circuit(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  Circuit circuit;
  auto fail = [&](const std::string& what) {
    throw std::runtime_error("circuit line " + std::to_string(line_no) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word) || word.front() == '#') continue;
    if (!have_header) {
      long long n = -1;
      if (word != "qubits" || !(ls >> n) || n < 0) fail("expected 'qubits N' header");
      circuit = Circuit(static_cast<std::size_t>(n));
      have_header = true;
      continue;
    }
    GateKind kind;
    if (word == "tqg") {
      kind = GateKind::Original;
    } else if (word == "swap") {
      kind = GateKind::InsertedSwap;
    } else {
      fail("unknown gate '" + word + "'");
    }
    long long a = -1, b = -1;
    if (!(ls >> a >> b) || a < 0 || b < 0) fail("expected two qubit indices");
    std::string extra;
    if (ls >> extra) fail("trailing token '" + extra + "'");
    try {
      circuit.add_gate(static_cast<Qubit>(a), static_cast<Qubit>(b), kind);
    } catch (const std::invalid_argument& e) {
      fail(e.what());
    }
  }
  if (!have_header) throw std::runtime_error("circuit: missing 'qubits N' header");
  return circuit;
}

}  // namespace qroute
