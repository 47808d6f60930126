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

#include "qroute/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qroute {

double NoiseParams::idling_fidelity() const { return std::exp(-tqg_duration / t1); }

void NoiseParams::validate() const {
  if (!(tqg_fidelity > 0.0 && tqg_fidelity <= 1.0)) throw std::invalid_argument("gate fidelity must lie in (0, 1]");
  if (!(tqg_duration > 0.0)) throw std::invalid_argument("gate duration must be positive");
  if (!(t1 > 0.0)) throw std::invalid_argument("T1 must be positive");
  if (swap_gate_cost < 1) throw std::invalid_argument("swap gate cost must be at least 1");
}

namespace {

std::vector<std::size_t> busy_layers(const Circuit& circuit) {
  // A qubit appears at most once per layer, so busy layers = gates on q.
  std::vector<std::size_t> busy(circuit.num_qubits(), 0);
  for (const Gate& g : circuit.gates()) {
    ++busy[g.q1];
    ++busy[g.q2];
  }
  return busy;
}

}  // namespace

std::vector<double> idle_times(const RoutedResult& routed, const LayerSchedule& schedule, const NoiseParams& noise) {
  const auto busy = busy_layers(routed.circuit);
  std::vector<double> idle(busy.size());
  for (std::size_t q = 0; q < busy.size(); ++q) {
    idle[q] = static_cast<double>(schedule.depth - busy[q]) * noise.tqg_duration;
  }
  return idle;
}

double log_fidelity(const ExecutionStats& stats, const NoiseParams& noise) {
  double idle = 0.0;
  for (double t : stats.idle_times) idle += t;
  return stats.total_tqgs * std::log(noise.tqg_fidelity) - idle / noise.t1;
}

double fidelity(const ExecutionStats& stats, const NoiseParams& noise) { return std::exp(log_fidelity(stats, noise)); }

double log_fidelity_model(std::size_t n, double gbar, std::size_t depth, const NoiseParams& noise) {
  const double idle_layers = std::max(0.0, static_cast<double>(n) * static_cast<double>(depth) - 2.0 * gbar);
  return gbar * std::log(noise.tqg_fidelity) - idle_layers * noise.tqg_duration / noise.t1;
}

double fidelity_model(std::size_t n, double gbar, std::size_t depth, const NoiseParams& noise) {
  return std::exp(log_fidelity_model(n, gbar, depth, noise));
}

double log_fidelity_at(double total_tqgs, std::size_t idle_layers, double tqg_fidelity, double idling_fidelity) {
  return total_tqgs * std::log(tqg_fidelity) + static_cast<double>(idle_layers) * std::log(idling_fidelity);
}

ExecutionStats compute_stats(const Circuit& original, const RoutedResult& routed, const NoiseParams& noise) {
  noise.validate();
  ExecutionStats s;
  s.original_gates = original.size();
  s.swap_count = routed.swap_count;
  const LayerSchedule schedule = compute_layers(routed.circuit);
  s.routed_depth = schedule.depth;
  s.total_tqgs = static_cast<double>(s.original_gates) +
                 static_cast<double>(noise.swap_gate_cost) * static_cast<double>(s.swap_count);
  s.idle_times = idle_times(routed, schedule, noise);
  s.idle_layers = routed.circuit.num_qubits() * schedule.depth - 2 * routed.circuit.size();
  s.log_fidelity = log_fidelity(s, noise);
  s.fidelity = std::exp(s.log_fidelity);
  return s;
}

}  // namespace qroute
