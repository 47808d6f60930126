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
#include <vector>

#include "qroute/circuit.hpp"
#include "qroute/routing.hpp"

namespace qroute {

/// Hardware noise model. Times in seconds.
struct NoiseParams {
  double tqg_fidelity = 0.9999;
  double tqg_duration = 35e-9;
  double t1 = 700e-6;
  /// Two-qubit gates charged per inserted SWAP.
  unsigned swap_gate_cost = 1;

  /// Fidelity of one idle layer, exp(-t_TQG / T1).
  [[nodiscard]] double idling_fidelity() const;
  /// Throws std::invalid_argument for non-positive values or f > 1.
  void validate() const;
};

struct ExecutionStats {
  std::size_t original_gates = 0;
  std::size_t swap_count = 0;
  std::size_t routed_depth = 0;
  /// G + swap_gate_cost * S.
  double total_tqgs = 0.0;
  /// Per physical qubit, seconds.
  std::vector<double> idle_times;
  /// Sum over qubits of idle layers; idle time divided by t_TQG.
  std::size_t idle_layers = 0;
  double log_fidelity = 0.0;
  double fidelity = 1.0;
};

/// Layer-quantized idling: (depth - layers in which q is busy) * t_TQG, for
/// every device qubit.
std::vector<double> idle_times(const RoutedResult& routed, const LayerSchedule& schedule, const NoiseParams& noise);

/// log F = G~ log f - sum_q t_idle(q) / T1.
double log_fidelity(const ExecutionStats& stats, const NoiseParams& noise);
double fidelity(const ExecutionStats& stats, const NoiseParams& noise);

/// Aggregate form: every gate keeps two qubits busy for one layer, so the
/// n * depth - 2 * gbar remaining qubit-layers idle.
double log_fidelity_model(std::size_t n, double gbar, std::size_t depth, const NoiseParams& noise);
double fidelity_model(std::size_t n, double gbar, std::size_t depth, const NoiseParams& noise);

/// Log fidelity at other noise levels from the same routed circuit:
/// total_tqgs * log f + idle_layers * log f_idle.
double log_fidelity_at(double total_tqgs, std::size_t idle_layers, double tqg_fidelity, double idling_fidelity);

ExecutionStats compute_stats(const Circuit& original, const RoutedResult& routed, const NoiseParams& noise);

}  // namespace qroute
