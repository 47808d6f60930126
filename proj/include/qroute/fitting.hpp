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
#include <optional>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace qroute {

/**
 * Scaling-curve families, with y as a function of the qubit count N:
 *
 *   SwapPower1D/2D  y = A * N^(1/d) + C                 params {A, C}
 *   DepthLog1D      y = A * log N + (1 - A * log 2)     params {A}
 *   DepthLog2D      y = A * log N / sqrt(N) + C         params {A, C}
 *   FidelityExp     F = A * B^(C * N^D)                 params {A, B, C, D}
 *
 * FidelityExp works on log F throughout: data points carry log-fidelities and
 * predict() returns log F. Only the product C * log B is identifiable, so fits
 * report the canonical B = 1/e.
 */
enum class CurveKind { SwapPower1D, SwapPower2D, DepthLog1D, DepthLog2D, FidelityExp };

std::string_view to_string(CurveKind kind);
std::optional<CurveKind> parse_curve_kind(std::string_view name);
std::size_t parameter_count(CurveKind kind);

struct FitPoint {
  double n = 0.0;
  double y = 0.0;
};

struct CurveModel {
  CurveKind kind = CurveKind::SwapPower1D;
  std::vector<double> params;

  /// Model value at n; log F for FidelityExp.
  [[nodiscard]] double predict(double n) const;
};

struct FitResult {
  CurveModel model;
  double r_squared = 0.0;
  std::vector<double> residuals;  // data - prediction
  std::size_t iterations = 0;
};

class FitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Unweighted least squares by damped Gauss-Newton with a central-difference
/// Jacobian. Throws std::invalid_argument for too few points or N < 2, and
/// FitError for degenerate data or non-convergence within 200 iterations.
FitResult fit(CurveKind kind, std::span<const FitPoint> data);

/// 1 - SS_res / SS_tot. A zero-residual fit to constant data scores 1; constant
/// data with residuals throws FitError.
double r_squared(std::span<const FitPoint> data, const CurveModel& model);

struct Crossover {
  int n = 0;          // first integer N past the sign change
  double root = 0.0;  // continuous crossing point
  bool a_overtakes_b = false;
};

/// First integer N in (lo, hi] at which the ordering of two fitted fidelity
/// curves differs from their ordering at lo. nullopt when the curves never
/// cross or coincide at lo.
std::optional<Crossover> find_crossover(const FitResult& a, const FitResult& b, int lo, int hi);

/// The final ordering change in (lo, hi]: past it the ordering holds up to hi.
std::optional<Crossover> find_last_crossover(const FitResult& a, const FitResult& b, int lo, int hi);

}  // namespace qroute
