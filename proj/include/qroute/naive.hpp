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

#include "qroute/circuit.hpp"
#include "qroute/connectivity.hpp"
#include "qroute/layout.hpp"
#include "qroute/routing.hpp"

namespace qroute {

/// Baseline router: gates in sequence order; a distant gate's first qubit is
/// walked along a shortest path (lowest-index neighbour first) until it is
/// adjacent to the second.
RoutedResult route_naive(const Circuit& circuit, const CouplingGraph& graph, const DistanceMatrix& dist,
                         const Layout& initial_layout);

RoutedResult route_naive(const Circuit& circuit, const CouplingGraph& graph, const Layout& initial_layout);

}  // namespace qroute
