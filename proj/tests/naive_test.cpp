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


#include <gtest/gtest.h>

#include <algorithm>
#include <stdexcept>

#include "qroute/circuitgen.hpp"
#include "qroute/naive.hpp"

namespace qroute {
namespace {

TEST(Naive, AdjacentGateNeedsNoSwaps) {
  Circuit c(3);
  c.add_gate(1, 2);
  const RoutedResult r = route_naive(c, build_path(3), Layout::identity(3));
  EXPECT_EQ(r.swap_count, 0u);
  EXPECT_EQ(r.circuit.size(), 1u);
}

TEST(Naive, EndsOfFourPath) {
  Circuit c(4);
  c.add_gate(0, 3);
  const RoutedResult r = route_naive(c, build_path(4), Layout::identity(4));
  EXPECT_EQ(r.swap_count, 2u);
  // Only the first qubit moves: 0 -> 1 -> 2.
  ASSERT_EQ(r.circuit.size(), 3u);
  EXPECT_EQ(Edge(r.circuit[0].q1, r.circuit[0].q2), Edge(0, 1));
  EXPECT_EQ(Edge(r.circuit[1].q1, r.circuit[1].q2), Edge(1, 2));
  EXPECT_EQ(r.final_layout.physical(0), 2u);
  EXPECT_GT(r.circuit[0].id, c[0].id);
  EXPECT_EQ(find_routing_error(c, build_path(4), r), std::nullopt);
}

TEST(Naive, LowestIndexNeighbourFirst) {
  // From the corner (0,0) of a 3x3 grid to (1,1), both (0,1) and (1,0) are
  // on a shortest path; the lower index wins.
  Circuit c(9);
  c.add_gate(0, 4);
  const RoutedResult r = route_naive(c, build_square(9), Layout::identity(9));
  ASSERT_EQ(r.swap_count, 1u);
  EXPECT_EQ(Edge(r.circuit[0].q1, r.circuit[0].q2), Edge(0, 1));
}

TEST(Naive, PathSwapsEqualDistanceMinusOne) {
  const CouplingGraph g = build_path(15);
  const DistanceMatrix d = all_pairs_distances(g);
  const Circuit c = random_circuit({15, 200, 6});
  const RoutedResult r = route_naive(c, g, d, Layout::random(15, 6));
  Layout l = r.initial_layout;
  Layout before = l;
  std::size_t run = 0;
  std::size_t seen = 0;
  for (const Gate& gate : r.circuit.gates()) {
    if (gate.is_swap()) {
      l.swap_physical(gate.q1, gate.q2);
      ++run;
      continue;
    }
    const Gate& want = c[seen++];
    EXPECT_EQ(run, static_cast<std::size_t>(d(before.physical(want.q1), before.physical(want.q2)) - 1));
    run = 0;
    before = l;
  }
  EXPECT_EQ(seen, c.size());
  EXPECT_EQ(l, r.final_layout);
}

TEST(Naive, ReplayCheck) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const std::size_t n = 2 + seed % 11;
    const CouplingGraph g = build_graph(seed % 2 ? Topology::Square : Topology::Path, n);
    const Circuit c = random_circuit({n, 5 * n, seed});
    const RoutedResult r = route_naive(c, g, Layout::random(n, seed + 100));
    EXPECT_EQ(find_routing_error(c, g, r), std::nullopt) << seed;
    EXPECT_EQ(r.forced_swaps, 0u);
  }
}

TEST(Naive, PathEnsembleMatchesMeanDistance) {
  constexpr std::size_t n = 100;
  const CouplingGraph g = build_path(n);
  const DistanceMatrix d = all_pairs_distances(g);
  double total = 0.0;
  constexpr int kCircuits = 10;
  for (int i = 0; i < kCircuits; ++i) {
    const Circuit c = random_circuit({n, 10 * n, static_cast<std::uint64_t>(i)});
    total += static_cast<double>(route_naive(c, g, d, Layout::random(n, i + 50)).swap_count) / c.size();
  }
  const double expected = (n + 1) / 3.0 - 1.0;
  EXPECT_NEAR(total / kCircuits, expected, 0.05 * expected);
}

TEST(Naive, RejectsOversizedCircuits) {
  const Circuit c = random_circuit({5, 3, 0});
  EXPECT_THROW(route_naive(c, build_path(4), Layout::identity(4)), std::invalid_argument);
}

}  // namespace
}  // namespace qroute
