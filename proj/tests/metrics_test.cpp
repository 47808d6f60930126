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

#include <cmath>
#include <numeric>

#include "qroute/circuitgen.hpp"
#include "qroute/metrics.hpp"
#include "qroute/naive.hpp"
#include "qroute/sabre.hpp"

namespace qroute {
namespace {

RoutedResult routed_sample(std::size_t n, std::uint64_t seed, Topology topo = Topology::Square) {
  const CouplingGraph g = build_graph(topo, n);
  const Circuit c = random_circuit({n, 10 * n, seed});
  HeuristicConfig config;
  config.variant = Heuristic::BasicDecay;
  return route(c, g, Layout::random(n, seed), config, seed);
}

TEST(IdleTimes, EmptyCircuit) {
  RoutedResult r;
  r.circuit = Circuit(4);
  const auto idle = idle_times(r, compute_layers(r.circuit), NoiseParams{});
  EXPECT_EQ(idle, std::vector<double>(4, 0.0));
  const ExecutionStats s = compute_stats(Circuit(4), r, NoiseParams{});
  EXPECT_EQ(s.fidelity, 1.0);
  EXPECT_EQ(s.log_fidelity, 0.0);
}

TEST(IdleTimes, SingleGateOnThreeQubitPath) {
  Circuit c(3);
  c.add_gate(0, 1);
  const RoutedResult r = route_naive(c, build_path(3), Layout::identity(3));
  const auto idle = idle_times(r, compute_layers(r.circuit), NoiseParams{});
  ASSERT_EQ(idle.size(), 3u);
  EXPECT_EQ(idle[0], 0.0);
  EXPECT_EQ(idle[1], 0.0);
  EXPECT_DOUBLE_EQ(idle[2], 35e-9);

  const ExecutionStats s = compute_stats(c, r, NoiseParams{});
  EXPECT_NEAR(s.fidelity, 0.9998500062498541, 1e-13);
  EXPECT_EQ(s.idle_layers, 1u);
}

TEST(IdleTimes, BusyEveryLayerMeansNoIdle) {
  Circuit c(2);
  for (int i = 0; i < 5; ++i) c.add_gate(0, 1);
  const RoutedResult r = route_naive(c, build_path(2), Layout::identity(2));
  EXPECT_EQ(idle_times(r, compute_layers(r.circuit), NoiseParams{}), std::vector<double>(2, 0.0));
}

TEST(IdleTimes, BusyLayersSumToTwicePerGate) {
  const NoiseParams noise;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const RoutedResult r = routed_sample(20, seed);
    const LayerSchedule sched = compute_layers(r.circuit);
    const auto idle = idle_times(r, sched, noise);
    double busy = 0.0;
    for (double t : idle) busy += static_cast<double>(sched.depth) - t / noise.tqg_duration;
    EXPECT_NEAR(busy, 2.0 * r.circuit.size(), 1e-6);
    for (double t : idle) EXPECT_GE(t, 0.0);
  }
}

TEST(Fidelity, GateOnlyExamples) {
  ExecutionStats s;
  s.total_tqgs = 100;
  s.idle_times = {0.0, 0.0};
  EXPECT_NEAR(fidelity(s, NoiseParams{}), std::pow(0.9999, 100), 1e-14);
  EXPECT_NEAR(fidelity(s, NoiseParams{}), 0.990049, 1e-6);
  s.total_tqgs = 0;
  EXPECT_EQ(fidelity(s, NoiseParams{}), 1.0);
}

TEST(Fidelity, LogSpaceMatchesDirectSum) {
  const NoiseParams noise;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const RoutedResult r = routed_sample(30, seed);
    const Circuit original = random_circuit({30, 300, seed});
    const ExecutionStats s = compute_stats(original, r, noise);
    const double idle_sum = std::accumulate(s.idle_times.begin(), s.idle_times.end(), 0.0);
    const double direct = (300.0 + r.swap_count) * std::log(0.9999) - idle_sum / 700e-6;
    EXPECT_NEAR(s.log_fidelity, direct, 1e-12);
    EXPECT_EQ(s.total_tqgs, 300.0 + r.swap_count);
  }
}

TEST(Fidelity, LargeDevicesStayFiniteInLogSpace) {
  // Short T1 drives F below the smallest double; log F must survive.
  NoiseParams noise;
  noise.t1 = 1e-8;
  const RoutedResult r = routed_sample(196, 3, Topology::Path);
  const ExecutionStats s = compute_stats(random_circuit({196, 1960, 3}), r, noise);
  EXPECT_TRUE(std::isfinite(s.log_fidelity));
  EXPECT_LT(s.log_fidelity, -800.0);
  EXPECT_EQ(s.fidelity, 0.0);
  EXPECT_NEAR(s.log_fidelity, log_fidelity_model(196, s.total_tqgs, s.routed_depth, noise),
              1e-12 * std::abs(s.log_fidelity));
}

TEST(FidelityModel, Trivial) {
  EXPECT_EQ(fidelity_model(10, 0.0, 0, NoiseParams{}), 1.0);
  EXPECT_EQ(log_fidelity_model(10, 0.0, 0, NoiseParams{}), 0.0);
}

TEST(FidelityModel, MatchesExactOnRoutedCircuits) {
  const NoiseParams noise;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const std::size_t n = 9 + seed;
    const RoutedResult r = routed_sample(n, seed, seed % 2 ? Topology::Path : Topology::Square);
    const Circuit original = random_circuit({n, 10 * n, seed});
    const ExecutionStats s = compute_stats(original, r, noise);
    const double model = log_fidelity_model(n, s.total_tqgs, s.routed_depth, noise);
    EXPECT_NEAR(model, s.log_fidelity, 1e-12 * std::abs(s.log_fidelity)) << seed;
    EXPECT_NEAR(log_fidelity_at(s.total_tqgs, s.idle_layers, noise.tqg_fidelity, noise.idling_fidelity()),
                s.log_fidelity, 1e-12 * std::abs(s.log_fidelity));
  }
}

TEST(FidelityModel, MonotoneInDepthGatesAndT1) {
  NoiseParams noise;
  double prev = 1.0;
  for (std::size_t depth = 20; depth < 400; depth += 20) {
    const double f = fidelity_model(50, 1000.0, depth, noise);
    EXPECT_LE(f, prev);
    prev = f;
  }
  EXPECT_GT(fidelity_model(50, 1000.0, 100, noise), fidelity_model(50, 1100.0, 100, noise));
  NoiseParams shorter = noise;
  shorter.t1 = 100e-6;
  EXPECT_GT(fidelity_model(50, 1000.0, 100, noise), fidelity_model(50, 1000.0, 100, shorter));
}

TEST(Stats, SwapCostScalesTotal) {
  NoiseParams noise;
  noise.swap_gate_cost = 3;
  const RoutedResult r = routed_sample(16, 1);
  const ExecutionStats s = compute_stats(random_circuit({16, 160, 1}), r, noise);
  EXPECT_EQ(s.total_tqgs, 160.0 + 3.0 * r.swap_count);
  EXPECT_EQ(s.swap_count, r.swap_count);
  EXPECT_EQ(s.routed_depth, r.routed_depth);
}

TEST(Noise, Validation) {
  NoiseParams p;
  EXPECT_NO_THROW(p.validate());
  EXPECT_NEAR(p.idling_fidelity(), std::exp(-5e-5), 1e-16);
  p.tqg_fidelity = 1.01;
  EXPECT_THROW(p.validate(), std::invalid_argument);
  p = {};
  p.t1 = 0.0;
  EXPECT_THROW(p.validate(), std::invalid_argument);
  p = {};
  p.swap_gate_cost = 0;
  EXPECT_THROW(p.validate(), std::invalid_argument);
}

}  // namespace
}  // namespace qroute
