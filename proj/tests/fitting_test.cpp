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
#include <numbers>
#include <stdexcept>
#include <vector>

#include "qroute/fitting.hpp"
#include "qroute/random.hpp"

namespace qroute {
namespace {

std::vector<FitPoint> sample(double (*f)(double, const double*), const double* p, int lo = 10, int hi = 200,
                             int step = 10) {
  std::vector<FitPoint> out;
  for (int n = lo; n <= hi; n += step) out.push_back({static_cast<double>(n), f(n, p)});
  return out;
}

double swap1d(double n, const double* p) { return p[0] * n + p[1]; }
double swap2d(double n, const double* p) { return p[0] * std::sqrt(n) + p[1]; }
double depth1d(double n, const double* p) { return p[0] * std::log(n) + 1.0 - p[0] * std::log(2.0); }
double depth2d(double n, const double* p) { return p[0] * std::log(n) / std::sqrt(n) + p[1]; }
// log of A * B^(C * N^D)
double fid(double n, const double* p) { return std::log(p[0]) + p[2] * std::pow(n, p[3]) * std::log(p[1]); }

void expect_rel(double got, double want, double tol = 1e-6) {
  EXPECT_LE(std::abs(got - want), tol * std::abs(want)) << "got " << got << " want " << want;
}

struct Case {
  CurveKind kind;
  double (*f)(double, const double*);
  std::vector<double> params;
};

TEST(Fit, RecoversTableParametersExactly) {
  const std::vector<Case> cases = {
      {CurveKind::SwapPower1D, swap1d, {0.282, -1.18}},  {CurveKind::SwapPower1D, swap1d, {0.282, -1.22}},
      {CurveKind::SwapPower1D, swap1d, {0.255, -2.00}},  {CurveKind::SwapPower1D, swap1d, {0.257, -2.04}},
      {CurveKind::SwapPower2D, swap2d, {0.549, -1.10}},  {CurveKind::SwapPower2D, swap2d, {0.549, -1.11}},
      {CurveKind::SwapPower2D, swap2d, {0.466, -1.16}},  {CurveKind::DepthLog1D, depth1d, {0.293}},
      {CurveKind::DepthLog1D, depth1d, {0.276}},         {CurveKind::DepthLog2D, depth2d, {1.22, 0.152}},
      {CurveKind::DepthLog2D, depth2d, {1.15, 0.156}},
  };
  for (const Case& c : cases) {
    const auto data = sample(c.f, c.params.data());
    const FitResult r = fit(c.kind, data);
    ASSERT_EQ(r.model.params.size(), c.params.size());
    for (std::size_t i = 0; i < c.params.size(); ++i) expect_rel(r.model.params[i], c.params[i]);
    EXPECT_NEAR(r.r_squared, 1.0, 1e-9) << to_string(c.kind);
    for (double e : r.residuals) EXPECT_NEAR(e, 0.0, 1e-9);
  }
}

TEST(Fit, RecoversFidelityCurve) {
  // Only C * log B is identifiable; the fit reports B = 1/e.
  const std::vector<std::vector<double>> truths = {
      {0.97, 0.9999, 3.0, 1.5}, {1.0, 0.99, 0.4, 1.0}, {0.8, 0.999, 2.5, 0.7}, {0.95, 0.9995, 1.7, 1.37}};
  for (const auto& t : truths) {
    const auto data = sample(fid, t.data(), 10, 200, 10);
    const FitResult r = fit(CurveKind::FidelityExp, data);
    ASSERT_EQ(r.model.params.size(), 4u);
    expect_rel(r.model.params[0], t[0]);
    EXPECT_DOUBLE_EQ(r.model.params[1], std::exp(-1.0));
    expect_rel(r.model.params[2] * -std::log(r.model.params[1]), t[2] * -std::log(t[1]));
    expect_rel(r.model.params[3], t[3]);
    for (const FitPoint& p : data) EXPECT_NEAR(r.model.predict(p.n), p.y, 1e-9 * (1.0 + std::abs(p.y)));
  }
}

TEST(Fit, DepthLog1DPassesThroughOneAtTwo) {
  std::vector<FitPoint> data;
  Rng rng(4);
  for (int n = 10; n <= 100; n += 10) data.push_back({double(n), 0.3 * std::log(n) + 0.1 * (rng.below(1000) / 1000.0)});
  const FitResult r = fit(CurveKind::DepthLog1D, data);
  EXPECT_NEAR(r.model.predict(2.0), 1.0, 1e-14);
}

TEST(Fit, ConstantData) {
  std::vector<FitPoint> data;
  for (int n = 10; n <= 100; n += 10) data.push_back({double(n), 5.0});
  const FitResult r = fit(CurveKind::SwapPower1D, data);
  EXPECT_NEAR(r.model.params[0], 0.0, 1e-12);
  EXPECT_NEAR(r.model.params[1], 5.0, 1e-10);
  EXPECT_EQ(r.r_squared, 1.0);
}

TEST(RSquared, Definitions) {
  const double p[] = {0.282, -1.18};
  const auto data = sample(swap1d, p);
  EXPECT_EQ(r_squared(data, CurveModel{CurveKind::SwapPower1D, {0.282, -1.18}}), 1.0);
  double mean = 0.0;
  for (const FitPoint& d : data) mean += d.y;
  mean /= data.size();
  EXPECT_NEAR(r_squared(data, CurveModel{CurveKind::SwapPower1D, {0.0, mean}}), 0.0, 1e-12);

  const std::vector<FitPoint> flat = {{2, 1.0}, {3, 1.0}, {4, 1.0}};
  EXPECT_EQ(r_squared(flat, CurveModel{CurveKind::SwapPower1D, {0.0, 1.0}}), 1.0);
  EXPECT_THROW(r_squared(flat, CurveModel{CurveKind::SwapPower1D, {0.0, 2.0}}), FitError);
  EXPECT_THROW(r_squared(std::vector<FitPoint>{{2, 1.0}}, CurveModel{CurveKind::SwapPower1D, {0.0, 1.0}}),
               std::invalid_argument);
}

TEST(RSquared, NoisyTableDataStaysHigh) {
  Rng rng(12);
  auto gaussian = [&rng] {
    const double u1 = (rng.next() >> 11) * 0x1.0p-53 + 0x1.0p-54;
    const double u2 = (rng.next() >> 11) * 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  };
  std::vector<FitPoint> data;
  for (int n = 10; n <= 200; n += 10) {
    const double y = 0.282 * n - 1.18;
    data.push_back({double(n), y * (1.0 + 0.01 * gaussian())});
  }
  const FitResult r = fit(CurveKind::SwapPower1D, data);
  EXPECT_GT(r.r_squared, 0.999);
  EXPECT_NEAR(r.model.params[0], 0.282, 0.01);
}

TEST(Fit, RejectsBadData) {
  EXPECT_THROW(fit(CurveKind::SwapPower1D, std::vector<FitPoint>{{10, 1}, {20, 2}}), std::invalid_argument);
  EXPECT_THROW(fit(CurveKind::DepthLog1D, std::vector<FitPoint>{{1, 1}, {20, 2}}), std::invalid_argument);
  EXPECT_THROW(fit(CurveKind::SwapPower1D, std::vector<FitPoint>{{10, 1}, {10, 2}, {10, 3}}), FitError);
}

TEST(Fit, Deterministic) {
  const double p[] = {1.22, 0.152};
  auto data = sample(depth2d, p);
  for (std::size_t i = 0; i < data.size(); ++i) data[i].y += 0.01 * ((i * 7) % 5 - 2);
  const FitResult a = fit(CurveKind::DepthLog2D, data);
  const FitResult b = fit(CurveKind::DepthLog2D, data);
  EXPECT_EQ(a.model.params, b.model.params);
  EXPECT_EQ(a.r_squared, b.r_squared);
}

TEST(CurveKinds, NamesAndCounts) {
  EXPECT_EQ(parse_curve_kind("depth-2d"), CurveKind::DepthLog2D);
  EXPECT_EQ(to_string(CurveKind::FidelityExp), "fidelity");
  EXPECT_FALSE(parse_curve_kind("cubic").has_value());
  EXPECT_EQ(parameter_count(CurveKind::DepthLog1D), 1u);
  EXPECT_EQ(parameter_count(CurveKind::SwapPower2D), 2u);
}

FitResult fidelity_curve(double a, double b, double c, double d) {
  FitResult r;
  r.model = {CurveKind::FidelityExp, {a, b, c, d}};
  return r;
}

TEST(Crossover, AnalyticExample) {
  // 0.99^N against 0.9 * 0.995^N: the second overtakes past ln 0.9 / ln(0.99/0.995).
  const auto x = find_crossover(fidelity_curve(1.0, 0.99, 1.0, 1.0), fidelity_curve(0.9, 0.995, 1.0, 1.0), 2, 100);
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(x->n, 21);
  EXPECT_NEAR(x->root, std::log(0.9) / std::log(0.99 / 0.995), 1e-9);
  EXPECT_FALSE(x->a_overtakes_b);

  const auto y = find_crossover(fidelity_curve(0.9, 0.995, 1.0, 1.0), fidelity_curve(1.0, 0.99, 1.0, 1.0), 2, 100);
  ASSERT_TRUE(y.has_value());
  EXPECT_EQ(y->n, 21);
  EXPECT_TRUE(y->a_overtakes_b);
}

TEST(Crossover, NoneWhenIdenticalOrOutOfRange) {
  const FitResult a = fidelity_curve(1.0, 0.99, 1.0, 1.0);
  EXPECT_FALSE(find_crossover(a, a, 2, 100).has_value());
  EXPECT_FALSE(find_crossover(a, fidelity_curve(0.9, 0.995, 1.0, 1.0), 2, 20).has_value());
  EXPECT_THROW(find_crossover(a, a, 10, 10), std::invalid_argument);
}

TEST(Crossover, LastCrossingAfterDoubleCrossing) {
  // log N / sqrt N peaks near N = e^2, so the two curves cross twice.
  FitResult flat, hump;
  flat.model = {CurveKind::SwapPower1D, {0.0, 0.0}};
  hump.model = {CurveKind::DepthLog2D, {1.0, -0.5}};
  const auto first = find_crossover(flat, hump, 2, 200);
  ASSERT_TRUE(first.has_value());
  EXPECT_EQ(first->n, 3);
  EXPECT_FALSE(first->a_overtakes_b);

  int expected = 0;
  auto above = [&](int n) { return flat.model.predict(n) > hump.model.predict(n); };
  for (int n = 3; n <= 200; ++n) {
    if (above(n) != above(n - 1)) expected = n;
  }
  const auto last = find_last_crossover(flat, hump, 2, 200);
  ASSERT_TRUE(last.has_value());
  EXPECT_EQ(last->n, expected);
  EXPECT_GT(expected, 3);
  EXPECT_TRUE(last->a_overtakes_b);
  EXPECT_NEAR(1.0 * std::log(last->root) / std::sqrt(last->root), 0.5, 1e-9);

  const FitResult a = fidelity_curve(0.9, 0.995, 1.0, 1.0);
  const FitResult b = fidelity_curve(1.0, 0.99, 1.0, 1.0);
  EXPECT_EQ(find_last_crossover(a, b, 2, 100)->n, 21);
  EXPECT_FALSE(find_last_crossover(a, b, 2, 20).has_value());
  EXPECT_THROW(find_last_crossover(a, b, 5, 5), std::invalid_argument);
}

TEST(Crossover, InvariantUnderCommonRescaling) {
  for (double scale : {0.01, 0.5, 3.0}) {
    const auto x = find_crossover(fidelity_curve(scale, 0.99, 1.0, 1.0),
                                  fidelity_curve(0.9 * scale, 0.995, 1.0, 1.0), 2, 100);
    ASSERT_TRUE(x.has_value());
    EXPECT_EQ(x->n, 21);
  }
}

}  // namespace
}  // namespace qroute
