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

#include "qroute/fitting.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>

namespace qroute {

namespace {

constexpr int kMaxIterations = 200;
constexpr double kRelativeStep = 1e-6;
constexpr double kUpdateTolerance = 1e-10;

using ModelFn = std::function<double(const Eigen::VectorXd&, double)>;

double eval_kind(CurveKind kind, const Eigen::VectorXd& p, double n) {
  switch (kind) {
    case CurveKind::SwapPower1D: return p[0] * n + p[1];
    case CurveKind::SwapPower2D: return p[0] * std::sqrt(n) + p[1];
    case CurveKind::DepthLog1D: return p[0] * std::log(n) + (1.0 - p[0] * std::log(2.0));
    case CurveKind::DepthLog2D: return p[0] * std::log(n) / std::sqrt(n) + p[1];
    // Internal parametrization: log F = a + c * N^D.
    case CurveKind::FidelityExp: return p[0] + p[1] * std::pow(n, p[2]);
  }
  return 0.0;
}

Eigen::VectorXd residuals(const ModelFn& f, const Eigen::VectorXd& p, std::span<const FitPoint> data) {
  Eigen::VectorXd r(static_cast<Eigen::Index>(data.size()));
  for (std::size_t i = 0; i < data.size(); ++i) r[static_cast<Eigen::Index>(i)] = f(p, data[i].n) - data[i].y;
  return r;
}

struct Solution {
  Eigen::VectorXd params;
  std::size_t iterations = 0;
};

Solution levenberg_marquardt(const ModelFn& f, Eigen::VectorXd p, std::span<const FitPoint> data) {
  const auto m = static_cast<Eigen::Index>(data.size());
  const auto k = p.size();
  Eigen::VectorXd r = residuals(f, p, data);
  double cost = r.squaredNorm();
  double lambda = 1e-3;
  Eigen::MatrixXd jac(m, k);

  for (int it = 1; it <= kMaxIterations; ++it) {
    for (Eigen::Index j = 0; j < k; ++j) {
      const double h = kRelativeStep * std::max(std::abs(p[j]), 1.0);
      Eigen::VectorXd hi = p, lo = p;
      hi[j] += h;
      lo[j] -= h;
      jac.col(j) = (residuals(f, hi, data) - residuals(f, lo, data)) / (2.0 * h);
    }
    const Eigen::MatrixXd jtj = jac.transpose() * jac;
    const Eigen::VectorXd grad = jac.transpose() * r;

    for (;;) {
      Eigen::MatrixXd damped = jtj;
      for (Eigen::Index j = 0; j < k; ++j) damped(j, j) += lambda * std::max(jtj(j, j), 1e-12);
      const Eigen::VectorXd step = damped.ldlt().solve(-grad);
      const Eigen::VectorXd trial = p + step;
      const Eigen::VectorXd r_trial = residuals(f, trial, data);
      const double trial_cost = r_trial.squaredNorm();
      if (std::isfinite(trial_cost) && trial_cost <= cost) {
        p = trial;
        r = r_trial;
        cost = trial_cost;
        lambda = std::max(lambda * 0.1, 1e-12);
        if (step.norm() < kUpdateTolerance * (1.0 + p.norm())) return {p, static_cast<std::size_t>(it)};
        break;
      }
      lambda *= 10.0;
      // No downhill step left at any damping: at a minimum.
      if (lambda > 1e12) return {p, static_cast<std::size_t>(it)};
    }
  }
  throw FitError("curve fit did not converge in " + std::to_string(kMaxIterations) + " iterations");
}

// Ordinary least squares for log F = a + c * x with x = N^D.
std::pair<Eigen::Vector2d, double> linear_in_power(std::span<const FitPoint> data, double power) {
  Eigen::MatrixXd a(static_cast<Eigen::Index>(data.size()), 2);
  Eigen::VectorXd y(static_cast<Eigen::Index>(data.size()));
  for (std::size_t i = 0; i < data.size(); ++i) {
    const auto row = static_cast<Eigen::Index>(i);
    a(row, 0) = 1.0;
    a(row, 1) = std::pow(data[i].n, power);
    y[row] = data[i].y;
  }
  const Eigen::Vector2d coef = a.colPivHouseholderQr().solve(y);
  return {coef, (a * coef - y).squaredNorm()};
}

Eigen::VectorXd initial_guess(CurveKind kind, std::span<const FitPoint> data) {
  std::vector<FitPoint> sorted(data.begin(), data.end());
  std::sort(sorted.begin(), sorted.end(), [](const FitPoint& x, const FitPoint& y) { return x.n < y.n; });
  const FitPoint& last = sorted.back();
  const FitPoint& first = sorted.front();
  // Last point with a smaller N than the final one.
  auto prev = std::find_if(sorted.rbegin(), sorted.rend(), [&](const FitPoint& p) { return p.n < last.n; });
  auto slope = [](double x0, double y0, double x1, double y1) { return x1 != x0 ? (y1 - y0) / (x1 - x0) : 0.0; };

  Eigen::VectorXd p;
  switch (kind) {
    case CurveKind::SwapPower1D:
    case CurveKind::SwapPower2D: {
      auto x = [kind](double n) { return kind == CurveKind::SwapPower1D ? n : std::sqrt(n); };
      p.resize(2);
      p << slope(x(prev->n), prev->y, x(last.n), last.y), 0.0;
      break;
    }
    case CurveKind::DepthLog1D:
      p.resize(1);
      p << slope(std::log(first.n), first.y, std::log(last.n), last.y);
      break;
    case CurveKind::DepthLog2D: {
      auto x = [](double n) { return std::log(n) / std::sqrt(n); };
      p.resize(2);
      p << slope(x(first.n), first.y, x(last.n), last.y), 0.0;
      break;
    }
    case CurveKind::FidelityExp: {
      double best_sse = std::numeric_limits<double>::infinity();
      p.resize(3);
      for (int i = 1; i <= 8; ++i) {
        const double power = 0.25 * i;
        const auto [coef, sse] = linear_in_power(data, power);
        if (sse < best_sse) {
          best_sse = sse;
          p << coef[0], coef[1], power;
        }
      }
      break;
    }
  }
  return p;
}

}  // namespace

std::string_view to_string(CurveKind kind) {
  switch (kind) {
    case CurveKind::SwapPower1D: return "swap-1d";
    case CurveKind::SwapPower2D: return "swap-2d";
    case CurveKind::DepthLog1D: return "depth-1d";
    case CurveKind::DepthLog2D: return "depth-2d";
    case CurveKind::FidelityExp: return "fidelity";
  }
  return "unknown";
}

std::optional<CurveKind> parse_curve_kind(std::string_view name) {
  for (CurveKind k : {CurveKind::SwapPower1D, CurveKind::SwapPower2D, CurveKind::DepthLog1D, CurveKind::DepthLog2D,
                      CurveKind::FidelityExp}) {
    if (name == to_string(k)) return k;
  }
  return std::nullopt;
}

std::size_t parameter_count(CurveKind kind) {
  switch (kind) {
    case CurveKind::DepthLog1D: return 1;
    case CurveKind::FidelityExp: return 3;
    default: return 2;
  }
}

double CurveModel::predict(double n) const {
  switch (kind) {
    case CurveKind::SwapPower1D: return params.at(0) * n + params.at(1);
    case CurveKind::SwapPower2D: return params.at(0) * std::sqrt(n) + params.at(1);
    case CurveKind::DepthLog1D: return params.at(0) * std::log(n) + (1.0 - params.at(0) * std::log(2.0));
    case CurveKind::DepthLog2D: return params.at(0) * std::log(n) / std::sqrt(n) + params.at(1);
    case CurveKind::FidelityExp:
      return std::log(params.at(0)) + params.at(2) * std::pow(n, params.at(3)) * std::log(params.at(1));
  }
  return 0.0;
}

double r_squared(std::span<const FitPoint> data, const CurveModel& model) {
  if (data.size() < 2) throw std::invalid_argument("r^2 needs at least 2 points");
  double mean = 0.0;
  for (const FitPoint& p : data) mean += p.y;
  mean /= static_cast<double>(data.size());
  double ss_res = 0.0, ss_tot = 0.0, scale = 0.0;
  for (const FitPoint& p : data) {
    const double e = p.y - model.predict(p.n);
    ss_res += e * e;
    ss_tot += (p.y - mean) * (p.y - mean);
    scale += p.y * p.y;
  }
  if (ss_tot == 0.0) {
    if (ss_res <= 1e-24 * (1.0 + scale)) return 1.0;
    throw FitError("r^2 undefined: constant data with nonzero residuals");
  }
  return 1.0 - ss_res / ss_tot;
}

FitResult fit(CurveKind kind, std::span<const FitPoint> data) {
  const std::size_t free_params = parameter_count(kind);
  if (data.size() < free_params + 1) {
    throw std::invalid_argument(std::string(to_string(kind)) + " fit needs at least " +
                                std::to_string(free_params + 1) + " points");
  }
  for (const FitPoint& p : data) {
    if (!(p.n >= 2.0)) throw std::invalid_argument("fit points need N >= 2");
    if (!std::isfinite(p.y)) throw std::invalid_argument("fit points must be finite");
  }
  const bool all_equal =
      std::all_of(data.begin(), data.end(), [&](const FitPoint& p) { return p.n == data.front().n; });
  if (all_equal) throw FitError("degenerate fit data: every point has the same N");

  const ModelFn f = [kind](const Eigen::VectorXd& p, double n) { return eval_kind(kind, p, n); };
  const Solution sol = levenberg_marquardt(f, initial_guess(kind, data), data);

  FitResult result;
  result.model.kind = kind;
  result.iterations = sol.iterations;
  if (kind == CurveKind::FidelityExp) {
    const double a = sol.params[0], c = sol.params[1], power = sol.params[2];
    result.model.params = {std::exp(a), std::exp(-1.0), -c, power};
  } else {
    result.model.params.assign(sol.params.data(), sol.params.data() + sol.params.size());
  }
  result.residuals.reserve(data.size());
  for (const FitPoint& p : data) result.residuals.push_back(p.y - result.model.predict(p.n));
  result.r_squared = r_squared(data, result.model);
  return result;
}

std::optional<Crossover> find_crossover(const FitResult& a, const FitResult& b, int lo, int hi) {
  if (lo >= hi) throw std::invalid_argument("crossover range needs lo < hi");
  auto diff = [&](double n) { return a.model.predict(n) - b.model.predict(n); };
  auto sign = [](double x) { return (x > 0.0) - (x < 0.0); };
  const int start = sign(diff(lo));
  if (start == 0) return std::nullopt;
  for (int n = lo + 1; n <= hi; ++n) {
    const int s = sign(diff(n));
    if (s == 0 || s == start) continue;
    double left = n - 1, right = n;
    for (int i = 0; i < 100 && right - left > 1e-12; ++i) {
      const double mid = 0.5 * (left + right);
      (sign(diff(mid)) == start ? left : right) = mid;
    }
    return Crossover{n, 0.5 * (left + right), start < 0};
  }
  return std::nullopt;
}

std::optional<Crossover> find_last_crossover(const FitResult& a, const FitResult& b, int lo, int hi) {
  if (lo >= hi) throw std::invalid_argument("crossover range needs lo < hi");
  std::optional<Crossover> last;
  for (int from = lo; from < hi;) {
    const auto c = find_crossover(a, b, from, hi);
    if (!c) break;
    last = c;
    from = c->n;
  }
  return last;
}

}  // namespace qroute
