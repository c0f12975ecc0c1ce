// Copyright 2026 The wep Authors
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

#include <algorithm>
#include <cmath>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wep/error.hpp"
#include "wep/graph.hpp"
#include "wep/matrix.hpp"

namespace wep {

inline constexpr double kPerronTolerance = 1e-12;
inline constexpr long kMaxPowerIterations = 1'000'000;

/// Spectral radius and Perron vector of a connected graph.
struct PerronData {
  double lambda1 = 0.0;
  /// Strictly positive, smallest entry exactly 1.
  std::vector<double> nu;
  /// max_u |(A nu)_u - lambda1 nu_u|, at most tol * (lambda1 + 1).
  double residual = 0.0;
};

namespace detail {

struct PowerResult {
  double rho;              // Rayleigh quotient of the shifted operator
  std::vector<double> v;   // converged iterate, max entry 1
};

// Power iteration on the shifted operator (M + I). The shift makes the top
// eigenvalue strictly dominant in modulus for any nonnegative symmetric M,
// including bipartite adjacency matrices whose spectrum is symmetric.
//
// With `scale_by_min` the residual is measured on v / min(v), which is the
// quantity reported for Perron vectors; otherwise on v with max entry 1.
template <typename Apply>
PowerResult shifted_power_iteration(Apply&& apply, std::vector<double> v, double tol,
                                    long max_iterations, bool scale_by_min) {
  const std::size_t n = v.size();
  auto normalize = [](std::vector<double>& x) {
    const double mx = *std::max_element(x.begin(), x.end());
    for (double& t : x) t /= mx;
  };
  normalize(v);
  std::vector<double> w(n);
  std::optional<PowerResult> best;
  double best_residual = 0.0;
  for (long it = 0; it < max_iterations; ++it) {
    apply(v, w);
    for (std::size_t i = 0; i < n; ++i) w[i] += v[i];
    double vw = 0.0, vv = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      vw += v[i] * w[i];
      vv += v[i] * v[i];
    }
    const double rho = vw / vv;
    double residual = 0.0;
    for (std::size_t i = 0; i < n; ++i) residual = std::max(residual, std::abs(w[i] - rho * v[i]));
    if (scale_by_min) residual /= *std::min_element(v.begin(), v.end());
    // Past the tolerance, keep going while the residual still shrinks.
    if (best && residual >= best_residual) return *best;
    if (residual <= tol * rho && (!best || residual < best_residual)) {
      best = PowerResult{rho, v};
      best_residual = residual;
    }
    v.swap(w);
    normalize(v);
  }
  if (best) return *best;
  fail(ErrorKind::NoConvergence,
       "power iteration did not reach tolerance in " + std::to_string(max_iterations) + " steps");
}

}  // namespace detail

/// Perron data of a connected graph, iterating from `start` (strictly
/// positive, length n).
inline PerronData perron(const Graph& g, std::span<const double> start, double tol = kPerronTolerance,
                         long max_iterations = kMaxPowerIterations) {
  const int n = g.order();
  detail::require(is_connected(g), ErrorKind::NotConnected,
                  "Perron vector requires a connected graph");
  detail::require(static_cast<int>(start.size()) == n, ErrorKind::DimensionMismatch,
                  "start vector length " + std::to_string(start.size()));
  for (double s : start)
    detail::require(s > 0.0, ErrorKind::DimensionMismatch, "start vector must be strictly positive");

  auto apply = [&g, n](const std::vector<double>& x, std::vector<double>& y) {
    for (int u = 0; u < n; ++u) {
      double s = 0.0;
      for (int v : g.neighbors(u)) s += x[v];
      y[u] = s;
    }
  };
  auto result = detail::shifted_power_iteration(apply, std::vector<double>(start.begin(), start.end()),
                                                tol, max_iterations, /*scale_by_min=*/true);

  PerronData out;
  out.lambda1 = result.rho - 1.0;
  const double mn = *std::min_element(result.v.begin(), result.v.end());
  out.nu.resize(n);
  for (int u = 0; u < n; ++u) out.nu[u] = result.v[u] / mn;
  std::vector<double> anu(n);
  apply(out.nu, anu);
  for (int u = 0; u < n; ++u)
    out.residual = std::max(out.residual, std::abs(anu[u] - out.lambda1 * out.nu[u]));
  return out;
}

/// Perron data of a connected graph, starting from the all-ones vector.
inline PerronData perron(const Graph& g, double tol = kPerronTolerance,
                         long max_iterations = kMaxPowerIterations) {
  const std::vector<double> ones(g.order(), 1.0);
  return perron(g, ones, tol, max_iterations);
}

/// Largest eigenvalue of a symmetric entrywise-nonnegative matrix.
inline double spectral_radius(const Matrix& m, double tol = kPerronTolerance,
                              long max_iterations = kMaxPowerIterations) {
  detail::require(m.square(), ErrorKind::NotSquare, "spectral radius of " + m.shape());
  const int n = m.rows();
  detail::require(n > 0, ErrorKind::DimensionMismatch, "spectral radius of an empty matrix");
  const double scale = std::max(1.0, m.max_abs());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (m(i, j) < 0.0)
        detail::fail(ErrorKind::NegativeEntry, "entry (" + std::to_string(i + 1) + "," +
                                                   std::to_string(j + 1) + ") is negative");
      if (std::abs(m(i, j) - m(j, i)) > 1e-12 * scale)
        detail::fail(ErrorKind::NotSymmetric, "matrix is not symmetric");
    }
  auto apply = [&m](const std::vector<double>& x, std::vector<double>& y) { y = m * x; };
  auto result = detail::shifted_power_iteration(apply, std::vector<double>(n, 1.0), tol,
                                                max_iterations, /*scale_by_min=*/false);
  return result.rho - 1.0;
}

/// (1/nu_u) * sum of nu_v over the neighbors v of u.
inline double weight_degree(const Graph& g, std::span<const double> nu, int u) {
  detail::require(static_cast<int>(nu.size()) == g.order(), ErrorKind::DimensionMismatch,
                  "weight vector length " + std::to_string(nu.size()));
  detail::require(u >= 0 && u < g.order(), ErrorKind::VertexOutOfRange,
                  "vertex " + std::to_string(u + 1));
  double s = 0.0;
  for (int v : g.neighbors(u)) s += nu[v];
  return s / nu[u];
}

}  // namespace wep
