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
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wep/error.hpp"
#include "wep/graph.hpp"
#include "wep/matrix.hpp"
#include "wep/partition.hpp"
#include "wep/spectral.hpp"
#include "wep/weighted_view.hpp"

namespace wep {

/// Default absolute tolerance on weight-intersection deviations.
inline constexpr double kDefaultTolerance = 1e-8;

/// Support threshold for scc_partition: |x| above this counts as nonzero.
inline constexpr double kSupportThreshold = 1e-12;

/// Weight-intersection numbers b*_ij(u) = (1/nu_u) * sum of nu_v over the
/// neighbors v of u in V_j, for u in V_i.
struct IntersectionTable {
  /// n x m; row u holds b*_{cell(u), j}(u) for every j.
  Matrix per_vertex;
  /// m x m constants b*_ij, present only when the partition is weight-equitable.
  std::optional<Matrix> constants;
  bool is_we = false;
  /// Largest within-cell spread max_u b*_ij(u) - min_u b*_ij(u).
  double max_deviation = 0.0;
};

inline IntersectionTable weight_intersection_numbers(const Graph& g, std::span<const double> nu,
                                                     const Partition& p,
                                                     double tol = kDefaultTolerance) {
  detail::require_weights(g, nu, p);
  const int n = g.order();
  const int m = p.cell_count();
  IntersectionTable t;
  t.per_vertex = Matrix(n, m);
  for (int u = 0; u < n; ++u) {
    for (int v : g.neighbors(u)) t.per_vertex(u, p.cell_of(v)) += nu[v];
    for (int j = 0; j < m; ++j) t.per_vertex(u, j) /= nu[u];
  }
  for (const auto& cell : p.cells())
    for (int j = 0; j < m; ++j) {
      double lo = std::numeric_limits<double>::infinity();
      double hi = -lo;
      for (int u : cell) {
        lo = std::min(lo, t.per_vertex(u, j));
        hi = std::max(hi, t.per_vertex(u, j));
      }
      t.max_deviation = std::max(t.max_deviation, hi - lo);
    }
  t.is_we = t.max_deviation <= tol;
  if (t.is_we) {
    Matrix c(m, m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        double s = 0.0;
        for (int u : p.cell(i)) s += t.per_vertex(u, j);
        c(i, j) = s / static_cast<double>(p.cell(i).size());
      }
    t.constants = std::move(c);
  }
  return t;
}

/// The canonical decision procedure: every b*_ij(u) is constant over u in V_i.
inline bool is_weight_equitable(const Graph& g, std::span<const double> nu, const Partition& p,
                                double tol = kDefaultTolerance) {
  return weight_intersection_numbers(g, nu, p, tol).is_we;
}

/// Largest absolute entry of A X - X A with X = S_bar S_bar^T.
inline double commutator_norm(const Graph& g, std::span<const double> nu, const Partition& p) {
  const Matrix x = build_weighted_view(g, nu, p).X;
  return max_abs_diff(adjacency_times(g, x), times_adjacency(x, g));
}

/// Weight-equitability through commutation of A with the projector X.
inline bool is_weight_equitable_commute(const Graph& g, std::span<const double> nu, const Partition& p,
                                        double tol = kDefaultTolerance) {
  return commutator_norm(g, nu, p) <= tol;
}

/// Plain equitability: neighbor counts b_ij(u) constant over u in V_i.
/// Exact integer arithmetic.
inline bool is_equitable(const Graph& g, const Partition& p) {
  detail::require(p.size() == g.order(), ErrorKind::DimensionMismatch,
                  "partition of " + std::to_string(p.size()) + " points for graph of order " +
                      std::to_string(g.order()));
  const int m = p.cell_count();
  std::vector<int> reference(m), counts(m);
  for (const auto& cell : p.cells()) {
    bool first = true;
    for (int u : cell) {
      std::fill(counts.begin(), counts.end(), 0);
      for (int v : g.neighbors(u)) ++counts[p.cell_of(v)];
      if (first) {
        reference = counts;
        first = false;
      } else if (counts != reference) {
        return false;
      }
    }
  }
  return true;
}

/// True iff nu varies by at most tol within every cell.
inline bool perron_constant_on_cells(std::span<const double> nu, const Partition& p,
                                     double tol = kDefaultTolerance) {
  detail::require(static_cast<int>(nu.size()) == p.size(), ErrorKind::DimensionMismatch,
                  "weight vector length " + std::to_string(nu.size()));
  for (const auto& cell : p.cells()) {
    const auto [lo, hi] = std::minmax_element(cell.begin(), cell.end(),
                                              [&](int a, int b) { return nu[a] < nu[b]; });
    if (nu[*hi] - nu[*lo] > tol) return false;
  }
  return true;
}

/// ||B_bar x - lambda1 x||_inf with x the vector of cell norms.
inline double quotient_eigen_residual(const Graph& g, const PerronData& perron_data, const Partition& p) {
  const WeightedView w = build_weighted_view(g, perron_data.nu, p);
  const std::vector<double> x = w.cell_norms();
  const std::vector<double> bx = w.B_bar * x;
  double r = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) r = std::max(r, std::abs(bx[i] - perron_data.lambda1 * x[i]));
  return r;
}

/// The cell-norm vector is an eigenvector of B_bar for lambda1. This holds
/// for every partition, so it is a consistency check rather than a test.
inline bool quotient_eigen_check(const Graph& g, const PerronData& perron_data, const Partition& p,
                                 double tol = kDefaultTolerance) {
  return quotient_eigen_residual(g, perron_data, p) <= tol;
}

/// Strongly connected components of the support digraph of a nonnegative
/// square matrix (arc i -> j iff |x_ij| > kSupportThreshold).
inline Partition scc_partition(const Matrix& x) {
  detail::require(x.square(), ErrorKind::NotSquare, "support digraph of " + x.shape());
  const int n = x.rows();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (x(i, j) < -kSupportThreshold)
        detail::fail(ErrorKind::NegativeEntry,
                     "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") is negative");

  // Iterative Tarjan.
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1), stack;
  std::vector<char> on_stack(n, 0);
  std::vector<std::pair<int, int>> frames;  // (vertex, next column to scan)
  int counter = 0, components = 0;
  for (int s = 0; s < n; ++s) {
    if (index[s] >= 0) continue;
    frames.push_back({s, 0});
    index[s] = low[s] = counter++;
    stack.push_back(s);
    on_stack[s] = 1;
    while (!frames.empty()) {
      auto& [v, next] = frames.back();
      bool descended = false;
      while (next < n) {
        const int w = next++;
        if (std::abs(x(v, w)) <= kSupportThreshold) continue;
        if (index[w] < 0) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
          frames.push_back({w, 0});
          descended = true;
          break;
        }
        if (on_stack[w]) low[v] = std::min(low[v], index[w]);
      }
      if (descended) continue;
      const int done = v;
      if (low[done] == index[done]) {
        int w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          comp[w] = components;
        } while (w != done);
        ++components;
      }
      frames.pop_back();
      if (!frames.empty()) {
        const int parent = frames.back().first;
        low[parent] = std::min(low[parent], low[done]);
      }
    }
  }
  return Partition::from_labels(comp);
}

/// (B f)(u) = sum over neighbors v of u of (nu_v / nu_u) f(v).
inline std::vector<double> b_operator(const Graph& g, std::span<const double> nu, std::span<const double> f) {
  const int n = g.order();
  detail::require(static_cast<int>(nu.size()) == n && static_cast<int>(f.size()) == n,
                  ErrorKind::DimensionMismatch, "b_operator input length");
  std::vector<double> out(n, 0.0);
  for (int u = 0; u < n; ++u) {
    double s = 0.0;
    for (int v : g.neighbors(u)) s += nu[v] * f[v];
    out[u] = s / nu[u];
  }
  return out;
}

/// True iff the space of cell-constant functions is invariant under B,
/// checked on the cell indicator basis.
inline bool is_B_invariant(const Graph& g, std::span<const double> nu, const Partition& p,
                           double tol = kDefaultTolerance) {
  detail::require_weights(g, nu, p);
  std::vector<double> indicator(g.order());
  for (int j = 0; j < p.cell_count(); ++j) {
    for (int v = 0; v < g.order(); ++v) indicator[v] = p.cell_of(v) == j ? 1.0 : 0.0;
    const std::vector<double> image = b_operator(g, nu, indicator);
    for (const auto& cell : p.cells()) {
      const auto [lo, hi] = std::minmax_element(cell.begin(), cell.end(),
                                                [&](int a, int b) { return image[a] < image[b]; });
      if (image[*hi] - image[*lo] > tol) return false;
    }
  }
  return true;
}

/// Coarsest equitable partition by color refinement from {V}.
///
/// Each round recolors vertices by (old color, sorted multiset of neighbor
/// colors); signatures are ranked in sorted order, so the colors themselves
/// do not depend on vertex labels. Stops when the color count is stable.
inline std::vector<int> stable_coloring(const Graph& g) {
  const int n = g.order();
  std::vector<int> color(n, 0);
  int classes = n > 0 ? 1 : 0;
  for (;;) {
    std::vector<std::pair<std::vector<int>, int>> sig(n);
    for (int u = 0; u < n; ++u) {
      std::vector<int> key;
      key.reserve(g.degree(u) + 1);
      key.push_back(color[u]);
      for (int v : g.neighbors(u)) key.push_back(color[v]);
      std::sort(key.begin() + 1, key.end());
      sig[u] = {std::move(key), u};
    }
    std::vector<int> order(n);
    for (int u = 0; u < n; ++u) order[u] = u;
    std::sort(order.begin(), order.end(), [&](int a, int b) { return sig[a].first < sig[b].first; });
    std::vector<int> next(n);
    int c = -1;
    for (int k = 0; k < n; ++k) {
      if (k == 0 || sig[order[k]].first != sig[order[k - 1]].first) ++c;
      next[order[k]] = c;
    }
    const int next_classes = c + 1;
    color.swap(next);
    if (next_classes == classes) break;
    classes = next_classes;
  }
  return color;
}

inline Partition coarsest_equitable(const Graph& g) { return Partition::from_labels(stable_coloring(g)); }

}  // namespace wep
