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

#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "wep/error.hpp"
#include "wep/graph.hpp"
#include "wep/matrix.hpp"
#include "wep/partition.hpp"

namespace wep {

/// Matrices induced by a graph, a positive vertex weight nu and a partition.
///
///   D       m x m   diag(||rho(V_i)||), rho(V_i) = nu restricted to V_i
///   S_tilde n x m   s_uj = nu_u if u in V_j
///   S_bar   n x m   S_tilde D^-1, orthonormal columns
///   B_tilde m x m   S_tilde^T A S_tilde, entry (i,j) sums nu_u nu_v over
///                   edges between V_i and V_j (intra-cell edges twice)
///   B_bar   m x m   D^-1 B_tilde D^-1, the condensed adjacency matrix
///   X       n x n   S_bar S_bar^T, x_vw = nu_v nu_w / ||rho(V_i)||^2
struct WeightedView {
  Matrix D;
  Matrix S_tilde;
  Matrix S_bar;
  Matrix B_tilde;
  Matrix B_bar;
  Matrix X;

  /// ||rho(V_i)||, the diagonal of D.
  std::vector<double> cell_norms() const {
    std::vector<double> x(D.rows());
    for (int i = 0; i < D.rows(); ++i) x[i] = D(i, i);
    return x;
  }
};

namespace detail {

inline void require_weights(const Graph& g, std::span<const double> nu, const Partition& p) {
  require(static_cast<int>(nu.size()) == g.order(), ErrorKind::DimensionMismatch,
          "weight vector of length " + std::to_string(nu.size()) + " for graph of order " +
              std::to_string(g.order()));
  require(p.size() == g.order(), ErrorKind::DimensionMismatch,
          "partition of " + std::to_string(p.size()) + " points for graph of order " +
              std::to_string(g.order()));
}

}  // namespace detail

inline WeightedView build_weighted_view(const Graph& g, std::span<const double> nu, const Partition& p) {
  detail::require_weights(g, nu, p);
  const int n = g.order();
  const int m = p.cell_count();

  std::vector<double> sq(m, 0.0);
  for (int u = 0; u < n; ++u) sq[p.cell_of(u)] += nu[u] * nu[u];

  WeightedView w{Matrix(m, m), Matrix(n, m), Matrix(n, m), Matrix(m, m), Matrix(m, m), Matrix(n, n)};
  for (int i = 0; i < m; ++i) w.D(i, i) = std::sqrt(sq[i]);

  for (int u = 0; u < n; ++u) {
    const int c = p.cell_of(u);
    w.S_tilde(u, c) = nu[u];
    w.S_bar(u, c) = nu[u] / w.D(c, c);
  }

  // Each undirected edge is added once per orientation, mirrored so the
  // result is exactly symmetric.
  for (int u = 0; u < n; ++u)
    for (int v : g.neighbors(u)) {
      if (v < u) continue;
      const int a = p.cell_of(u);
      const int b = p.cell_of(v);
      const double x = nu[u] * nu[v];
      if (a == b) {
        w.B_tilde(a, a) += 2.0 * x;
      } else {
        w.B_tilde(a, b) += x;
        w.B_tilde(b, a) += x;
      }
    }
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) w.B_bar(i, j) = w.B_tilde(i, j) / (w.D(i, i) * w.D(j, j));

  for (const auto& cell : p.cells()) {
    const double s = sq[p.cell_of(cell.front())];
    for (int v : cell)
      for (int x : cell) w.X(v, x) = nu[v] * nu[x] / s;
  }
  return w;
}

}  // namespace wep
