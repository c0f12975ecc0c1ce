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
#include <string>
#include <vector>

#include "wep/equitability.hpp"
#include "wep/error.hpp"
#include "wep/graph.hpp"
#include "wep/matrix.hpp"
#include "wep/partition.hpp"
#include "wep/spectral.hpp"
#include "wep/weighted_view.hpp"

namespace wep {

/// Two connected graphs with equal spectral radius, viewed as one graph on
/// V(G) followed by V(H). Each side keeps its own Perron vector (minimum
/// entry 1); `nu` is their concatenation and serves as the vertex weight of
/// the union.
struct JointContext {
  Graph g;
  Graph h;
  Graph union_graph;
  int offset = 0;
  std::vector<double> nu_g;
  std::vector<double> nu_h;
  std::vector<double> nu;
  double lambda = 0.0;
};

enum class Side { G, H };

inline JointContext make_joint_context(const Graph& g, const Graph& h, double tol = kDefaultTolerance) {
  detail::require(is_connected(g) && is_connected(h), ErrorKind::NotConnected,
                  "joint partitions need both graphs connected");
  const PerronData pg = perron(g);
  const PerronData ph = perron(h);
  if (std::abs(pg.lambda1 - ph.lambda1) > tol)
    detail::fail(ErrorKind::SpectralRadiusMismatch,
                 "spectral radii " + std::to_string(pg.lambda1) + " and " + std::to_string(ph.lambda1));
  JointContext ctx;
  ctx.g = g;
  ctx.h = h;
  auto u = disjoint_union(g, h);
  ctx.union_graph = std::move(u.graph);
  ctx.offset = u.offset;
  ctx.nu_g = pg.nu;
  ctx.nu_h = ph.nu;
  ctx.nu = pg.nu;
  ctx.nu.insert(ctx.nu.end(), ph.nu.begin(), ph.nu.end());
  ctx.lambda = pg.lambda1;
  return ctx;
}

namespace detail {

inline void require_joint(const JointContext& ctx, const Partition& p) {
  require(p.size() == ctx.union_graph.order(), ErrorKind::GroundSetMismatch,
          "joint partition of " + std::to_string(p.size()) + " points, union has " +
              std::to_string(ctx.union_graph.order()));
}

}  // namespace detail

/// Every cell meets both V(G) and V(H).
inline bool is_balanced(const JointContext& ctx, const Partition& p) {
  detail::require_joint(ctx, p);
  for (const auto& cell : p.cells()) {
    // cells are sorted, so G-vertices come first
    if (cell.front() >= ctx.offset || cell.back() < ctx.offset) return false;
  }
  return true;
}

/// {P ∩ V(side)} with empty intersections dropped, in the side's own labels.
inline Partition restriction(const JointContext& ctx, const Partition& p, Side side) {
  detail::require_joint(ctx, p);
  const int begin = side == Side::G ? 0 : ctx.offset;
  const int end = side == Side::G ? ctx.offset : ctx.union_graph.order();
  std::vector<int> labels;
  labels.reserve(end - begin);
  for (int v = begin; v < end; ++v) labels.push_back(p.cell_of(v));
  return Partition::from_labels(labels);
}

inline bool is_joint_weight_equitable(const JointContext& ctx, const Partition& p,
                                      double tol = kDefaultTolerance) {
  detail::require_joint(ctx, p);
  return is_weight_equitable(ctx.union_graph, ctx.nu, p, tol);
}

/// Checks ||rho(P_G)||^2 / ||rho(P_H)||^2 = ||nu_G||^2 / ||nu_H||^2 on every
/// cell (relative tolerance). Requires a balanced weight-equitable partition.
inline bool ratio_check(const JointContext& ctx, const Partition& p, double tol = kDefaultTolerance) {
  detail::require(is_balanced(ctx, p), ErrorKind::NotBalanced, "joint partition is not balanced");
  detail::require(is_joint_weight_equitable(ctx, p, tol), ErrorKind::NotWeightEquitable,
                  "joint partition is not weight-equitable");
  auto sq = [](const std::vector<double>& x) {
    double s = 0.0;
    for (double t : x) s += t * t;
    return s;
  };
  const double expected = sq(ctx.nu_g) / sq(ctx.nu_h);
  for (const auto& cell : p.cells()) {
    double sg = 0.0, sh = 0.0;
    for (int v : cell) (v < ctx.offset ? sg : sh) += ctx.nu[v] * ctx.nu[v];
    if (std::abs(sg / sh - expected) > tol * std::max(1.0, expected)) return false;
  }
  return true;
}

/// Verifies that X is doubly stochastic, commutes with A ⊕ B and links every
/// vertex to some vertex of the other graph through its support.
inline bool is_fractional_isomorphism(const JointContext& ctx, const Matrix& x, double tol = kDefaultTolerance) {
  const int n = ctx.union_graph.order();
  if (x.rows() != n || x.cols() != n) return false;
  for (int i = 0; i < n; ++i) {
    double row = 0.0, col = 0.0;
    for (int j = 0; j < n; ++j) {
      if (x(i, j) < -kSupportThreshold) return false;
      row += x(i, j);
      col += x(j, i);
    }
    if (std::abs(row - 1.0) > tol || std::abs(col - 1.0) > tol) return false;
  }
  if (max_abs_diff(adjacency_times(ctx.union_graph, x), times_adjacency(x, ctx.union_graph)) > tol) return false;
  for (int v = 0; v < n; ++v) {
    const bool in_g = v < ctx.offset;
    bool linked = false;
    for (int w = in_g ? ctx.offset : 0; w < (in_g ? n : ctx.offset) && !linked; ++w)
      linked = std::abs(x(v, w)) > kSupportThreshold;
    if (!linked) return false;
  }
  return true;
}

/// X = S_bar S_bar^T over the union for a balanced weight-equitable joint
/// partition on whose cells nu is constant. The result is verified with
/// is_fractional_isomorphism before it is returned.
inline Matrix fractional_isomorphism_witness(const JointContext& ctx, const Partition& p,
                                             double tol = kDefaultTolerance) {
  detail::require(is_balanced(ctx, p), ErrorKind::NotBalanced, "joint partition is not balanced");
  detail::require(is_joint_weight_equitable(ctx, p, tol), ErrorKind::NotWeightEquitable,
                  "joint partition is not weight-equitable");
  detail::require(perron_constant_on_cells(ctx.nu, p, tol), ErrorKind::NuNotCellConstant,
                  "Perron weights vary within a cell");
  Matrix x = build_weighted_view(ctx.union_graph, ctx.nu, p).X;
  detail::require(is_fractional_isomorphism(ctx, x, tol), ErrorKind::NotWeightEquitable,
                  "derived matrix failed fractional-isomorphism verification");
  return x;
}

}  // namespace wep
