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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wep/equitability.hpp"
#include "wep/error.hpp"
#include "wep/graph.hpp"
#include "wep/partition.hpp"
#include "wep/permutation.hpp"
#include "wep/spectral.hpp"

// Brute-force ground truth at desk scale. Nothing here is meant to scale;
// these routines certify the fast paths elsewhere in the library.

namespace wep {

struct EnumerationBudget {
  int max_partition_n = 12;
  int max_automorphism_n = 8;
  int max_involution_n = 12;
  std::uint64_t max_count = 50'000'000;
};

/// Bell numbers B(0..25) fit in 64 bits.
inline std::uint64_t bell_number(int n) {
  std::vector<std::uint64_t> row{1};
  for (int i = 0; i < n; ++i) {
    std::vector<std::uint64_t> next{row.back()};
    for (std::uint64_t x : row) next.push_back(next.back() + x);
    row.swap(next);
  }
  return row.front();
}

/// Visits every partition refining `coarse` exactly once, in canonical form.
/// Restricted-growth enumeration where vertex v may only join blocks lying
/// inside v's cell of `coarse`. fn returns false to stop early.
template <typename Fn>
void for_each_refinement(const Partition& coarse, Fn&& fn) {
  const int n = coarse.size();
  if (n == 0) return;
  std::vector<int> labels(n, 0);
  std::vector<int> block_cell;  // cell of `coarse` containing each open block
  bool stop = false;
  auto rec = [&](auto&& self, int v) -> void {
    if (stop) return;
    if (v == n) {
      if (!fn(Partition::from_labels(labels))) stop = true;
      return;
    }
    const int cell = coarse.cell_of(v);
    const int blocks = static_cast<int>(block_cell.size());
    for (int b = 0; b < blocks && !stop; ++b) {
      if (block_cell[b] != cell) continue;
      labels[v] = b;
      self(self, v + 1);
    }
    if (stop) return;
    labels[v] = blocks;
    block_cell.push_back(cell);
    self(self, v + 1);
    block_cell.pop_back();
  };
  rec(rec, 0);
}

template <typename Fn>
void for_each_partition(int n, const EnumerationBudget& budget, Fn&& fn) {
  if (n > budget.max_partition_n || bell_number(n) > budget.max_count)
    detail::fail(ErrorKind::TooLarge, "partition enumeration on " + std::to_string(n) + " points exceeds budget");
  for_each_refinement(Partition::trivial(n), std::forward<Fn>(fn));
}

/// All Bell(n) set partitions of {0..n-1}.
inline std::vector<Partition> all_partitions(int n, const EnumerationBudget& budget = {}) {
  std::vector<Partition> out;
  for_each_partition(n, budget, [&](Partition p) {
    out.push_back(std::move(p));
    return true;
  });
  return out;
}

/// Every weight-equitable partition of a connected graph.
inline std::vector<Partition> enumerate_weight_equitable(const Graph& g, double tol = kDefaultTolerance,
                                                         const EnumerationBudget& budget = {}) {
  detail::require(is_connected(g), ErrorKind::NotConnected, "weight-equitability needs a connected graph");
  const PerronData pd = perron(g);
  std::vector<Partition> out;
  for_each_partition(g.order(), budget, [&](Partition p) {
    if (is_weight_equitable(g, pd.nu, p, tol)) out.push_back(std::move(p));
    return true;
  });
  return out;
}

/// Every equitable partition (no connectivity requirement).
inline std::vector<Partition> enumerate_equitable(const Graph& g, const EnumerationBudget& budget = {}) {
  std::vector<Partition> out;
  for_each_partition(g.order(), budget, [&](Partition p) {
    if (is_equitable(g, p)) out.push_back(std::move(p));
    return true;
  });
  return out;
}

namespace detail {

// Backtracking over partial maps u -> image[u]; candidates must match degree
// and stable color, and preserve adjacency to every mapped vertex.
template <typename Fn>
void search_automorphisms(const Graph& g, bool involutions_only, Fn&& fn) {
  const int n = g.order();
  const std::vector<int> color = stable_coloring(g);
  std::vector<int> image(n, -1), preimage(n, -1);
  bool stop = false;
  auto consistent = [&](int u, int w) {
    if (color[u] != color[w]) return false;
    for (int x = 0; x < n; ++x) {
      if (image[x] < 0) continue;
      if (g.adjacent(u, x) != g.adjacent(w, image[x])) return false;
    }
    return true;
  };
  auto rec = [&](auto&& self, int u) -> void {
    if (stop) return;
    while (u < n && image[u] >= 0) ++u;
    if (u == n) {
      if (!fn(Permutation(image))) stop = true;
      return;
    }
    for (int w = 0; w < n && !stop; ++w) {
      if (preimage[w] >= 0) continue;
      if (involutions_only) {
        // pair u with an unmapped w != u, both directions at once
        if (w == u || image[w] >= 0) continue;
        if (!consistent(u, w)) continue;
        image[u] = w;
        preimage[w] = u;
        if (consistent(w, u)) {
          image[w] = u;
          preimage[u] = w;
          self(self, u + 1);
          image[w] = -1;
          preimage[u] = -1;
        }
        image[u] = -1;
        preimage[w] = -1;
      } else {
        if (!consistent(u, w)) continue;
        image[u] = w;
        preimage[w] = u;
        self(self, u + 1);
        image[u] = -1;
        preimage[w] = -1;
      }
    }
  };
  rec(rec, 0);
}

}  // namespace detail

/// The full automorphism group by exhaustive search.
inline std::vector<Permutation> all_automorphisms(const Graph& g, const EnumerationBudget& budget = {}) {
  if (g.order() > budget.max_automorphism_n)
    detail::fail(ErrorKind::TooLarge, "automorphism enumeration capped at n = " +
                                          std::to_string(budget.max_automorphism_n));
  std::vector<Permutation> out;
  detail::search_automorphisms(g, false, [&](Permutation p) {
    out.push_back(std::move(p));
    return true;
  });
  return out;
}

/// Some fixed-point-free involutory automorphism, found by pairing vertices.
inline std::optional<Permutation> find_fixed_point_free_involution(const Graph& g,
                                                                   const EnumerationBudget& budget = {}) {
  detail::require(g.order() % 2 == 0, ErrorKind::OddOrder, "odd vertex count");
  if (g.order() > budget.max_involution_n)
    detail::fail(ErrorKind::TooLarge, "involution search capped at n = " + std::to_string(budget.max_involution_n));
  std::optional<Permutation> found;
  detail::search_automorphisms(g, true, [&](Permutation p) {
    found = std::move(p);
    return false;
  });
  return found;
}

/// Join of all weight-equitable partitions refining p: the unique maximal
/// weight-equitable refinement.
inline Partition max_we_refinement(const Graph& g, const Partition& p, double tol = kDefaultTolerance,
                                   const EnumerationBudget& budget = {}) {
  detail::require(p.size() == g.order(), ErrorKind::DimensionMismatch, "partition does not match graph");
  detail::require(is_connected(g), ErrorKind::NotConnected, "weight-equitability needs a connected graph");
  if (g.order() > budget.max_partition_n)
    detail::fail(ErrorKind::TooLarge, "refinement enumeration capped at n = " + std::to_string(budget.max_partition_n));
  const PerronData pd = perron(g);
  Partition best = Partition::discrete(g.order());
  for_each_refinement(p, [&](const Partition& q) {
    if (is_weight_equitable(g, pd.nu, q, tol)) best = join(best, q);
    return true;
  });
  return best;
}

}  // namespace wep
