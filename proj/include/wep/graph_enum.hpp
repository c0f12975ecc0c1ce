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
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "wep/equitability.hpp"
#include "wep/error.hpp"
#include "wep/graph.hpp"

namespace wep {

inline constexpr int kMaxGraphEnumeration = 9;

/// Canonical form for n <= 11: the lexicographically largest upper-triangle
/// bit string over all relabelings that list stable color classes in color
/// order. Isomorphic graphs get equal forms.
inline std::uint64_t canonical_form(const Graph& g) {
  const int n = g.order();
  detail::require(n <= 11, ErrorKind::TooLarge, "canonical_form supports n <= 11");
  const std::vector<int> color = stable_coloring(g);
  std::vector<int> order(n);
  for (int v = 0; v < n; ++v) order[v] = v;
  std::sort(order.begin(), order.end(), [&](int a, int b) { return color[a] != color[b] ? color[a] < color[b] : a < b; });

  // Class boundaries in `order`; permute within each class independently.
  std::vector<std::pair<int, int>> ranges;
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && color[order[j]] == color[order[i]]) ++j;
    ranges.push_back({i, j});
    i = j;
  }
  std::uint64_t best = 0;
  bool have = false;
  auto encode = [&] {
    std::uint64_t code = 0;
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i) code = (code << 1) | (g.adjacent(order[i], order[j]) ? 1u : 0u);
    return code;
  };
  auto rec = [&](auto&& self, std::size_t r) -> void {
    if (r == ranges.size()) {
      const std::uint64_t code = encode();
      if (!have || code > best) {
        best = code;
        have = true;
      }
      return;
    }
    auto first = order.begin() + ranges[r].first;
    auto last = order.begin() + ranges[r].second;
    std::sort(first, last);
    do {
      self(self, r + 1);
    } while (std::next_permutation(first, last));
  };
  rec(rec, 0);
  return best;
}

/// One graph per isomorphism class on n vertices (n <= 9), grown by adding
/// a vertex with every possible neighborhood to each class on n - 1
/// vertices and deduplicating by canonical_form.
inline std::vector<Graph> enumerate_graphs(int n) {
  detail::require(n >= 1, ErrorKind::BadN, "n must be positive");
  if (n > kMaxGraphEnumeration)
    detail::fail(ErrorKind::TooLarge, "graph enumeration capped at n = " + std::to_string(kMaxGraphEnumeration));
  std::vector<Graph> level{Graph(1)};
  for (int k = 2; k <= n; ++k) {
    std::vector<Graph> next;
    std::set<std::uint64_t> seen;
    for (const Graph& g : level) {
      const std::vector<Edge> base = g.edges();
      for (std::uint32_t mask = 0; mask < (1u << (k - 1)); ++mask) {
        std::vector<Edge> edges = base;
        for (int v = 0; v < k - 1; ++v)
          if (mask & (1u << v)) edges.push_back({v, k - 1});
        Graph h(k, edges);
        if (seen.insert(canonical_form(h)).second) next.push_back(std::move(h));
      }
    }
    level.swap(next);
  }
  return level;
}

inline std::vector<Graph> enumerate_connected_graphs(int n) {
  std::vector<Graph> out;
  for (Graph& g : enumerate_graphs(n))
    if (is_connected(g)) out.push_back(std::move(g));
  return out;
}

}  // namespace wep
