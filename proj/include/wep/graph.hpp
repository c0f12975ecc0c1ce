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
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wep/error.hpp"

namespace wep {

/// Largest vertex count accepted anywhere in the library (2^16).
inline constexpr int kMaxOrder = 1 << 16;

struct Edge {
  int u;
  int v;
};

/// Simple undirected graph on vertices 0..n-1.
///
/// Vertices are 0-based in the C++ API; every text format and CLI message
/// uses 1-based ids. A Graph is immutable once constructed: neighbor lists
/// are sorted, symmetric and loop-free.
class Graph {
 public:
  Graph() = default;

  /// Empty graph on n vertices.
  explicit Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n)) {
    detail::require(n >= 0 && n <= kMaxOrder, ErrorKind::GraphTooLarge,
                    "vertex count " + std::to_string(n) + " outside [0, 65536]");
  }

  /// Graph with the given undirected edges (0-based endpoints).
  Graph(int n, std::span<const Edge> edges) : Graph(n) {
    for (const Edge& e : edges) {
      if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
        detail::fail(ErrorKind::VertexOutOfRange,
                     "edge {" + std::to_string(e.u + 1) + "," +
                         std::to_string(e.v + 1) + "} on " +
                         std::to_string(n) + " vertices");
      if (e.u == e.v)
        detail::fail(ErrorKind::SelfLoop,
                     "self-loop at vertex " + std::to_string(e.u + 1));
      adj_[e.u].push_back(e.v);
      adj_[e.v].push_back(e.u);
    }
    for (int u = 0; u < n_; ++u) {
      auto& list = adj_[u];
      std::sort(list.begin(), list.end());
      auto dup = std::adjacent_find(list.begin(), list.end());
      if (dup != list.end())
        detail::fail(ErrorKind::DuplicateEdge,
                     "edge {" + std::to_string(u + 1) + "," +
                         std::to_string(*dup + 1) + "} listed twice");
      m_ += list.size();
    }
    m_ /= 2;
  }

  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  int order() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return m_; }

  std::span<const int> neighbors(int u) const { return adj_[u]; }
  int degree(int u) const { return static_cast<int>(adj_[u].size()); }

  bool adjacent(int u, int v) const {
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
  }

  /// Edges with u < v, ordered lexicographically.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
      for (int v : adj_[u])
        if (u < v) out.push_back({u, v});
    return out;
  }

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && adj_ == other.adj_;
  }

 private:
  int n_ = 0;
  std::vector<std::vector<int>> adj_;
  std::size_t m_ = 0;
};

/// Connected components, each sorted, ordered by smallest member.
inline std::vector<std::vector<int>> connected_components(const Graph& g) {
  const int n = g.order();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> out;
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    comp[s] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      out[id].push_back(u);
      for (int v : g.neighbors(u)) {
        if (comp[v] < 0) {
          comp[v] = id;
          stack.push_back(v);
        }
      }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

/// True iff every vertex is reachable from vertex 0. The empty graph counts
/// as disconnected; K1 is connected.
inline bool is_connected(const Graph& g) {
  if (g.order() == 0) return false;
  return connected_components(g).size() == 1;
}

inline Graph complement(const Graph& g) {
  const int n = g.order();
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) edges.push_back({u, v});
  return Graph(n, edges);
}

struct DisjointUnion {
  Graph graph;
  int offset;  // vertex v of the second graph becomes v + offset
};

inline DisjointUnion disjoint_union(const Graph& g, const Graph& h) {
  std::vector<Edge> edges = g.edges();
  const int offset = g.order();
  for (const Edge& e : h.edges()) edges.push_back({e.u + offset, e.v + offset});
  return {Graph(g.order() + h.order(), edges), offset};
}

/// Subgraph induced by `vertices`; vertex vertices[i] becomes i.
inline Graph induced_subgraph(const Graph& g, std::span<const int> vertices) {
  detail::require(!vertices.empty(), ErrorKind::EmptySet,
                  "induced subgraph of an empty vertex set");
  std::vector<int> index(g.order(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const int v = vertices[i];
    detail::require(v >= 0 && v < g.order(), ErrorKind::VertexOutOfRange,
                    "vertex " + std::to_string(v + 1) + " not in graph");
    detail::require(index[v] < 0, ErrorKind::Overlap,
                    "vertex " + std::to_string(v + 1) + " listed twice");
    index[v] = static_cast<int>(i);
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (int w : g.neighbors(vertices[i]))
      if (index[w] > static_cast<int>(i)) edges.push_back({static_cast<int>(i), index[w]});
  return Graph(static_cast<int>(vertices.size()), edges);
}

// Small named graphs used throughout tests, docs and the CLI.
namespace graphs {

inline Graph complete(int n) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.push_back({u, v});
  return Graph(n, e);
}

inline Graph path(int n) {
  std::vector<Edge> e;
  for (int u = 0; u + 1 < n; ++u) e.push_back({u, u + 1});
  return Graph(n, e);
}

inline Graph cycle(int n) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u) e.push_back({u, (u + 1) % n});
  return Graph(n, e);
}

/// K_{1,k}: vertex 0 is the center.
inline Graph star(int leaves) {
  std::vector<Edge> e;
  for (int v = 1; v <= leaves; ++v) e.push_back({0, v});
  return Graph(leaves + 1, e);
}

}  // namespace graphs
}  // namespace wep
