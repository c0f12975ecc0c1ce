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
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wep/error.hpp"
#include "wep/graph.hpp"
#include "wep/partition.hpp"
#include "wep/permutation.hpp"
#include "wep/rng.hpp"

namespace wep {

struct CotreeNode {
  int vertex = -1;  // graph vertex for leaves, -1 for internal nodes
  int label = -1;   // 0 (disjoint union) or 1 (join) for internal nodes
  std::vector<int> children;

  // Filled in by Cotree.
  int parent = -1;
  int depth = 0;
  int code = -1;   // canonical subtree code
  int orbit = -1;  // j-number: orbit of the node under Aut(T)

  bool is_leaf() const noexcept { return vertex >= 0; }
};

/// Rooted 0/1-labeled tree of a cograph: u ~ v iff the least common ancestor
/// of leaves u and v has label 1.
///
/// Construction validates the shape (labels alternate along every root-leaf
/// path, internal nodes have at least two children, leaves biject with
/// 0..n-1) and annotates every node:
///
///  - code: bottom-up canonical code. Leaves share code 0; an internal node
///    is keyed by (label, sorted child codes), keys of one height are ranked
///    in sorted order. Two subtrees of the tree are isomorphic as labeled
///    rooted trees iff their codes are equal, and codes do not depend on
///    the vertex labeling.
///  - orbit: top-down j-number. The root is alone in its orbit; two nodes
///    share an orbit iff their parents do and their codes are equal.
///  - children are reordered by descending code (stable), so siblings with
///    the same orbit are contiguous.
class Cotree {
 public:
  Cotree(std::vector<CotreeNode> nodes, int root) : nodes_(std::move(nodes)), root_(root) {
    validate_and_link();
    assign_codes();
    assign_orbits();
  }

  int root() const noexcept { return root_; }
  int node_count() const noexcept { return static_cast<int>(nodes_.size()); }
  int leaf_count() const noexcept { return static_cast<int>(leaf_of_.size()); }
  const CotreeNode& node(int id) const { return nodes_[id]; }
  const std::vector<CotreeNode>& nodes() const noexcept { return nodes_; }
  /// Node id of the leaf carrying graph vertex v.
  int leaf_of(int vertex) const { return leaf_of_[vertex]; }
  /// Nodes in breadth-first order from the root.
  const std::vector<int>& bfs_order() const noexcept { return bfs_; }

 private:
  void validate_and_link() {
    const int count = node_count();
    auto bad = [](const std::string& what) { detail::fail(ErrorKind::InvalidCotree, what); };
    if (root_ < 0 || root_ >= count) bad("root out of range");
    int leaves = 0;
    for (const auto& nd : nodes_) leaves += nd.is_leaf() ? 1 : 0;
    leaf_of_.assign(leaves, -1);

    std::vector<char> seen(count, 0);
    bfs_.clear();
    bfs_.push_back(root_);
    seen[root_] = 1;
    nodes_[root_].parent = -1;
    nodes_[root_].depth = 0;
    for (std::size_t k = 0; k < bfs_.size(); ++k) {
      const int id = bfs_[k];
      CotreeNode& nd = nodes_[id];
      if (nd.is_leaf()) {
        if (!nd.children.empty()) bad("leaf with children");
        if (nd.vertex >= leaves || leaf_of_[nd.vertex] >= 0) bad("leaf vertices are not a bijection");
        leaf_of_[nd.vertex] = id;
        continue;
      }
      if (nd.label != 0 && nd.label != 1) bad("internal node without 0/1 label");
      if (nd.children.size() < 2) bad("internal node with fewer than two children");
      for (int c : nd.children) {
        if (c < 0 || c >= count || seen[c]) bad("node structure is not a tree");
        seen[c] = 1;
        CotreeNode& child = nodes_[c];
        if (!child.is_leaf() && child.label == nd.label) bad("labels do not alternate");
        child.parent = id;
        child.depth = nd.depth + 1;
        bfs_.push_back(c);
      }
    }
    if (static_cast<int>(bfs_.size()) != count) bad("unreachable nodes");
  }

  void assign_codes() {
    const int count = node_count();
    std::vector<int> height(count, 0);
    int max_height = 0;
    for (auto it = bfs_.rbegin(); it != bfs_.rend(); ++it) {
      CotreeNode& nd = nodes_[*it];
      if (nd.is_leaf()) continue;
      int h = 0;
      for (int c : nd.children) h = std::max(h, height[c]);
      height[*it] = h + 1;
      max_height = std::max(max_height, h + 1);
    }
    std::vector<std::vector<int>> level(max_height + 1);
    for (int id : bfs_) level[height[id]].push_back(id);

    for (int id : level[0]) nodes_[id].code = 0;
    int next_code = 1;
    std::vector<std::vector<int>> key(count);
    for (int h = 1; h <= max_height; ++h) {
      auto& ids = level[h];
      for (int id : ids) {
        const CotreeNode& nd = nodes_[id];
        auto& k = key[id];
        k.reserve(nd.children.size() + 1);
        k.push_back(nd.label);
        for (int c : nd.children) k.push_back(nodes_[c].code);
        std::sort(k.begin() + 1, k.end());
      }
      std::sort(ids.begin(), ids.end(), [&](int a, int b) { return key[a] < key[b]; });
      for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i > 0 && key[ids[i]] != key[ids[i - 1]]) ++next_code;
        nodes_[ids[i]].code = next_code;
      }
      ++next_code;
      for (int id : ids) std::vector<int>().swap(key[id]);
    }
    for (auto& nd : nodes_)
      std::stable_sort(nd.children.begin(), nd.children.end(),
                       [&](int a, int b) { return nodes_[a].code > nodes_[b].code; });
    // Children were reordered; keep the breadth-first order consistent.
    bfs_.clear();
    bfs_.push_back(root_);
    for (std::size_t k = 0; k < bfs_.size(); ++k)
      for (int c : nodes_[bfs_[k]].children) bfs_.push_back(c);
  }

  void assign_orbits() {
    std::map<std::pair<int, int>, int> ids;
    nodes_[root_].orbit = 0;
    int next = 1;
    for (int id : bfs_) {
      for (int c : nodes_[id].children) {
        auto [it, inserted] = ids.emplace(std::make_pair(nodes_[id].orbit, nodes_[c].code), next);
        if (inserted) ++next;
        nodes_[c].orbit = it->second;
      }
    }
  }

  std::vector<CotreeNode> nodes_;
  int root_;
  std::vector<int> leaf_of_;
  std::vector<int> bfs_;
};

/// Canonical cotree by union/complement decomposition: a single vertex is a
/// leaf, a disconnected graph becomes a 0-node over its components, a graph
/// with disconnected complement a 1-node over its co-components. Throws
/// NotCograph when both the graph and its complement are connected.
inline Cotree build_cotree(const Graph& g) {
  const int n = g.order();
  detail::require(n >= 1, ErrorKind::EmptySet, "cotree of the empty graph");
  std::vector<CotreeNode> nodes;
  std::vector<int> mark(n, 0);  // stamp per vertex for membership / adjacency
  int stamp = 0;

  struct Work {
    int node;
    std::vector<int> vertices;
  };
  std::vector<Work> work;
  std::vector<int> all(n);
  for (int v = 0; v < n; ++v) all[v] = v;
  nodes.emplace_back();
  work.push_back({0, std::move(all)});

  std::vector<int> in_set(n, 0);
  int set_stamp = 0;

  while (!work.empty()) {
    Work w = std::move(work.back());
    work.pop_back();
    if (w.vertices.size() == 1) {
      nodes[w.node].vertex = w.vertices[0];
      continue;
    }
    ++set_stamp;
    for (int v : w.vertices) in_set[v] = set_stamp;

    // Components of G[S].
    std::vector<std::vector<int>> parts;
    {
      ++stamp;
      std::vector<int> stack;
      for (int s : w.vertices) {
        if (mark[s] == stamp) continue;
        parts.emplace_back();
        mark[s] = stamp;
        stack.push_back(s);
        while (!stack.empty()) {
          const int u = stack.back();
          stack.pop_back();
          parts.back().push_back(u);
          for (int v : g.neighbors(u))
            if (in_set[v] == set_stamp && mark[v] != stamp) {
              mark[v] = stamp;
              stack.push_back(v);
            }
        }
      }
    }
    int label = 0;
    if (parts.size() == 1) {
      // Components of the complement of G[S].
      parts.clear();
      std::vector<int> unvisited = w.vertices;
      std::vector<int> queue;
      while (!unvisited.empty()) {
        parts.emplace_back();
        queue.assign(1, unvisited.back());
        unvisited.pop_back();
        for (std::size_t q = 0; q < queue.size(); ++q) {
          const int u = queue[q];
          parts.back().push_back(u);
          ++stamp;
          for (int v : g.neighbors(u)) mark[v] = stamp;
          std::vector<int> keep;
          for (int v : unvisited) {
            if (mark[v] == stamp) keep.push_back(v);
            else queue.push_back(v);
          }
          unvisited.swap(keep);
        }
      }
      if (parts.size() == 1) {
        detail::fail(ErrorKind::NotCograph,
                     "induced subgraph on " + std::to_string(w.vertices.size()) +
                         " vertices is connected with connected complement (contains an induced P4)");
      }
      label = 1;
    }
    nodes[w.node].label = label;
    for (auto& part : parts) {
      std::sort(part.begin(), part.end());
      const int child = static_cast<int>(nodes.size());
      nodes.emplace_back();
      nodes[w.node].children.push_back(child);
      work.push_back({child, std::move(part)});
    }
  }
  return Cotree(std::move(nodes), 0);
}

/// The cograph described by a cotree.
inline Graph reconstruct(const Cotree& t) {
  std::vector<Edge> edges;
  std::vector<std::vector<int>> leaves(t.node_count());
  const auto& order = t.bfs_order();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const CotreeNode& nd = t.node(*it);
    auto& mine = leaves[*it];
    if (nd.is_leaf()) {
      mine.push_back(nd.vertex);
      continue;
    }
    for (int c : nd.children) {
      auto& theirs = leaves[c];
      if (nd.label == 1)
        for (int a : mine)
          for (int b : theirs) edges.push_back({a, b});
      mine.insert(mine.end(), theirs.begin(), theirs.end());
      std::vector<int>().swap(theirs);
    }
  }
  return Graph(t.leaf_count(), edges);
}

/// Parenthesized canonical term, e.g. "1(0(· ·) ·)"; "·" marks a leaf.
/// Children are listed by descending canonical code.
inline std::string cotree_term(const Cotree& t, int id = -1) {
  if (id < 0) id = t.root();
  const CotreeNode& nd = t.node(id);
  if (nd.is_leaf()) return "·";
  std::string out = std::to_string(nd.label) + "(";
  for (std::size_t i = 0; i < nd.children.size(); ++i) {
    if (i) out += ' ';
    out += cotree_term(t, nd.children[i]);
  }
  return out + ")";
}

namespace detail {

// Calls fn(first, last) for each maximal run of children sharing a j-number.
template <typename Fn>
bool for_each_orbit_class(const Cotree& t, int id, Fn&& fn) {
  const auto& ch = t.node(id).children;
  std::size_t i = 0;
  while (i < ch.size()) {
    std::size_t j = i + 1;
    while (j < ch.size() && t.node(ch[j]).orbit == t.node(ch[i]).orbit) ++j;
    if (!fn(i, j)) return false;
    i = j;
  }
  return true;
}

// Writes the leafwise swap of two isomorphic subtrees into img. Children of
// equal-code nodes carry equal code sequences, so matching by index is an
// isomorphism.
inline void swap_subtrees(const Cotree& t, int a, int b, std::vector<int>& img) {
  std::vector<std::pair<int, int>> stack{{a, b}};
  while (!stack.empty()) {
    auto [x, y] = stack.back();
    stack.pop_back();
    const CotreeNode& nx = t.node(x);
    const CotreeNode& ny = t.node(y);
    if (nx.is_leaf()) {
      img[nx.vertex] = ny.vertex;
      img[ny.vertex] = nx.vertex;
      continue;
    }
    for (std::size_t i = 0; i < nx.children.size(); ++i) stack.push_back({nx.children[i], ny.children[i]});
  }
}

inline bool nice_search(const Cotree& t, int id, std::vector<int>* img) {
  const auto& ch = t.node(id).children;
  return for_each_orbit_class(t, id, [&](std::size_t first, std::size_t last) {
    const std::size_t k = last - first;
    if (img)
      for (std::size_t i = first; i + 1 < last; i += 2) swap_subtrees(t, ch[i], ch[i + 1], *img);
    if (k % 2 == 0) return true;
    const int leftover = ch[last - 1];
    if (t.node(leftover).is_leaf()) return false;
    return nice_search(t, leftover, img);
  });
}

}  // namespace detail

/// Decides whether the cotree admits an automorphism that is a
/// fixed-point-free involution on the leaves.
///
/// For each class of children sharing a j-number: an even class is swapped
/// pairwise; an odd class leaves one subtree unpaired, which fails if it is
/// a leaf and otherwise must itself pass the test. O(n^2) in the worst case.
inline bool has_nice_automorphism(const Cotree& t) {
  if (t.node(t.root()).is_leaf()) return false;
  return detail::nice_search(t, t.root(), nullptr);
}

/// The fixed-point-free involution found by has_nice_automorphism, as a
/// permutation of graph vertices. Throws NoSuchAutomorphism otherwise.
inline Permutation nice_automorphism(const Cotree& t) {
  std::vector<int> img(t.leaf_count(), -1);
  if (t.node(t.root()).is_leaf() || !detail::nice_search(t, t.root(), &img))
    detail::fail(ErrorKind::NoSuchAutomorphism, "no fixed-point-free involution on the leaves");
  return Permutation(std::move(img));
}

/// Cells {v, gamma(v)} of the nice automorphism of G's cotree; these form an
/// equitable partition with n/2 cells of size 2. Empty when none exists.
inline std::optional<Partition> two_homogeneous_partition(const Graph& g) {
  detail::require(g.order() % 2 == 0, ErrorKind::OddOrder,
                  "2-homogeneous partitions need an even vertex count");
  const Cotree t = build_cotree(g);
  if (!has_nice_automorphism(t)) return std::nullopt;
  return involution_to_partition(nice_automorphism(t));
}

/// Generalization to cells of size c: every j-number class of children is
/// cut into groups of c identical subtrees; a remainder forces recursion
/// into one of the leftover (identical) subtrees, and fails on leaves.
/// A true answer certifies a c-homogeneous equitable partition on whose
/// cells a subgroup of Aut(G) acts as Sym_c. False negatives for plain
/// equitability are possible (C4 with c = 4).
inline bool c_homogeneous_search(const Cotree& t, int c) {
  detail::require(c >= 2, ErrorKind::BadC, "cell size c must be at least 2");
  if (t.node(t.root()).is_leaf()) return false;
  auto search = [&t, c](auto&& self, int id) -> bool {
    const auto& ch = t.node(id).children;
    return detail::for_each_orbit_class(t, id, [&](std::size_t first, std::size_t last) {
      if ((last - first) % static_cast<std::size_t>(c) == 0) return true;
      const int leftover = ch[last - 1];
      if (t.node(leftover).is_leaf()) return false;
      return self(self, leftover);
    });
  };
  return search(search, t.root());
}

/// Generators of Aut(G) for the cograph of t: for every node and every run
/// t_1..t_k of equal-code children, the leafwise swap of t_i and t_{i+1}.
inline std::vector<Permutation> aut_generators(const Cotree& t) {
  std::vector<Permutation> gens;
  const int n = t.leaf_count();
  for (int id : t.bfs_order()) {
    const auto& ch = t.node(id).children;
    for (std::size_t i = 0; i + 1 < ch.size(); ++i) {
      if (t.node(ch[i]).code != t.node(ch[i + 1]).code) continue;
      std::vector<int> img(n);
      for (int v = 0; v < n; ++v) img[v] = v;
      detail::swap_subtrees(t, ch[i], ch[i + 1], img);
      gens.emplace_back(std::move(img));
    }
  }
  return gens;
}

/// Random connected cograph on n vertices, deterministic under seed.
///
/// Each node with s >= 2 leaves gets k children, k uniform in
/// {2, ..., min(4, s)}, with sizes from a uniform random composition of s
/// into k parts; labels alternate from a 1-labeled root. Leaves receive a
/// random vertex numbering. No uniformity over isomorphism classes.
inline Cotree random_cotree(int n, std::uint64_t seed) {
  detail::require(n >= 1 && n <= kMaxOrder, ErrorKind::BadN, "random cotree needs 1 <= n <= 65536");
  Rng rng(seed);
  std::vector<CotreeNode> nodes(1);
  std::vector<std::pair<int, int>> work{{0, n}};  // (node, leaves)
  nodes[0].label = 1;
  std::vector<int> leaves;
  while (!work.empty()) {
    auto [id, size] = work.back();
    work.pop_back();
    if (size == 1) {
      leaves.push_back(id);
      continue;
    }
    const int k = static_cast<int>(rng.between(2, std::min(4, size)));
    std::vector<int> cuts;
    while (static_cast<int>(cuts.size()) < k - 1) {
      const int c = static_cast<int>(rng.between(1, size - 1));
      if (std::find(cuts.begin(), cuts.end(), c) == cuts.end()) cuts.push_back(c);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.push_back(size);
    int prev = 0;
    const int child_label = 1 - nodes[id].label;
    for (int cut : cuts) {
      const int child = static_cast<int>(nodes.size());
      nodes.emplace_back();
      nodes[child].label = child_label;
      nodes[id].children.push_back(child);
      work.push_back({child, cut - prev});
      prev = cut;
    }
  }
  std::vector<int> perm(n);
  for (int v = 0; v < n; ++v) perm[v] = v;
  for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.below(static_cast<std::uint64_t>(i) + 1)]);
  for (int i = 0; i < n; ++i) {
    nodes[leaves[i]].vertex = perm[i];
    nodes[leaves[i]].label = -1;
  }
  return Cotree(std::move(nodes), 0);
}

inline constexpr int kMaxCographEnumeration = 12;

/// One representative per isomorphism class of connected cographs on n
/// vertices, from canonical alternating cotrees with a 1-labeled root whose
/// child multisets are generated in nondecreasing shape order.
inline std::vector<Graph> enumerate_connected_cographs(int n, int max_n = kMaxCographEnumeration) {
  detail::require(n >= 1, ErrorKind::BadN, "n must be positive");
  if (n > max_n) detail::fail(ErrorKind::TooLarge, "cograph enumeration capped at n = " + std::to_string(max_n));
  if (n == 1) return {Graph(1)};

  struct Shape {
    int size;
    int label;
    std::vector<int> children;
  };
  std::vector<Shape> shapes{{1, -1, {}}};  // shape 0 is the leaf
  // by_label[l][s]: shapes with root label l and s leaves
  std::vector<std::vector<std::vector<int>>> by_label(2, std::vector<std::vector<int>>(n + 1));

  for (int s = 2; s <= n; ++s) {
    for (int label : {0, 1}) {
      if (s == n && label == 0) continue;
      std::vector<int> types{0};
      for (int sz = 2; sz < s; ++sz)
        for (int id : by_label[1 - label][sz]) types.push_back(id);
      std::vector<int> chosen;
      auto extend = [&](auto&& self, std::size_t from, int remaining) -> void {
        if (remaining == 0) {
          if (chosen.size() >= 2) {
            by_label[label][s].push_back(static_cast<int>(shapes.size()));
            shapes.push_back({s, label, chosen});
          }
          return;
        }
        for (std::size_t t = from; t < types.size(); ++t) {
          const int sz = shapes[types[t]].size;
          if (sz > remaining) continue;
          if (sz == s) continue;
          chosen.push_back(types[t]);
          self(self, t, remaining - sz);
          chosen.pop_back();
        }
      };
      extend(extend, 0, s);
    }
  }

  std::vector<Graph> out;
  for (int id : by_label[1][n]) {
    std::vector<Edge> edges;
    int next_vertex = 0;
    auto emit = [&](auto&& self, int sid) -> std::vector<int> {
      const Shape& sh = shapes[sid];
      if (sh.size == 1) return {next_vertex++};
      std::vector<int> mine;
      for (int c : sh.children) {
        std::vector<int> theirs = self(self, c);
        if (sh.label == 1)
          for (int a : mine)
            for (int b : theirs) edges.push_back({a, b});
        mine.insert(mine.end(), theirs.begin(), theirs.end());
      }
      return mine;
    };
    emit(emit, id);
    out.emplace_back(n, edges);
  }
  return out;
}

}  // namespace wep
