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
#include <cctype>
#include <map>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wep/error.hpp"
#include "wep/permutation.hpp"
#include "wep/union_find.hpp"

namespace wep {

/// Set partition of {0..n-1} in canonical form: cells are numbered in order
/// of their smallest member and each cell lists its members ascending.
/// Two partitions are equal iff their assignment arrays are equal.
class Partition {
 public:
  Partition() = default;

  /// Canonicalizes an arbitrary labeling: u and v share a cell iff
  /// labels[u] == labels[v].
  template <typename Label>
  static Partition from_labels(std::span<const Label> labels) {
    Partition p;
    const int n = static_cast<int>(labels.size());
    p.assignment_.assign(n, -1);
    std::map<Label, int> index;
    for (int v = 0; v < n; ++v) {
      auto [it, inserted] = index.emplace(labels[v], static_cast<int>(p.cells_.size()));
      if (inserted) p.cells_.emplace_back();
      p.assignment_[v] = it->second;
      p.cells_[it->second].push_back(v);
    }
    return p;
  }

  static Partition from_labels(const std::vector<int>& labels) {
    const int n = static_cast<int>(labels.size());
    const bool dense = std::all_of(labels.begin(), labels.end(),
                                   [n](int x) { return x >= 0 && x < 4 * n + 4; });
    if (!dense) return from_labels(std::span<const int>(labels));
    Partition p;
    p.assignment_.assign(n, -1);
    std::vector<int> index(4 * static_cast<std::size_t>(n) + 4, -1);
    for (int v = 0; v < n; ++v) {
      int& slot = index[labels[v]];
      if (slot < 0) {
        slot = static_cast<int>(p.cells_.size());
        p.cells_.emplace_back();
      }
      p.assignment_[v] = slot;
      p.cells_[slot].push_back(v);
    }
    return p;
  }

  static Partition discrete(int n) {
    std::vector<int> labels(n);
    for (int v = 0; v < n; ++v) labels[v] = v;
    return from_labels(labels);
  }

  /// The single-cell partition {V}.
  static Partition trivial(int n) { return from_labels(std::vector<int>(n, 0)); }

  int size() const noexcept { return static_cast<int>(assignment_.size()); }
  int cell_count() const noexcept { return static_cast<int>(cells_.size()); }
  int cell_of(int v) const { return assignment_[v]; }
  const std::vector<int>& cell(int i) const { return cells_[i]; }
  const std::vector<std::vector<int>>& cells() const noexcept { return cells_; }
  std::span<const int> assignment() const noexcept { return assignment_; }

  bool is_discrete() const noexcept { return cell_count() == size(); }

  bool operator==(const Partition& other) const { return assignment_ == other.assignment_; }
  bool operator<(const Partition& other) const { return assignment_ < other.assignment_; }

 private:
  std::vector<int> assignment_;
  std::vector<std::vector<int>> cells_;
};

/// Validating constructor from explicit cells over {0..n-1}.
inline Partition make_partition(int n, const std::vector<std::vector<int>>& cells) {
  std::vector<int> labels(n, -1);
  for (std::size_t c = 0; c < cells.size(); ++c) {
    detail::require(!cells[c].empty(), ErrorKind::EmptyCell, "cell " + std::to_string(c + 1) + " is empty");
    for (int v : cells[c]) {
      if (v < 0 || v >= n)
        detail::fail(ErrorKind::VertexOutOfRange,
                     "vertex " + std::to_string(v + 1) + " outside 1.." + std::to_string(n));
      if (labels[v] >= 0)
        detail::fail(ErrorKind::Overlap, "vertex " + std::to_string(v + 1) + " appears in two cells");
      labels[v] = static_cast<int>(c);
    }
  }
  for (int v = 0; v < n; ++v)
    if (labels[v] < 0)
      detail::fail(ErrorKind::Uncovered, "vertex " + std::to_string(v + 1) + " is in no cell");
  return Partition::from_labels(labels);
}

namespace detail {

inline void require_same_ground(const Partition& p, const Partition& q) {
  require(p.size() == q.size(), ErrorKind::GroundSetMismatch,
          "partitions of " + std::to_string(p.size()) + " and " + std::to_string(q.size()) + " points");
}

}  // namespace detail

/// True iff every cell of p lies inside a cell of q (p <= q).
inline bool refines(const Partition& p, const Partition& q) {
  detail::require_same_ground(p, q);
  for (const auto& cell : p.cells()) {
    const int target = q.cell_of(cell.front());
    for (int v : cell)
      if (q.cell_of(v) != target) return false;
  }
  return true;
}

/// Coarsest partition refined by both: components of the share-a-cell graph.
inline Partition join(const Partition& p, const Partition& q) {
  detail::require_same_ground(p, q);
  UnionFind uf(p.size());
  for (const Partition* r : {&p, &q})
    for (const auto& cell : r->cells())
      for (std::size_t i = 1; i < cell.size(); ++i) uf.unite(cell[0], cell[i]);
  std::vector<int> labels(p.size());
  for (int v = 0; v < p.size(); ++v) labels[v] = uf.find(v);
  return Partition::from_labels(labels);
}

/// Join of a nonempty list of partitions over the same ground set.
inline Partition join_all(std::span<const Partition> parts) {
  detail::require(!parts.empty(), ErrorKind::EmptySet, "join of no partitions");
  UnionFind uf(parts.front().size());
  for (const Partition& r : parts) {
    detail::require_same_ground(parts.front(), r);
    for (const auto& cell : r.cells())
      for (std::size_t i = 1; i < cell.size(); ++i) uf.unite(cell[0], cell[i]);
  }
  std::vector<int> labels(parts.front().size());
  for (int v = 0; v < static_cast<int>(labels.size()); ++v) labels[v] = uf.find(v);
  return Partition::from_labels(labels);
}

/// Nonempty pairwise cell intersections.
inline Partition meet(const Partition& p, const Partition& q) {
  detail::require_same_ground(p, q);
  std::vector<std::pair<int, int>> labels(p.size());
  for (int v = 0; v < p.size(); ++v) labels[v] = {p.cell_of(v), q.cell_of(v)};
  return Partition::from_labels(std::span<const std::pair<int, int>>(labels));
}

/// Setwise image {gamma(V_1), ..., gamma(V_m)}, recanonicalized.
inline Partition apply_automorphism(const Partition& p, const Permutation& gamma) {
  detail::require(gamma.size() == p.size(), ErrorKind::NotPermutation,
                  "permutation of degree " + std::to_string(gamma.size()) + " applied to partition of " +
                      std::to_string(p.size()) + " points");
  std::vector<int> labels(p.size());
  for (int v = 0; v < p.size(); ++v) labels[gamma(v)] = p.cell_of(v);
  return Partition::from_labels(labels);
}

/// Orbit pairs {v, gamma(v)} of a fixed-point-free involution.
inline Partition involution_to_partition(const Permutation& gamma) {
  detail::require(gamma.is_involution(), ErrorKind::NotInvolution, format_cycles(gamma) + " is not an involution");
  detail::require(gamma.is_fixed_point_free(), ErrorKind::HasFixedPoint, format_cycles(gamma) + " has a fixed point");
  std::vector<int> labels(gamma.size());
  for (int v = 0; v < gamma.size(); ++v) labels[v] = std::min(v, gamma(v));
  return Partition::from_labels(labels);
}

/// Product of the transpositions (a b) over the cells {a, b} of a
/// 2-homogeneous partition.
inline Permutation partition_to_involution(const Partition& p) {
  std::vector<int> img(p.size());
  for (const auto& cell : p.cells()) {
    detail::require(cell.size() == 2, ErrorKind::NotTwoHomogeneous,
                    "cell of size " + std::to_string(cell.size()));
    img[cell[0]] = cell[1];
    img[cell[1]] = cell[0];
  }
  return Permutation(std::move(img));
}

// Text format: one cell per line, members as space-separated 1-based ids.
// Blank lines are ignored.

inline std::string format_partition(const Partition& p) {
  std::string out;
  for (const auto& cell : p.cells()) {
    for (std::size_t i = 0; i < cell.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(cell[i] + 1);
    }
    out += '\n';
  }
  return out;
}

/// Parses the cell-per-line format. With n < 0 the ground set size is the
/// number of listed ids.
inline Partition parse_partition(std::string_view text, int n = -1) {
  std::vector<std::vector<int>> cells;
  std::istringstream in{std::string(text)};
  std::string line;
  int count = 0;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<int> cell;
    std::string tok;
    while (ls >> tok) {
      for (char c : tok)
        if (!std::isdigit(static_cast<unsigned char>(c)))
          detail::fail(ErrorKind::MalformedPartition, "bad vertex id '" + tok + "'");
      if (tok.size() > 6) detail::fail(ErrorKind::VertexOutOfRange, "vertex id " + tok + " too large");
      const int v = std::stoi(tok);
      detail::require(v >= 1, ErrorKind::VertexOutOfRange, "vertex ids are 1-based");
      cell.push_back(v - 1);
    }
    if (cell.empty()) continue;
    count += static_cast<int>(cell.size());
    cells.push_back(std::move(cell));
  }
  return make_partition(n < 0 ? count : n, cells);
}

}  // namespace wep
