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

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "wep/wep.hpp"

namespace wep::testing {

// Graphs and partitions are written 1-based here, as in the formats.

inline Graph graph1(int n, std::initializer_list<std::pair<int, int>> edges) {
  std::vector<Edge> e;
  for (auto [u, v] : edges) e.push_back({u - 1, v - 1});
  return Graph(n, e);
}

inline Partition cells1(int n, std::initializer_list<std::initializer_list<int>> cells) {
  std::vector<std::vector<int>> c;
  for (const auto& cell : cells) {
    c.emplace_back();
    for (int v : cell) c.back().push_back(v - 1);
  }
  return make_partition(n, c);
}

// Tree on six vertices: center 1 with legs 1-4, 1-5-2 and 1-6-3.
inline Graph spider() { return graph1(6, {{1, 4}, {1, 5}, {1, 6}, {2, 5}, {3, 6}}); }

// Two weight-equitable, non-equitable bipartitions p and q whose meet is not
// weight-equitable.
inline Graph meet_example() {
  return graph1(6, {{1, 2}, {2, 3}, {3, 6}, {6, 5}, {5, 4}, {4, 1}, {4, 2}, {2, 5}, {5, 3}, {1, 5}, {2, 6}});
}

inline Partition meet_example_p() { return cells1(6, {{1, 3, 5}, {2, 4, 6}}); }
inline Partition meet_example_q() { return cells1(6, {{1, 5, 6}, {2, 3, 4}}); }

/// Largest eigenpair by a dense symmetric eigensolver, with the eigenvector
/// made positive and scaled to minimum entry 1.
struct DenseEigen {
  double lambda;
  std::vector<double> vec;
};

inline DenseEigen dense_top_eigen(const Graph& g) {
  const int n = g.order();
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (const Edge& e : g.edges()) a(e.u, e.v) = a(e.v, e.u) = 1.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a);
  Eigen::VectorXd v = es.eigenvectors().col(n - 1);
  if (v.sum() < 0) v = -v;
  const double mn = v.minCoeff();
  DenseEigen out{es.eigenvalues()(n - 1), {}};
  for (int i = 0; i < n; ++i) out.vec.push_back(v(i) / mn);
  return out;
}

inline double dense_top_eigenvalue(const Matrix& m) {
  Eigen::MatrixXd e(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) e(i, j) = m(i, j);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(e);
  return es.eigenvalues().maxCoeff();
}

/// Straight-line graph6 reader written from the format description, kept
/// apart from the library parser so the two can check each other.
inline std::vector<std::vector<bool>> decode_graph6(const std::string& s) {
  std::vector<int> bytes;
  for (char c : s) bytes.push_back(static_cast<unsigned char>(c) - 63);
  std::size_t pos = 0;
  long n = 0;
  if (bytes[0] != 63) {
    n = bytes[0];
    pos = 1;
  } else if (bytes[1] != 63) {
    n = (bytes[1] << 12) | (bytes[2] << 6) | bytes[3];
    pos = 4;
  } else {
    for (int i = 2; i < 8; ++i) n = (n << 6) | bytes[i];
    pos = 8;
  }
  std::vector<bool> bits;
  for (std::size_t i = pos; i < bytes.size(); ++i)
    for (int b = 5; b >= 0; --b) bits.push_back((bytes[i] >> b) & 1);
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  std::size_t k = 0;
  for (long j = 1; j < n; ++j)
    for (long i = 0; i < j; ++i, ++k) adj[i][j] = adj[j][i] = bits[k];
  return adj;
}

inline Graph random_graph(int n, double p, Rng& rng) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.uniform01() < p) e.push_back({u, v});
  return Graph(n, e);
}

inline Graph random_connected_graph(int n, double p, Rng& rng) {
  for (;;) {
    Graph g = random_graph(n, p, rng);
    if (is_connected(g)) return g;
  }
}

/// Order of the group generated by `gens`, by closure under multiplication.
inline std::size_t group_order(int n, const std::vector<Permutation>& gens) {
  std::vector<Permutation> elems{Permutation::identity(n)};
  std::vector<Permutation> frontier = elems;
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const Permutation& x : frontier)
      for (const Permutation& g : gens) {
        Permutation y = g * x;
        if (std::find(elems.begin(), elems.end(), y) == elems.end()) {
          elems.push_back(y);
          next.push_back(y);
        }
      }
    frontier.swap(next);
  }
  return elems.size();
}

/// P4-free test by checking every ordered 4-tuple for an induced path.
inline bool has_induced_p4(const Graph& g) {
  const int n = g.order();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          if (a == b || a == c || a == d || b == c || b == d || c == d) continue;
          if (g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(c, d) && !g.adjacent(a, c) &&
              !g.adjacent(a, d) && !g.adjacent(b, d))
            return true;
        }
  return false;
}

}  // namespace wep::testing
