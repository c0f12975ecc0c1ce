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

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace wep {
namespace {

using testing::graph1;

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no exception";
  return ErrorKind::MalformedGraph6;
}

TEST(Graph6, DecodesSmallRecords) {
  EXPECT_EQ(parse_graph6("A_"), graphs::complete(2));
  EXPECT_EQ(parse_graph6("C~"), graphs::complete(4));
  const Graph empty = parse_graph6("A?");
  EXPECT_EQ(empty.order(), 2);
  EXPECT_EQ(empty.edge_count(), 0);
}

TEST(Graph6, AgreesWithIndependentDecoder) {
  Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(trial < 190 ? 40 : 130));
    const Graph g = testing::random_graph(n, rng.uniform01(), rng);
    const std::string s = emit_graph6(g);
    const auto adj = testing::decode_graph6(s);
    ASSERT_EQ(static_cast<int>(adj.size()), n);
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) ASSERT_EQ(adj[u][v], g.adjacent(u, v)) << s;
    EXPECT_EQ(parse_graph6(s), g);
    EXPECT_EQ(emit_graph6(parse_graph6(s)), s);
  }
}

TEST(Graph6, LongSizeForms) {
  const Graph g = graphs::path(63);
  const std::string s = emit_graph6(g);
  EXPECT_EQ(s.substr(0, 4), std::string("~??~"));
  EXPECT_EQ(parse_graph6(s), g);
  const Graph big = graphs::cycle(300);
  EXPECT_EQ(parse_graph6(emit_graph6(big)), big);
}

TEST(Graph6, RejectsMalformed) {
  EXPECT_EQ(kind_of([] { parse_graph6(""); }), ErrorKind::MalformedGraph6);
  EXPECT_EQ(kind_of([] { parse_graph6("A"); }), ErrorKind::MalformedGraph6);
  EXPECT_EQ(kind_of([] { parse_graph6("C~~"); }), ErrorKind::MalformedGraph6);
  EXPECT_EQ(kind_of([] { parse_graph6("A\x7f"); }), ErrorKind::MalformedGraph6);
  EXPECT_EQ(kind_of([] { parse_graph6("A "); }), ErrorKind::MalformedGraph6);
}

TEST(EdgeList, ParsesPathAndSpider) {
  EXPECT_EQ(parse_edge_list("4 3\n1 2\n2 3\n3 4"), graphs::path(4));
  const Graph g = parse_edge_list("6 5\n1 4\n1 5\n1 6\n2 5\n3 6");
  EXPECT_EQ(g, testing::spider());
  EXPECT_EQ(g.edge_count(), 5);
  EXPECT_EQ(parse_edge_list(emit_edge_list(g)), g);
}

TEST(EdgeList, Errors) {
  EXPECT_EQ(kind_of([] { parse_edge_list("2 2\n1 2\n1 2"); }), ErrorKind::DuplicateEdge);
  EXPECT_EQ(kind_of([] { parse_edge_list("2 1\n1 1"); }), ErrorKind::SelfLoop);
  EXPECT_EQ(kind_of([] { parse_edge_list("2 1\n1 3"); }), ErrorKind::VertexOutOfRange);
  EXPECT_EQ(kind_of([] { parse_edge_list("2 1\n0 1"); }), ErrorKind::VertexOutOfRange);
  EXPECT_EQ(kind_of([] { parse_edge_list("3 2\n1 2"); }), ErrorKind::MalformedEdgeList);
  EXPECT_EQ(kind_of([] { parse_edge_list("3 x\n1 2"); }), ErrorKind::MalformedEdgeList);
  EXPECT_EQ(kind_of([] { parse_edge_list("70000 0"); }), ErrorKind::GraphTooLarge);
}

TEST(ReadGraph, DetectsFormat) {
  EXPECT_EQ(read_graph("C~\n"), graphs::complete(4));
  EXPECT_EQ(read_graph("3 2\n1 2\n2 3\n"), graphs::path(3));
}

TEST(Connectivity, Examples) {
  EXPECT_TRUE(is_connected(graphs::path(4)));
  EXPECT_FALSE(is_connected(disjoint_union(graphs::complete(2), graphs::complete(2)).graph));
  EXPECT_TRUE(is_connected(Graph(1)));
}

TEST(Complement, Examples) {
  EXPECT_EQ(complement(graphs::complete(4)), Graph(4));
  const Graph c4 = graphs::cycle(4);
  EXPECT_EQ(complement(c4), graph1(4, {{1, 3}, {2, 4}}));
  Rng rng(3);
  for (int i = 0; i < 50; ++i) {
    const Graph g = testing::random_graph(1 + static_cast<int>(rng.below(15)), 0.4, rng);
    EXPECT_EQ(complement(complement(g)), g);
  }
}

TEST(DisjointUnion, Examples) {
  auto kk = disjoint_union(graphs::complete(2), graphs::complete(2));
  EXPECT_EQ(kk.offset, 2);
  EXPECT_EQ(kk.graph, graph1(4, {{1, 2}, {3, 4}}));
  auto k1k1 = disjoint_union(Graph(1), Graph(1));
  EXPECT_EQ(k1k1.offset, 1);
  EXPECT_EQ(k1k1.graph, Graph(2));
  auto pk = disjoint_union(graphs::path(3), graphs::complete(3));
  EXPECT_EQ(pk.graph.order(), 6);
  EXPECT_EQ(pk.graph.edge_count(), 5);
  const auto comps = connected_components(pk.graph);
  ASSERT_EQ(comps.size(), 2u);
  EXPECT_EQ(comps[0], (std::vector<int>{0, 1, 2}));
  EXPECT_FALSE(is_connected(pk.graph));
}

TEST(InducedSubgraph, Examples) {
  const std::vector<int> a{0, 1}, b{0, 2}, c{0, 1, 2};
  EXPECT_EQ(induced_subgraph(graphs::path(4), a), graphs::complete(2));
  EXPECT_EQ(induced_subgraph(graphs::path(4), b), Graph(2));
  EXPECT_EQ(induced_subgraph(graphs::complete(4), c), graphs::complete(3));
  const std::vector<int> none, out{0, 9};
  EXPECT_EQ(kind_of([&] { induced_subgraph(graphs::path(4), none); }), ErrorKind::EmptySet);
  EXPECT_EQ(kind_of([&] { induced_subgraph(graphs::path(4), out); }), ErrorKind::VertexOutOfRange);
}

TEST(GraphEnumeration, IsomorphismClassCounts) {
  const std::vector<std::size_t> all{1, 2, 4, 11, 34, 156, 1044};
  const std::vector<std::size_t> connected{1, 1, 2, 6, 21, 112, 853};
  for (int n = 1; n <= 7; ++n) {
    EXPECT_EQ(enumerate_graphs(n).size(), all[n - 1]) << n;
    EXPECT_EQ(enumerate_connected_graphs(n).size(), connected[n - 1]) << n;
  }
}

TEST(GraphEnumeration, CanonicalFormIsLabelInvariant) {
  Rng rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng.below(8));
    const Graph g = testing::random_graph(n, 0.5, rng);
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.below(i + 1)]);
    std::vector<Edge> e;
    for (const Edge& x : g.edges()) e.push_back({perm[x.u], perm[x.v]});
    EXPECT_EQ(canonical_form(g), canonical_form(Graph(n, e)));
  }
}

}  // namespace
}  // namespace wep
