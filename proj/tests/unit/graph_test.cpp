// Copyright 2026 The nbspec Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <random>
#include <sstream>
#include <vector>

#include <gtest/gtest.h>

#include "nbspec/errors.hpp"
#include "nbspec/families.hpp"
#include "nbspec/graph.hpp"
#include "nbspec/graph6.hpp"
#include "oracles.hpp"

namespace nbspec {
namespace {

TEST(Graph, RejectsLoopsDuplicatesAndRange) {
  const std::vector<Edge> loop{{1, 1}};
  EXPECT_THROW(Graph(3, loop), PreconditionError);
  const std::vector<Edge> dup{{0, 1}, {1, 0}};
  EXPECT_THROW(Graph(3, dup), PreconditionError);
  const std::vector<Edge> range{{0, 3}};
  EXPECT_THROW(Graph(3, range), PreconditionError);
  EXPECT_THROW(Graph(-1), PreconditionError);
}

TEST(Graph, EdgeOrderIsNormalized) {
  const std::vector<Edge> a{{2, 1}, {0, 1}};
  const std::vector<Edge> b{{0, 1}, {1, 2}};
  EXPECT_EQ(Graph(3, a), Graph(3, b));
  EXPECT_TRUE(Graph(3, a).has_edge(2, 1));
  EXPECT_FALSE(Graph(3, a).has_edge(0, 2));
}

TEST(Graph, DegreeExamples) {
  EXPECT_EQ(degrees(families::complete(4)), (std::vector<int>{3, 3, 3, 3}));
  EXPECT_EQ(degrees(families::cycle(5)), (std::vector<int>{2, 2, 2, 2, 2}));
  EXPECT_EQ(degrees(families::bowtie()), (std::vector<int>{4, 2, 2, 2, 2}));
  EXPECT_EQ(max_degree(families::two_squares()), 4);
  EXPECT_EQ(min_degree(Graph(0)), 0);
}

TEST(Graph, ComponentsAndBipartiteness) {
  const Graph c6 = families::cycle(6);
  EXPECT_TRUE(is_bipartite(c6));
  EXPECT_EQ(components(c6).count, 1);
  EXPECT_FALSE(is_bipartite(families::complete(3)));
  const Graph two = disjoint_union(families::complete(3), families::complete(3));
  const ComponentPartition p = components(two);
  EXPECT_EQ(p.count, 2);
  EXPECT_EQ(p.labels, (std::vector<int>{0, 0, 0, 1, 1, 1}));
  EXPECT_FALSE(is_connected(two));
}

TEST(Graph, CycleGraphDetection) {
  EXPECT_TRUE(is_cycle_graph(families::cycle(3)));
  EXPECT_TRUE(is_cycle_graph(families::cycle(7)));
  EXPECT_FALSE(is_cycle_graph(families::path(4)));
  EXPECT_FALSE(is_cycle_graph(disjoint_union(families::cycle(3), families::cycle(3))));
}

TEST(Graph, RemoveIsolatedAndRelabel) {
  const Graph g = disjoint_union(Graph(2), families::path(3));
  const Graph h = remove_isolated(g);
  EXPECT_EQ(h, families::path(3));
  const std::vector<Vertex> perm{2, 0, 1};
  const Graph r = relabeled(families::path(3), perm);  // 0-1-2 becomes 2-0-1
  EXPECT_TRUE(r.has_edge(2, 0));
  EXPECT_TRUE(r.has_edge(0, 1));
  EXPECT_FALSE(r.has_edge(1, 2));
}

TEST(Families, Sizes) {
  EXPECT_EQ(families::petersen().edge_count(), 15);
  EXPECT_TRUE(is_regular(families::petersen()));
  EXPECT_EQ(families::complete_bipartite(3, 3).edge_count(), 9);
  EXPECT_EQ(families::two_squares().vertex_count(), 7);
  EXPECT_EQ(families::erdos_renyi(50, 4.0, 9), families::erdos_renyi(50, 4.0, 9));
}

// Odd-cycle detection by BFS layering, written independently of the library.
bool bfs_bipartite(const Graph& g) {
  const auto a = oracle::adjacency(g);
  const int n = g.vertex_count();
  std::vector<int> layer(n, -1);
  for (int s = 0; s < n; ++s) {
    if (layer[s] >= 0) continue;
    layer[s] = 0;
    std::vector<int> queue{s};
    for (std::size_t h = 0; h < queue.size(); ++h) {
      const int u = queue[h];
      for (int v = 0; v < n; ++v) {
        if (!a[u][v]) continue;
        if (layer[v] < 0) {
          layer[v] = layer[u] + 1;
          queue.push_back(v);
        } else if (layer[v] == layer[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

TEST(Graph, BipartiteAgreesWithLayeringOnAllLabeledGraphsUpToSix) {
  for (int n = 1; n <= 6; ++n) {
    const int bits = n * (n - 1) / 2;
    for (long mask = 0; mask < (1L << bits); ++mask) {
      std::vector<Edge> edges;
      int b = 0;
      for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++b)
          if (mask >> b & 1) edges.push_back({u, v});
      const Graph g(n, edges);
      ASSERT_EQ(is_bipartite(g), bfs_bipartite(g)) << write_graph6(g);
      int sum = 0;
      for (int d : degrees(g)) sum += d;
      ASSERT_EQ(sum, 2 * g.edge_count());
    }
  }
}

TEST(Graph6, KnownRecords) {
  EXPECT_EQ(parse_graph6("@"), Graph(1));
  EXPECT_EQ(parse_graph6("Bw"), families::complete(3));
  EXPECT_EQ(parse_graph6("C~"), families::complete(4));
  EXPECT_EQ(write_graph6(families::complete(4)), "C~");
  EXPECT_EQ(write_graph6(Graph(1)), "@");
  EXPECT_EQ(write_graph6(families::complete(3)), "Bw");
  EXPECT_EQ(parse_graph6(">>graph6<<C~\r\n"), families::complete(4));
  EXPECT_EQ(write_graph6(Graph(0)), "?");
}

TEST(Graph6, Errors) {
  try {
    parse_graph6("C}x");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 2U);
  }
  EXPECT_THROW(parse_graph6("C"), ParseError);      // truncated
  EXPECT_THROW(parse_graph6("Bx"), ParseError);     // nonzero padding
  EXPECT_THROW(parse_graph6("C\x7f"), ParseError);  // outside 63..126
  EXPECT_THROW(parse_graph6(""), ParseError);
}

TEST(Graph6, FileLineNumbers) {
  std::istringstream in("C~\n\nBw\nC}x\n");
  try {
    read_graph6(in);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4U);
  }
}

TEST(Graph6, RoundTripRandomAndLarge) {
  std::mt19937_64 rng(7);
  for (int n : {2, 5, 17, 62, 63, 64, 130}) {
    for (int rep = 0; rep < 5; ++rep) {
      const Graph g = oracle::random_graph(n, 0.3, rng);
      ASSERT_EQ(parse_graph6(write_graph6(g)), g) << n;
    }
  }
}

}  // namespace
}  // namespace nbspec
