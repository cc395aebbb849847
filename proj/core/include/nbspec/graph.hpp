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

#ifndef NBSPEC_GRAPH_HPP
#define NBSPEC_GRAPH_HPP

#include <compare>
#include <span>
#include <vector>

namespace nbspec {

using Vertex = int;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1.
///
/// Edges are stored normalized (u < v) and sorted lexicographically, so two
/// graphs with the same labeled edge set compare equal regardless of the
/// order in which edges were supplied. Construction rejects self-loops,
/// duplicate edges and out-of-range endpoints with PreconditionError.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int vertex_count);
  Graph(int vertex_count, std::span<const Edge> edges);

  int vertex_count() const noexcept { return n_; }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }

  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_.at(v); }
  int degree(Vertex v) const { return static_cast<int>(adj_.at(v).size()); }
  bool has_edge(Vertex a, Vertex b) const;

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
};

std::vector<int> degrees(const Graph& g);
int max_degree(const Graph& g);
// 0 for the empty vertex set.
int min_degree(const Graph& g);
bool is_regular(const Graph& g);

struct ComponentPartition {
  std::vector<int> labels;
  int count = 0;
};

// Labels are assigned in order of the smallest vertex of each component.
ComponentPartition components(const Graph& g);
bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g);

// Connected, 2-regular, at least three vertices.
bool is_cycle_graph(const Graph& g);

// Drops degree-0 vertices and relabels the rest in increasing order.
Graph remove_isolated(const Graph& g);

// Vertex v of g becomes vertex perm[v] of the result.
Graph relabeled(const Graph& g, std::span<const Vertex> perm);

Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace nbspec

#endif  // NBSPEC_GRAPH_HPP
