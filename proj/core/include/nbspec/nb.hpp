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

#ifndef NBSPEC_NB_HPP
#define NBSPEC_NB_HPP

#include <span>
#include <string_view>
#include <vector>

#include "nbspec/graph.hpp"
#include "nbspec/matrix.hpp"

namespace nbspec {

/// Oriented edges e_0..e_{2M-1}. For i < M, e_i runs from the smaller to the
/// larger endpoint of the i-th edge in lexicographic order and e_{i+M} is its
/// reverse.
struct OrientedEdgeList {
  int m = 0;
  std::vector<Vertex> inp;
  std::vector<Vertex> out;

  int size() const noexcept { return 2 * m; }
  int inverse(int i) const noexcept { return i < m ? i + m : i - m; }
  // Index of the oriented edge u -> v, or -1.
  int find(Vertex u, Vertex v) const;
};

OrientedEdgeList orient_edges(const Graph& g);

/// Directed graph on the oriented edges of G: e_i -> e_j whenever
/// out(e_i) = inp(e_j) and inp(e_i) != out(e_j).
class NbGraph {
 public:
  NbGraph() = default;
  NbGraph(OrientedEdgeList edges, std::vector<std::vector<int>> successors);

  const OrientedEdgeList& edges() const noexcept { return edges_; }
  int node_count() const noexcept { return edges_.size(); }
  long arc_count() const noexcept { return arcs_; }

  // Sorted successor indices of node i.
  std::span<const int> successors(int i) const { return succ_.at(i); }
  // deg_G(out(e_i)) - 1.
  int nb_degree(int i) const { return static_cast<int>(succ_.at(i).size()); }
  const std::vector<int>& nb_degrees() const noexcept { return nb_deg_; }
  bool has_arc(int i, int j) const;

 private:
  OrientedEdgeList edges_;
  std::vector<std::vector<int>> succ_;
  std::vector<int> nb_deg_;
  long arcs_ = 0;
};

NbGraph build_nb_graph(const Graph& g);

// The 0/1 matrix B.
DenseMatrix nb_adjacency(const NbGraph& nb);

// I - D^{-1} B. Throws DegreeDeficiencyError when some node has no successor.
DenseMatrix nb_laplacian(const NbGraph& nb);

enum class TildeConvention {
  kLiteral,        // D~ B, D~ inverting positive out-degrees and zero otherwise
  kIdentityMinus,  // I - D~ B
};

std::string_view to_string(TildeConvention c);

DenseMatrix nb_laplacian_tilde(const NbGraph& nb,
                               TildeConvention convention = TildeConvention::kLiteral);

// Involution swapping e_i and e_{i+M}. Requires m >= 1.
DenseMatrix parity_matrix(int m);

DenseMatrix adjacency_matrix(const Graph& g);
DenseMatrix degree_matrix(const Graph& g);

// How rw_laplacian treats a degree-0 vertex v: L_vv = 1 or L_vv = 0.
enum class IsolatedConvention { kUnitDiagonal, kZeroDiagonal };

std::string_view to_string(IsolatedConvention c);

// I - D^{-1} A.
DenseMatrix rw_laplacian(const Graph& g,
                         IsolatedConvention convention = IsolatedConvention::kUnitDiagonal);

// Connected components of the undirected support of the NB graph.
int nb_weak_component_count(const NbGraph& nb);

// Strongly connected components (iterative Tarjan). labels[i] is the
// component of node i; components are numbered in order of completion.
struct SccResult {
  std::vector<int> labels;
  int count = 0;
};
SccResult nb_strong_components(const NbGraph& nb);

// Two-colorability of the undirected support.
bool nb_is_bipartite(const NbGraph& nb);

// Whether some directed cycle has odd length. A strongly connected digraph
// has one exactly when its support is not bipartite, so this is checked per
// strong component.
bool nb_has_odd_directed_cycle(const NbGraph& nb);

}  // namespace nbspec

#endif  // NBSPEC_NB_HPP
