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

#include "nbspec/nb.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

#include "nbspec/errors.hpp"

namespace nbspec {

int OrientedEdgeList::find(Vertex u, Vertex v) const {
  const Vertex a = std::min(u, v);
  const Vertex b = std::max(u, v);
  int lo = 0;
  int hi = m;
  while (lo < hi) {
    const int mid = (lo + hi) / 2;
    if (inp[mid] < a || (inp[mid] == a && out[mid] < b)) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  if (lo == m || inp[lo] != a || out[lo] != b) return -1;
  return u < v ? lo : lo + m;
}

OrientedEdgeList orient_edges(const Graph& g) {
  OrientedEdgeList oe;
  oe.m = g.edge_count();
  oe.inp.resize(2 * static_cast<std::size_t>(oe.m));
  oe.out.resize(2 * static_cast<std::size_t>(oe.m));
  int i = 0;
  for (const Edge& e : g.edges()) {  // already sorted with u < v
    oe.inp[i] = e.u;
    oe.out[i] = e.v;
    oe.inp[i + oe.m] = e.v;
    oe.out[i + oe.m] = e.u;
    ++i;
  }
  return oe;
}

NbGraph::NbGraph(OrientedEdgeList edges, std::vector<std::vector<int>> successors)
    : edges_(std::move(edges)), succ_(std::move(successors)) {
  nb_deg_.reserve(succ_.size());
  for (auto& s : succ_) {
    std::sort(s.begin(), s.end());
    nb_deg_.push_back(static_cast<int>(s.size()));
    arcs_ += static_cast<long>(s.size());
  }
}

bool NbGraph::has_arc(int i, int j) const {
  const auto& s = succ_.at(i);
  return std::binary_search(s.begin(), s.end(), j);
}

NbGraph build_nb_graph(const Graph& g) {
  OrientedEdgeList oe = orient_edges(g);
  const int n2 = oe.size();
  // Oriented edges leaving each vertex.
  std::vector<std::vector<int>> leaving(static_cast<std::size_t>(g.vertex_count()));
  for (int j = 0; j < n2; ++j) leaving[oe.inp[j]].push_back(j);
  std::vector<std::vector<int>> succ(static_cast<std::size_t>(n2));
  for (int i = 0; i < n2; ++i) {
    for (int j : leaving[oe.out[i]]) {
      if (oe.out[j] != oe.inp[i]) succ[i].push_back(j);
    }
  }
  return NbGraph(std::move(oe), std::move(succ));
}

DenseMatrix nb_adjacency(const NbGraph& nb) {
  const auto n = static_cast<std::size_t>(nb.node_count());
  DenseMatrix b(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (int j : nb.successors(static_cast<int>(i))) b(i, j) = 1.0;
  return b;
}

DenseMatrix nb_laplacian(const NbGraph& nb) {
  const auto n = static_cast<std::size_t>(nb.node_count());
  DenseMatrix l = DenseMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i) {
    const int d = nb.nb_degree(static_cast<int>(i));
    if (d == 0) {
      const auto& oe = nb.edges();
      throw DegreeDeficiencyError(
          "oriented edge " + std::to_string(oe.inp[i]) + "->" +
          std::to_string(oe.out[i]) +
          " has no non-backtracking successor (degree-1 endpoint); use "
          "nb_laplacian_tilde");
    }
    for (int j : nb.successors(static_cast<int>(i))) l(i, j) -= 1.0 / d;
  }
  return l;
}

std::string_view to_string(TildeConvention c) {
  return c == TildeConvention::kLiteral ? "DtB" : "I-DtB";
}

DenseMatrix nb_laplacian_tilde(const NbGraph& nb, TildeConvention convention) {
  const auto n = static_cast<std::size_t>(nb.node_count());
  DenseMatrix t(n, n);
  const double sign = convention == TildeConvention::kLiteral ? 1.0 : -1.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (convention == TildeConvention::kIdentityMinus) t(i, i) = 1.0;
    const int d = nb.nb_degree(static_cast<int>(i));
    if (d == 0) continue;
    for (int j : nb.successors(static_cast<int>(i))) t(i, j) += sign / d;
  }
  return t;
}

DenseMatrix parity_matrix(int m) {
  if (m < 1) throw PreconditionError("parity_matrix requires m >= 1");
  const auto mm = static_cast<std::size_t>(m);
  DenseMatrix p(2 * mm, 2 * mm);
  for (std::size_t i = 0; i < mm; ++i) {
    p(i, i + mm) = 1.0;
    p(i + mm, i) = 1.0;
  }
  return p;
}

DenseMatrix adjacency_matrix(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  DenseMatrix a(n, n);
  for (const Edge& e : g.edges()) {
    a(e.u, e.v) = 1.0;
    a(e.v, e.u) = 1.0;
  }
  return a;
}

DenseMatrix degree_matrix(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  DenseMatrix d(n, n);
  for (std::size_t v = 0; v < n; ++v) d(v, v) = g.degree(static_cast<Vertex>(v));
  return d;
}

std::string_view to_string(IsolatedConvention c) {
  return c == IsolatedConvention::kUnitDiagonal ? "L_vv=1" : "L_vv=0";
}

DenseMatrix rw_laplacian(const Graph& g, IsolatedConvention convention) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  DenseMatrix l = DenseMatrix::identity(n);
  for (std::size_t v = 0; v < n; ++v) {
    const int d = g.degree(static_cast<Vertex>(v));
    if (d == 0) {
      if (convention == IsolatedConvention::kZeroDiagonal) l(v, v) = 0.0;
      continue;
    }
    for (Vertex u : g.neighbors(static_cast<Vertex>(v))) l(v, u) = -1.0 / d;
  }
  return l;
}

int nb_weak_component_count(const NbGraph& nb) {
  const int n = nb.node_count();
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  int count = n;
  for (int i = 0; i < n; ++i) {
    for (int j : nb.successors(i)) {
      const int a = find(i);
      const int b = find(j);
      if (a != b) {
        parent[a] = b;
        --count;
      }
    }
  }
  return count;
}

SccResult nb_strong_components(const NbGraph& nb) {
  const int n = nb.node_count();
  SccResult r;
  r.labels.assign(static_cast<std::size_t>(n), -1);
  std::vector<int> index(static_cast<std::size_t>(n), -1);
  std::vector<int> low(static_cast<std::size_t>(n), 0);
  std::vector<char> on_stack(static_cast<std::size_t>(n), 0);
  std::vector<int> stack;
  // Explicit call stack of (node, next successor position).
  std::vector<std::pair<int, std::size_t>> frames;
  int next_index = 0;
  for (int root = 0; root < n; ++root) {
    if (index[root] >= 0) continue;
    frames.emplace_back(root, 0);
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!frames.empty()) {
      auto& [v, pos] = frames.back();
      const auto succ = nb.successors(v);
      if (pos < succ.size()) {
        const int w = succ[pos++];
        if (index[w] < 0) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = 1;
          frames.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      const int done = v;
      frames.pop_back();
      if (!frames.empty()) {
        const int parent = frames.back().first;
        low[parent] = std::min(low[parent], low[done]);
      }
      if (low[done] == index[done]) {
        int w = -1;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          r.labels[w] = r.count;
        } while (w != done);
        ++r.count;
      }
    }
  }
  return r;
}

namespace {

// 2-colors the support restricted to nodes with keep(label) true.
template <class Keep>
bool support_two_colorable(const NbGraph& nb, const std::vector<int>& labels,
                           Keep keep_arc) {
  const int n = nb.node_count();
  std::vector<std::vector<int>> und(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j : nb.successors(i))
      if (keep_arc(labels, i, j)) {
        und[i].push_back(j);
        und[j].push_back(i);
      }
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  for (int s = 0; s < n; ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (int w : und[v]) {
        if (color[w] < 0) {
          color[w] = 1 - color[v];
          q.push(w);
        } else if (color[w] == color[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

bool nb_is_bipartite(const NbGraph& nb) {
  return support_two_colorable(nb, {}, [](const std::vector<int>&, int, int) {
    return true;
  });
}

bool nb_has_odd_directed_cycle(const NbGraph& nb) {
  const SccResult scc = nb_strong_components(nb);
  return !support_two_colorable(nb, scc.labels,
                                [](const std::vector<int>& lab, int i, int j) {
                                  return lab[i] == lab[j];
                                });
}

}  // namespace nbspec
