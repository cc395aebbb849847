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

#include "nbspec/generate.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <limits>
#include <map>
#include <mutex>
#include <thread>
#include <unordered_set>

#include "nbspec/errors.hpp"

namespace nbspec {
namespace {

using Mask = std::uint32_t;

struct BitGraph {
  int n = 0;
  std::array<Mask, kMaxKeyedOrder> adj{};
};

BitGraph to_bits(const Graph& g) {
  if (g.vertex_count() > kMaxKeyedOrder) {
    throw UnsupportedSizeError("adjacency keys support at most 11 vertices");
  }
  BitGraph b;
  b.n = g.vertex_count();
  for (const Edge& e : g.edges()) {
    b.adj[e.u] |= Mask{1} << e.v;
    b.adj[e.v] |= Mask{1} << e.u;
  }
  return b;
}

// Depth-first labeling search. Position j receives vertex order[j]; the
// column of bits (0,j)..(j-1,j) is then fixed, so keys compare column by
// column. With prune=false every labeling is visited; otherwise a branch is
// cut as soon as its column exceeds the best column seen at that depth.
class LabelSearch {
 public:
  LabelSearch(const BitGraph& g, std::span<const int> cell_of_position, bool prune)
      : g_(g), cells_(cell_of_position), prune_(prune) {
    best_.fill(std::numeric_limits<Mask>::max());
  }

  std::uint64_t run(std::span<const int> vertex_cell) {
    vertex_cell_ = vertex_cell;
    if (prune_) {
      descend(0, 0);
    } else {
      descend_full(0, 0);
    }
    std::uint64_t key = 0;
    for (int j = 1; j < g_.n; ++j) key = (key << j) | best_[j];
    return key;
  }

 private:
  void descend(int depth, Mask used) {
    if (depth == g_.n) return;
    for (int v = 0; v < g_.n; ++v) {
      if (used & (Mask{1} << v)) continue;
      if (vertex_cell_[v] != cells_[depth]) continue;
      Mask col = 0;
      for (int i = 0; i < depth; ++i) {
        col = (col << 1) | ((g_.adj[order_[i]] >> v) & 1U);
      }
      if (col > best_[depth]) continue;
      if (col < best_[depth]) {
        best_[depth] = col;
        std::fill(best_.begin() + depth + 1, best_.end(),
                  std::numeric_limits<Mask>::max());
      }
      order_[depth] = v;
      descend(depth + 1, used | (Mask{1} << v));
    }
  }

  void descend_full(int depth, Mask used) {
    if (depth == g_.n) {
      if (std::lexicographical_compare(cur_.begin() + 1, cur_.begin() + g_.n,
                                       best_.begin() + 1, best_.begin() + g_.n)) {
        std::copy(cur_.begin(), cur_.end(), best_.begin());
      }
      return;
    }
    for (int v = 0; v < g_.n; ++v) {
      if (used & (Mask{1} << v)) continue;
      Mask col = 0;
      for (int i = 0; i < depth; ++i) {
        col = (col << 1) | ((g_.adj[order_[i]] >> v) & 1U);
      }
      order_[depth] = v;
      cur_[depth] = col;
      descend_full(depth + 1, used | (Mask{1} << v));
    }
  }

  const BitGraph& g_;
  std::span<const int> cells_;
  std::span<const int> vertex_cell_;
  bool prune_;
  std::array<int, kMaxKeyedOrder> order_{};
  std::array<Mask, kMaxKeyedOrder> cur_{};
  std::array<Mask, kMaxKeyedOrder> best_{};
};

// Ordered partition from iterated degree refinement. Colors are ranks of
// label-independent signatures, so the partition commutes with relabeling.
std::vector<int> refine_colors(const BitGraph& g) {
  std::vector<int> color(static_cast<std::size_t>(g.n));
  for (int v = 0; v < g.n; ++v) color[v] = std::popcount(g.adj[v]);
  int classes = -1;
  for (;;) {
    std::vector<std::vector<int>> sig(static_cast<std::size_t>(g.n));
    for (int v = 0; v < g.n; ++v) {
      sig[v].push_back(color[v]);
      std::vector<int> nb;
      for (int u = 0; u < g.n; ++u)
        if (g.adj[v] >> u & 1U) nb.push_back(color[u]);
      std::sort(nb.begin(), nb.end());
      sig[v].insert(sig[v].end(), nb.begin(), nb.end());
    }
    std::map<std::vector<int>, int> rank;
    for (const auto& s : sig) rank.emplace(s, 0);
    int r = 0;
    for (auto& [s, idx] : rank) idx = r++;
    for (int v = 0; v < g.n; ++v) color[v] = rank[sig[v]];
    if (r == classes) break;
    classes = r;
  }
  return color;
}

std::uint64_t canonical_with(const Graph& g, CanonicalMethod method) {
  return method == CanonicalMethod::kBruteForce ? canonical_key_bruteforce(g)
                                                : canonical_key(g);
}

}  // namespace

std::uint64_t adjacency_key(const Graph& g) {
  const BitGraph b = to_bits(g);
  std::uint64_t key = 0;
  for (int j = 1; j < b.n; ++j)
    for (int i = 0; i < j; ++i) key = (key << 1) | ((b.adj[i] >> j) & 1U);
  return key;
}

Graph graph_from_key(int n, std::uint64_t key) {
  if (n < 0 || n > kMaxKeyedOrder) {
    throw UnsupportedSizeError("adjacency keys support 0..11 vertices");
  }
  const int bits = n * (n - 1) / 2;
  std::vector<Edge> edges;
  int k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k)
      if ((key >> (bits - 1 - k)) & 1U) edges.push_back({i, j});
  return Graph(n, edges);
}

std::uint64_t canonical_key_bruteforce(const Graph& g) {
  if (g.vertex_count() > 8) {
    throw UnsupportedSizeError("brute-force canonical form supports n <= 8");
  }
  const BitGraph b = to_bits(g);
  LabelSearch search(b, {}, false);
  return search.run({});
}

std::uint64_t canonical_key(const Graph& g) {
  const BitGraph b = to_bits(g);
  const std::vector<int> color = refine_colors(b);
  std::vector<int> cells(color);
  std::sort(cells.begin(), cells.end());
  LabelSearch search(b, cells, true);
  return search.run(color);
}

std::vector<Graph> extend_by_vertex(std::span<const Graph> smaller, int min_degree,
                                    CanonicalMethod method) {
  if (smaller.empty()) return {};
  const int n = smaller.front().vertex_count() + 1;
  if (n > kMaxKeyedOrder) {
    throw UnsupportedSizeError("vertex extension supports at most 11 vertices");
  }
  const unsigned hw = std::max(1U, std::thread::hardware_concurrency());
  const std::size_t workers = std::min<std::size_t>(hw, smaller.size());
  std::vector<std::unordered_set<std::uint64_t>> found(workers);

  auto work = [&](std::size_t w) {
    for (std::size_t gi = w; gi < smaller.size(); gi += workers) {
      const Graph& base = smaller[gi];
      const std::vector<int> deg = degrees(base);
      std::vector<Edge> edges(base.edges().begin(), base.edges().end());
      const std::size_t base_m = edges.size();
      for (Mask s = 0; s < (Mask{1} << (n - 1)); ++s) {
        if (std::popcount(s) < min_degree) continue;
        bool ok = true;
        for (int v = 0; v < n - 1 && ok; ++v) {
          ok = deg[v] + static_cast<int>((s >> v) & 1U) >= min_degree;
        }
        if (!ok) continue;
        edges.resize(base_m);
        for (int v = 0; v < n - 1; ++v)
          if ((s >> v) & 1U) edges.push_back({v, n - 1});
        found[w].insert(canonical_with(Graph(n, edges), method));
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work, w);
  work(0);
  for (auto& t : pool) t.join();

  std::vector<std::uint64_t> keys;
  for (auto& set : found) keys.insert(keys.end(), set.begin(), set.end());
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  std::vector<Graph> out;
  out.reserve(keys.size());
  for (std::uint64_t k : keys) out.push_back(graph_from_key(n, k));
  return out;
}

namespace {

std::vector<Graph> enumerate_with(int n, int min_degree, CanonicalMethod method) {
  if (n < 0) throw PreconditionError("vertex count must be non-negative");
  if (n == 0) return {Graph(0)};
  if (min_degree >= n) return {};
  if (n == 1) return {Graph(1)};
  const std::vector<Graph> smaller =
      enumerate_with(n - 1, std::max(0, min_degree - 1), method);
  return extend_by_vertex(smaller, min_degree, method);
}

}  // namespace

GraphStream generate_nonisomorphic(int n, int min_degree) {
  if (n > kMaxBuiltinOrder) {
    throw UnsupportedSizeError(
        "built-in generator supports n <= 7; supply a graph6 corpus (for "
        "example from `nbspec generate`) for larger orders");
  }
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::vector<Graph>> memo;
  const auto key = std::make_pair(n, std::max(0, min_degree));
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = memo.find(key); it != memo.end()) return GraphStream(it->second);
  }
  std::vector<Graph> graphs =
      enumerate_with(n, key.second, CanonicalMethod::kBruteForce);
  std::lock_guard<std::mutex> lock(mu);
  memo.emplace(key, graphs);
  return GraphStream(std::move(graphs));
}

std::vector<Graph> enumerate_graphs(int n, int min_degree) {
  if (n > 10) throw UnsupportedSizeError("enumerate_graphs supports n <= 10");
  return enumerate_with(n, std::max(0, min_degree), CanonicalMethod::kRefined);
}

}  // namespace nbspec
