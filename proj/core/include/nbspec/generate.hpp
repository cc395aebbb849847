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

#ifndef NBSPEC_GENERATE_HPP
#define NBSPEC_GENERATE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "nbspec/graph.hpp"

namespace nbspec {

// Upper bound for the built-in generator (n! canonical labeling).
inline constexpr int kMaxBuiltinOrder = 7;
// Upper bound for any 64-bit adjacency key: 11 * 10 / 2 = 55 bits.
inline constexpr int kMaxKeyedOrder = 11;

/// Upper-triangle adjacency bits in graph6 order, first bit most significant,
/// so lexicographic order of bit strings equals numeric order of keys.
std::uint64_t adjacency_key(const Graph& g);
Graph graph_from_key(int n, std::uint64_t key);

// Smallest key over all n! relabelings. n <= 8.
std::uint64_t canonical_key_bruteforce(const Graph& g);

// Isomorphism invariant that separates non-isomorphic graphs: the smallest
// key over labelings compatible with an iteratively refined degree
// partition. It may differ from canonical_key_bruteforce. n <= 11.
std::uint64_t canonical_key(const Graph& g);

enum class CanonicalMethod { kBruteForce, kRefined };

/// Pull-based stream of one representative per isomorphism class.
class GraphStream {
 public:
  explicit GraphStream(std::vector<Graph> graphs) : graphs_(std::move(graphs)) {}

  std::optional<Graph> next() {
    if (pos_ >= graphs_.size()) return std::nullopt;
    return graphs_[pos_++];
  }
  std::size_t size() const noexcept { return graphs_.size(); }
  std::vector<Graph> drain() {
    std::vector<Graph> rest(graphs_.begin() + static_cast<std::ptrdiff_t>(pos_),
                            graphs_.end());
    pos_ = graphs_.size();
    return rest;
  }

 private:
  std::vector<Graph> graphs_;
  std::size_t pos_ = 0;
};

/// Every isomorphism class on n vertices with minimum degree >= min_degree,
/// represented by its canonical labeling and ordered by canonical key.
/// Throws UnsupportedSizeError for n > 7; larger corpora come from graph6
/// files (see enumerate_graphs and the `generate` CLI subcommand).
GraphStream generate_nonisomorphic(int n, int min_degree = 0);

/// Isomorphism classes on n <= 10 vertices, built by adding one vertex in
/// every possible way to each class on n - 1 vertices and deduplicating with
/// canonical_key. Used to write external graph6 corpora.
std::vector<Graph> enumerate_graphs(int n, int min_degree = 0);

// All classes on n vertices given all classes on n - 1 vertices.
std::vector<Graph> extend_by_vertex(std::span<const Graph> smaller, int min_degree,
                                    CanonicalMethod method);

}  // namespace nbspec

#endif  // NBSPEC_GENERATE_HPP
