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

#include "nbspec/families.hpp"

#include <algorithm>
#include <random>
#include <vector>

#include "nbspec/errors.hpp"

namespace nbspec::families {

Graph complete(int n) {
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v)
    for (int u = 0; u < v; ++u) edges.push_back({u, v});
  return Graph(n, edges);
}

Graph cycle(int n) {
  if (n < 3) throw PreconditionError("cycle graph needs at least 3 vertices");
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n});
  return Graph(n, edges);
}

Graph path(int n) {
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Graph(n, edges);
}

Graph complete_bipartite(int a, int b) {
  std::vector<Edge> edges;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) edges.push_back({u, a + v});
  return Graph(a + b, edges);
}

Graph petersen() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.push_back({i, (i + 1) % 5});
    edges.push_back({i, i + 5});
    edges.push_back({5 + i, 5 + (i + 2) % 5});
  }
  return Graph(10, edges);
}

Graph bowtie() {
  const std::vector<Edge> edges = {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}};
  return Graph(5, edges);
}

Graph two_squares() {
  const std::vector<Edge> edges = {{0, 1}, {1, 2}, {2, 3}, {3, 0},
                                   {0, 4}, {4, 5}, {5, 6}, {6, 0}};
  return Graph(7, edges);
}

Graph erdos_renyi(int n, double alpha, std::uint64_t seed) {
  if (n < 2) throw PreconditionError("erdos_renyi needs n >= 2");
  const double p = alpha / static_cast<double>(n - 1);
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(std::min(1.0, std::max(0.0, p)));
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u)
      if (coin(rng)) edges.push_back({u, v});
  return Graph(n, edges);
}

}  // namespace nbspec::families
