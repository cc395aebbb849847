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

#include "nbspec/walks.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "nbspec/errors.hpp"
#include "nbspec/nb.hpp"

namespace nbspec {
namespace {

void validate(const Graph& g, const WalkQuery& q) {
  if (g.vertex_count() == 0 || min_degree(g) < 2) {
    throw PreconditionError("walk probabilities require minimum degree >= 2");
  }
  const int n = g.vertex_count();
  if (q.source < 0 || q.source >= n || q.target < 0 || q.target >= n) {
    throw PreconditionError("walk endpoint out of range");
  }
  if (q.length < 1) throw PreconditionError("walk length must be at least 1");
}

template <class T>
T propagate(const Graph& g, const WalkQuery& q) {
  const NbGraph nb = build_nb_graph(g);
  const OrientedEdgeList& oe = nb.edges();
  std::vector<T> mass(static_cast<std::size_t>(oe.size()), T(0));
  const T start = T(1) / T(g.degree(q.source));
  for (int i = 0; i < oe.size(); ++i)
    if (oe.inp[i] == q.source) mass[i] = start;
  for (int step = 1; step < q.length; ++step) {
    std::vector<T> next(mass.size(), T(0));
    for (int i = 0; i < oe.size(); ++i) {
      if (mass[i] == T(0)) continue;
      const T share = mass[i] / T(nb.nb_degree(i));
      for (int j : nb.successors(i)) next[j] += share;
    }
    mass = std::move(next);
  }
  T total(0);
  for (int i = 0; i < oe.size(); ++i)
    if (oe.out[i] == q.target) total += mass[i];
  return total;
}

int adj(const Graph& g, Vertex a, Vertex b) { return g.has_edge(a, b) ? 1 : 0; }

int common(const Graph& g, Vertex a, Vertex b) {
  int c = 0;
  for (Vertex w : g.neighbors(a))
    if (g.has_edge(w, b)) ++c;
  return c;
}

double inv(int d) {
  return d == 0 ? std::numeric_limits<double>::quiet_NaN() : 1.0 / d;
}

double length_three(const Graph& g, Vertex v0, Vertex v3) {
  double s = 0.0;
  for (Vertex v1 : g.neighbors(v0)) {
    if (v1 == v3) continue;
    for (Vertex v2 : g.neighbors(v1)) {
      if (v2 == v0 || !g.has_edge(v2, v3)) continue;
      s += inv(g.degree(v0) - adj(g, v0, v3)) *
           inv(common(g, v1, v3) - adj(g, v3, v0)) * inv(g.degree(v2) - 1);
    }
  }
  return s;
}

double length_four(const Graph& g, Vertex v0, Vertex v4) {
  double s = 0.0;
  for (Vertex v1 : g.neighbors(v0)) {
    for (Vertex v2 : g.neighbors(v1)) {
      if (v2 == v0 || v2 == v4) continue;
      for (Vertex v3 : g.neighbors(v2)) {
        if (v3 == v1 || !g.has_edge(v3, v4)) continue;
        s += inv(g.degree(v0)) * inv(g.degree(v1) - 1 - adj(g, v1, v4)) *
             inv(common(g, v2, v4) - adj(g, v4, v1)) * inv(g.degree(v3) - 1);
      }
    }
  }
  return s;
}

// Sum for n >= 5 over v_1..v_{n-1}; path holds v_0..v_k.
double general_sum(const Graph& g, std::vector<Vertex>& path, int n, Vertex vn,
                   double weight, WalkReading reading) {
  const int k = static_cast<int>(path.size()) - 1;
  if (k == n - 3) {
    // Choose v_{n-2} and v_{n-1}.
    const Vertex a = path[n - 3];
    const Vertex before = path[n - 4];
    double s = 0.0;
    for (Vertex b : g.neighbors(a)) {  // v_{n-2}
      if (b == before || b == vn) continue;
      const int sub = reading == WalkReading::kAsPrinted ? adj(g, a, vn) : adj(g, b, vn);
      const double f = weight * inv(g.degree(a) - 1 - adj(g, a, vn)) *
                       inv(common(g, b, vn) - sub);
      for (Vertex c : g.neighbors(b)) {  // v_{n-1}
        if (c == a || !g.has_edge(c, vn)) continue;
        s += f * inv(g.degree(c) - 1);
      }
    }
    return s;
  }
  double s = 0.0;
  const Vertex cur = path.back();
  for (Vertex next : g.neighbors(cur)) {
    if (k >= 1 && next == path[k - 1]) continue;
    // Factor 1/(deg v_{i-1} - 1) for i = k + 1 when 2 <= i <= n - 3.
    const double w = (k + 1 >= 2) ? weight * inv(g.degree(cur) - 1) : weight;
    path.push_back(next);
    s += general_sum(g, path, n, vn, w, reading);
    path.pop_back();
  }
  return s;
}

}  // namespace

double exact_pn(const Graph& g, const WalkQuery& q) {
  validate(g, q);
  return propagate<double>(g, q);
}

Rational exact_pn_rational(const Graph& g, const WalkQuery& q) {
  validate(g, q);
  return propagate<Rational>(g, q);
}

double closed_form_pn(const Graph& g, const WalkQuery& q, WalkReading reading) {
  validate(g, q);
  const Vertex v0 = q.source;
  const Vertex vn = q.target;
  switch (q.length) {
    case 1:
      return static_cast<double>(adj(g, v0, vn)) / g.degree(v0);
    case 2: {
      if (v0 == vn) return 0.0;
      double s = 0.0;
      for (Vertex v1 : g.neighbors(v0))
        if (g.has_edge(v1, vn)) s += inv(g.degree(v0)) * inv(g.degree(v1) - 1);
      return s;
    }
    case 3:
      return length_three(g, v0, vn);
    case 4:
      return length_four(g, v0, vn);
    default: {
      std::vector<Vertex> path{v0};
      return general_sum(g, path, q.length, vn, inv(g.degree(v0)), reading);
    }
  }
}

WalkEstimate simulate(const Graph& g, const WalkQuery& q, std::uint64_t samples,
                      std::uint64_t seed) {
  validate(g, q);
  if (samples == 0) throw PreconditionError("simulate needs at least one sample");
  std::mt19937_64 rng(seed);
  std::uint64_t hits = 0;
  for (std::uint64_t s = 0; s < samples; ++s) {
    Vertex prev = q.source;
    auto nb0 = g.neighbors(q.source);
    Vertex cur = nb0[std::uniform_int_distribution<std::size_t>(0, nb0.size() - 1)(rng)];
    for (int step = 1; step < q.length; ++step) {
      const auto nb = g.neighbors(cur);
      // Uniform over neighbours other than prev: draw from deg - 1 slots.
      std::size_t pick =
          std::uniform_int_distribution<std::size_t>(0, nb.size() - 2)(rng);
      const auto skip = static_cast<std::size_t>(
          std::lower_bound(nb.begin(), nb.end(), prev) - nb.begin());
      if (pick >= skip) ++pick;
      prev = cur;
      cur = nb[pick];
    }
    if (cur == q.target) ++hits;
  }
  WalkEstimate e;
  e.samples = samples;
  e.p_hat = static_cast<double>(hits) / static_cast<double>(samples);
  e.stderr_ = std::sqrt(e.p_hat * (1.0 - e.p_hat) / static_cast<double>(samples));
  return e;
}

}  // namespace nbspec
