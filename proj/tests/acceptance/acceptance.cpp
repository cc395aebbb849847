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

// Acceptance criteria runner. Prints one PASS/FAIL line per item and exits
// nonzero when any item of the selected criteria fails.
//
//   nbspec_acceptance [--criterion K]...
//
// NBSPEC_CORPUS8 names a graph6 file with the minimum-degree-2 graphs on 8
// vertices; without it the corpus is enumerated in process.
// NBSPEC_ACCEPTANCE_N9=1 adds the optional N = 9 row of criterion 1.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "nbspec/census.hpp"
#include "nbspec/families.hpp"
#include "nbspec/generate.hpp"
#include "nbspec/graph6.hpp"
#include "nbspec/nb.hpp"
#include "nbspec/spectra.hpp"
#include "nbspec/theory.hpp"
#include "nbspec/walks.hpp"

namespace {

using namespace nbspec;

int g_failures = 0;

void line(bool pass, const std::string& id, const std::string& detail) {
  std::printf("[%s] %s: %s\n", pass ? "PASS" : "FAIL", id.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

std::vector<Graph> min2_corpus(int n) {
  if (n <= kMaxBuiltinOrder) return generate_nonisomorphic(n, 2).drain();
  if (n == 8) {
    if (const char* path = std::getenv("NBSPEC_CORPUS8")) return read_graph6_file(path);
  }
  return enumerate_graphs(n, 2);
}

std::vector<Graph> all_corpus(int n) { return generate_nonisomorphic(n).drain(); }

std::vector<Graph> concat(std::vector<std::vector<Graph>> parts) {
  std::vector<Graph> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

unsigned workers() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

struct RowExpect {
  std::string label;
  int lo, hi;
  std::size_t universe;
  std::array<std::size_t, 4> counts;  // A, L, NBA, NBL
};

// Compares one census row; one line per operator column.
void compare_row(const std::string& id, const std::vector<CensusRow>& rows,
                 const RowExpect& e) {
  const CensusRow r = merge_rows(rows, e.lo, e.hi, e.label);
  line(r.universe == e.universe, id + " " + e.label + " universe",
       "observed " + std::to_string(r.universe) + ", expected " + std::to_string(e.universe));
  for (std::size_t k = 0; k < 4; ++k) {
    const Operator op = kAllOperators[k];
    const std::size_t got = r.not_determined.count(op) ? r.not_determined.at(op) : 0;
    line(got == e.counts[k], id + " " + e.label + " " + std::string(to_string(op)),
         "not determined observed " + std::to_string(got) + ", expected " +
             std::to_string(e.counts[k]));
  }
}

void compare_pct(const std::string& id, const CensusRow& r, Operator op,
                 std::optional<double> expected) {
  const auto got = r.pair_percentage(op);
  const std::string g = got ? fmt("%.2f", *got) : "---";
  const std::string x = expected ? fmt("%.2f", *expected) : "---";
  line(g == x, id + " " + r.label + " " + std::string(to_string(op)),
       "pairs% observed " + g + ", expected " + x);
}

void criterion1() {
  const auto t0 = std::chrono::steady_clock::now();
  CensusOptions opts;
  opts.workers = workers();
  const CensusTable small = run_census(concat({min2_corpus(4), min2_corpus(5), min2_corpus(6),
                                               min2_corpus(7)}),
                                       opts);
  const auto rows = census_rows(small, RowAxis::kN);
  compare_row("C1", rows, {"N<=6", 4, 6, 76, {0, 2, 0, 0}});
  compare_row("C1", rows, {"N=7", 7, 7, 510, {26, 4, 0, 0}});
  const CensusTable eight = run_census(min2_corpus(8), opts);
  compare_row("C1", census_rows(eight, RowAxis::kN), {"N=8", 8, 8, 7459, {744, 11, 2, 0}});
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  line(secs < 300.0, "C1 runtime N<=8", fmt("%.1f s, limit 300 s", secs));
  if (const char* n9 = std::getenv("NBSPEC_ACCEPTANCE_N9"); n9 && std::string(n9) == "1") {
    const CensusTable nine = run_census(enumerate_graphs(9, 2), opts);
    compare_row("C1", census_rows(nine, RowAxis::kN),
                {"N=9", 9, 9, 197867, {32713, 243, 6, 0}});
  } else {
    std::printf("[SKIP] C1 N=9: optional, set NBSPEC_ACCEPTANCE_N9=1\n");
  }
}

CensusTable all_graphs_census() {
  CensusOptions opts;
  opts.workers = workers();
  return run_census(concat({all_corpus(5), all_corpus(6), all_corpus(7)}), opts);
}

void criterion2() {
  const CensusTable t = all_graphs_census();
  std::printf("       convention: %s, %s, %s\n", census_metadata(t.options).dump().c_str(),
              "A and L grouped by N", "NBA and NBL grouped by (N, M)");
  const auto rows = census_rows(t, RowAxis::kN);
  compare_row("C2", rows, {"N=5", 5, 5, 34, {2, 12, 11, 8}});
  compare_row("C2", rows, {"N=6", 6, 6, 156, {10, 32, 57, 26}});
  compare_row("C2", rows, {"N=7", 7, 7, 1044, {110, 108, 363, 100}});
}

void criterion3() {
  const CensusTable all = all_graphs_census();
  const CensusRow seven = merge_rows(census_rows(all, RowAxis::kN), 7, 7, "all N=7");
  compare_pct("C3", seven, Operator::kA, 94.55);
  compare_pct("C3", seven, Operator::kL, 48.15);
  compare_pct("C3", seven, Operator::kNBA, 16.53);
  compare_pct("C3", seven, Operator::kNBL, 46.00);
  CensusOptions opts;
  opts.workers = workers();
  const CensusTable eight = run_census(min2_corpus(8), opts);
  const CensusRow e = merge_rows(census_rows(eight, RowAxis::kN), 8, 8, "min2 N=8");
  compare_pct("C3", e, Operator::kA, 94.62);
  compare_pct("C3", e, Operator::kL, 72.73);
  compare_pct("C3", e, Operator::kNBA, 100.00);
  compare_pct("C3", e, Operator::kNBL, std::nullopt);
}

double ap_distance(const Graph& g) {
  const DenseMatrix bp =
      multiply(nb_adjacency(build_nb_graph(g)), parity_matrix(g.edge_count()));
  return matching_distance(eigenvalues(bp).values, ap_spectrum_exact(g).values);
}

Graph random_min2(std::mt19937_64& rng) {
  const int n = std::uniform_int_distribution<int>(3, 20)(rng);
  const double p = std::uniform_real_distribution<double>(0.05, 0.5)(rng);
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  std::map<std::pair<int, int>, bool> es;
  for (int i = 0; i < n; ++i) {
    const int a = order[i], b = order[(i + 1) % n];
    es[{std::min(a, b), std::max(a, b)}] = true;
  }
  std::bernoulli_distribution coin(p);
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u)
      if (coin(rng)) es[{u, v}] = true;
  std::vector<Edge> edges;
  for (const auto& [e, _] : es) edges.push_back({e.first, e.second});
  return Graph(n, edges);
}

void criterion4() {
  double worst = 0.0;
  std::size_t count = 0;
  for (int n = 3; n <= 7; ++n) {
    for (const Graph& g : min2_corpus(n)) {
      worst = std::max(worst, ap_distance(g));
      ++count;
    }
  }
  line(worst <= 1e-8, "C4 exhaustive n<=7",
       std::to_string(count) + " graphs, max matching distance " + fmt("%.3e", worst) +
           ", tolerance 1e-8");
  std::mt19937_64 rng(20240601);
  worst = 0.0;
  for (int i = 0; i < 100; ++i) worst = std::max(worst, ap_distance(random_min2(rng)));
  line(worst <= 1e-8, "C4 random n<=20",
       "100 graphs, max matching distance " + fmt("%.3e", worst) + ", tolerance 1e-8");
}

void criterion5() {
  std::size_t graphs = 0, regular = 0, tight_regular = 0, violations = 0;
  double worst_slack = HUGE_VAL;
  for (int n = 3; n <= 8; ++n) {
    for (const Graph& g : min2_corpus(n)) {
      const GapReport r = check_gap_bound(g);
      ++graphs;
      worst_slack = std::min(worst_slack, r.epsilon - r.bound);
      violations += r.pass ? 0 : 1;
      if (is_regular(g)) {
        ++regular;
        tight_regular += std::abs(r.epsilon - r.bound) <= 1e-8 ? 1 : 0;
      }
    }
  }
  line(violations == 0, "C5 bound n<=8",
       std::to_string(graphs) + " graphs, min(epsilon - bound) " + fmt("%.3e", worst_slack) +
           ", tolerance -1e-9");
  line(tight_regular == regular, "C5 equality for regular graphs",
       std::to_string(tight_regular) + " of " + std::to_string(regular) +
           " regular graphs tight within 1e-8");
}

struct CycleTally {
  std::size_t certificates = 0;
  std::size_t bad = 0;
  double worst_residual = 0.0;
  double worst_lambda = 0.0;
};

void certify(CycleTally& t, const EigenpairCertificate& c, double expected) {
  ++t.certificates;
  t.worst_residual = std::max(t.worst_residual, c.residual);
  t.worst_lambda = std::max(t.worst_lambda, std::abs(c.lambda - expected));
  if (!c.certified || c.residual > 1e-10 || std::abs(c.lambda - expected) > 1e-12) ++t.bad;
}

void cycle_suite(CycleTally& reg, CycleTally& hub, CycleTally& sup, const Graph& g,
                 int max_len) {
  const bool cycle_graph = is_cycle_graph(g);
  for (const ChordlessCycle& c : find_chordless_cycles(g, max_len)) {
    const int l = c.length();
    std::vector<int> deg;
    for (Vertex v : c.vertices) deg.push_back(g.degree(v));
    const int d = *std::max_element(deg.begin(), deg.end());
    const auto above = std::count_if(deg.begin(), deg.end(), [](int x) { return x > 2; });
    if (std::all_of(deg.begin(), deg.end(), [&](int x) { return x == d; })) {
      certify(reg, cycle_eigenpair_regular(g, c, d, Sign::kMinus), 1.0 - 1.0 / (d - 1));
      if (l % 2 == 0) {
        certify(reg, cycle_eigenpair_regular(g, c, d, Sign::kPlus), 1.0 + 1.0 / (d - 1));
      }
    } else if (above == 1) {
      const double r = std::pow(d - 1.0, -1.0 / l);
      certify(hub, cycle_eigenpair_hub(g, c, d, Sign::kMinus), 1.0 - r);
      if (l % 2 == 0) certify(hub, cycle_eigenpair_hub(g, c, d, Sign::kPlus), 1.0 + r);
    }
    if (!cycle_graph) {
      double prod = 1.0;
      for (int x : deg) prod *= x - 1;
      const double mu = std::pow(prod, 1.0 / l);
      if (const auto cert = cycle_support_eigenpair(g, c)) certify(sup, *cert, 1.0 - 1.0 / mu);
    }
  }
}

void criterion6() {
  CycleTally reg, hub, sup;
  for (const Graph& g : {families::complete(4), families::complete_bipartite(3, 3),
                         families::bowtie(), families::two_squares()}) {
    cycle_suite(reg, hub, sup, g, g.vertex_count());
  }
  for (int n = 3; n <= 8; ++n) {
    for (const Graph& g : min2_corpus(n)) cycle_suite(reg, hub, sup, g, 6);
  }
  auto report = [](const std::string& id, const CycleTally& t) {
    line(t.bad == 0 && t.certificates > 0, id,
         std::to_string(t.certificates) + " certificates, max residual " +
             fmt("%.3e", t.worst_residual) + " (tol 1e-10), max |lambda - closed form| " +
             fmt("%.3e", t.worst_lambda));
  };
  report("C6 regular cycles", reg);
  report("C6 single-hub cycles", hub);
  report("C6 balanced cycles", sup);
}

void criterion7() {
  double worst = 0.0;
  std::size_t graphs = 0;
  for (int n = 1; n <= 7; ++n) {
    for (const Graph& g : all_corpus(n)) {
      const IharaBassReport r = ihara_bass_check(g, 10, 1);
      worst = std::max(worst, r.max_residual);
      ++graphs;
    }
  }
  line(worst <= 1e-8, "C7 Ihara-Bass n<=7",
       std::to_string(graphs) + " graphs x 10 t, max relative residual " + fmt("%.3e", worst) +
           ", tolerance 1e-8");
}

void criterion8() {
  std::map<int, std::size_t> queries, mismatches, alt_mismatches;
  std::map<int, double> worst;
  for (int n = 3; n <= 7; ++n) {
    for (const Graph& g : min2_corpus(n)) {
      for (int len = 1; len <= 8; ++len) {
        for (Vertex s = 0; s < n; ++s) {
          for (Vertex t = 0; t < n; ++t) {
            const WalkQuery q{s, t, len};
            const double exact = exact_pn(g, q);
            const double printed = closed_form_pn(g, q, WalkReading::kAsPrinted);
            const double err = std::isfinite(printed) ? std::abs(printed - exact) : HUGE_VAL;
            ++queries[len];
            worst[len] = std::max(worst[len], err);
            if (!(err <= 1e-12)) ++mismatches[len];
            if (len >= 5) {
              const double alt = closed_form_pn(g, q, WalkReading::kAlternate);
              if (!(std::isfinite(alt) && std::abs(alt - exact) <= 1e-12)) ++alt_mismatches[len];
            }
          }
        }
      }
    }
  }
  for (int len = 1; len <= 8; ++len) {
    std::string detail = std::to_string(mismatches[len]) + " of " +
                         std::to_string(queries[len]) + " queries differ by more than 1e-12";
    detail += std::isfinite(worst[len]) ? ", max error " + fmt("%.3e", worst[len])
                                        : ", some terms divide by zero";
    if (len >= 5) {
      detail += "; alternate subscript reading: " + std::to_string(alt_mismatches[len]) +
                " differ";
    }
    line(mismatches[len] == 0, "C8 closed form n=" + std::to_string(len), detail);
  }
}

void criterion9() {
  std::size_t graphs = 0, bad = 0;
  double trace = 0, disc = 0, pt = 0, iso = 0;
  for (int n = 3; n <= 7; ++n) {
    for (const Graph& g : min2_corpus(n)) {
      const StructuralReport r = check_structural_invariants(g);
      ++graphs;
      trace = std::max(trace, r.trace_residual);
      disc = std::max(disc, r.disc_excess);
      pt = std::max(pt, r.pt_residual);
      iso = std::max(iso, r.max_isotropy);
      if (!r.pass) {
        ++bad;
        std::printf("       failing graph %s\n", write_graph6(g).c_str());
      }
    }
  }
  line(bad == 0, "C9 structural invariants n<=7",
       std::to_string(graphs) + " graphs; max |tr L - 2M| " + fmt("%.1e", trace) +
           ", disc excess " + fmt("%.1e", disc) + ", PT residual " + fmt("%.1e", pt) +
           ", isotropy " + fmt("%.1e", iso) + "; zero multiplicity = weak components, "
           "bipartite symmetry and 2 in spectrum checked per graph");
}

}  // namespace

int main(int argc, char** argv) {
  const std::map<int, std::function<void()>> criteria = {
      {1, criterion1}, {2, criterion2}, {3, criterion3}, {4, criterion4}, {5, criterion5},
      {6, criterion6}, {7, criterion7}, {8, criterion8}, {9, criterion9}};
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--criterion" && i + 1 < argc) {
      selected.push_back(std::atoi(argv[++i]));
    } else {
      std::fprintf(stderr, "usage: %s [--criterion K]...\n", argv[0]);
      return 2;
    }
  }
  if (selected.empty()) {
    for (const auto& [k, _] : criteria) selected.push_back(k);
  }
  for (int k : selected) {
    const auto it = criteria.find(k);
    if (it == criteria.end()) {
      std::fprintf(stderr, "unknown criterion %d\n", k);
      return 2;
    }
    it->second();
  }
  std::printf("%d failing item(s)\n", g_failures);
  return g_failures == 0 ? 0 : 1;
}
