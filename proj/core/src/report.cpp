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

#include "nbspec/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <sstream>

#include "nbspec/errors.hpp"
#include "nbspec/graph6.hpp"
#include "nbspec/nb.hpp"

namespace nbspec {
namespace {

using nlohmann::json;

json finite_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

json cycle_json(const ChordlessCycle& c) { return json(c.vertices); }

CheckResult gap(const Graph& g) {
  const GapReport r = check_gap_bound(g);
  return {"gap", r.pass, to_json(r)};
}

CheckResult ap(const Graph& g) {
  const NbGraph nb = build_nb_graph(g);
  const DenseMatrix bp = multiply(nb_adjacency(nb), parity_matrix(g.edge_count()));
  const ComplexSpectrum numeric = eigenvalues(bp);
  const ComplexSpectrum exact = ap_spectrum_exact(g);
  const double dist = matching_distance(numeric.values, exact.values);
  const bool pass = dist <= 1e-8;
  return {"ap", pass,
          {{"matching_distance", finite_or_null(dist)},
           {"minus_one_multiplicity", 2 * g.edge_count() - g.vertex_count()}}};
}

CheckResult ihara(const Graph& g, const CheckOptions& o) {
  const IharaBassReport r = ihara_bass_check(g, o.ihara_trials, o.seed);
  return {"ihara", r.pass, to_json(r)};
}

CheckResult pt(const Graph& g) {
  const PtReport r = check_pt_and_padjoint(g);
  return {"pt", r.pass, to_json(r)};
}

CheckResult connectivity(const Graph& g) {
  if (!is_connected(g)) {
    return {"connectivity", true,
            {{"applicable", false}, {"reason", "graph is disconnected"}}};
  }
  const ConnectivityReport r = check_connectivity_theorem(g);
  return {"connectivity", r.pass, to_json(r)};
}

CheckResult bipartite(const Graph& g) {
  const BipartiteReport r = check_bipartite(g);
  return {"bipartite", r.pass, to_json(r)};
}

CheckResult structural(const Graph& g) {
  const StructuralReport r = check_structural_invariants(g);
  return {"structural", r.pass, to_json(r)};
}

// Applies every cycle theorem whose hypotheses hold to every chordless cycle.
CheckResult cycles(const Graph& g, const CheckOptions& o) {
  if (g.vertex_count() == 0 || min_degree(g) < 2) {
    throw PreconditionError("cycle checks require minimum degree >= 2");
  }
  const int max_len = o.max_cycle_length > 0 ? o.max_cycle_length : g.vertex_count();
  const bool cycle_graph = is_cycle_graph(g);
  json certs = json::array();
  json unsatisfied = json::array();
  bool pass = true;
  auto add = [&](const char* theorem, const EigenpairCertificate& c) {
    json j = to_json(c);
    j["theorem"] = theorem;
    pass = pass && c.certified;
    certs.push_back(std::move(j));
  };
  const std::vector<ChordlessCycle> found = find_chordless_cycles(g, max_len);
  for (const ChordlessCycle& c : found) {
    std::vector<int> deg;
    for (Vertex v : c.vertices) deg.push_back(g.degree(v));
    const int hi = *std::max_element(deg.begin(), deg.end());
    const auto above_two = std::count_if(deg.begin(), deg.end(), [](int d) { return d > 2; });
    const bool even = c.length() % 2 == 0;
    if (std::all_of(deg.begin(), deg.end(), [&](int d) { return d == hi; })) {
      add("regular-minus", cycle_eigenpair_regular(g, c, hi, Sign::kMinus));
      if (even) add("regular-plus", cycle_eigenpair_regular(g, c, hi, Sign::kPlus));
    } else if (above_two == 1) {
      add("hub-minus", cycle_eigenpair_hub(g, c, hi, Sign::kMinus));
      if (even) add("hub-plus", cycle_eigenpair_hub(g, c, hi, Sign::kPlus));
    }
    if (!cycle_graph) {
      if (auto cert = cycle_support_eigenpair(g, c)) {
        add("support", *cert);
      } else {
        unsatisfied.push_back(cycle_json(c));
      }
    }
  }
  return {"cycles", pass,
          {{"cycles", found.size()},
           {"certificates", certs},
           {"no_balanced_labeling", unsatisfied}}};
}

}  // namespace

json to_json(const GapReport& r) {
  return {{"epsilon", r.epsilon}, {"bound", r.bound}, {"tight", r.tight}, {"pass", r.pass}};
}

json to_json(const IharaBassReport& r) {
  return {{"max_residual", finite_or_null(r.max_residual)},
          {"max_residual_printed_sign", finite_or_null(r.max_residual_printed)},
          {"trials", r.trials},
          {"pass", r.pass}};
}

json to_json(const PtReport& r) {
  return {{"laplacian_residual", r.laplacian_residual},
          {"adjacency_residual", r.adjacency_residual},
          {"max_isotropy", r.max_isotropy},
          {"max_eigen_residual", r.max_eigen_residual},
          {"nonreal_pairs", r.nonreal_pairs},
          {"pass", r.pass}};
}

json to_json(const ConnectivityReport& r) {
  return {{"cycle_graph", r.cycle_graph},
          {"two_independent_cycles", r.two_independent_cycles},
          {"weak_components", r.weak_components},
          {"strong_components", r.strong_components},
          {"pass", r.pass}};
}

json to_json(const BipartiteReport& r) {
  return {{"graph_bipartite", r.graph_bipartite},
          {"nb_bipartite", r.nb_bipartite},
          {"nb_odd_directed_cycle", r.nb_odd_directed_cycle},
          {"spectrum_symmetric", r.spectrum_symmetric},
          {"has_two", r.has_two},
          {"pass", r.pass}};
}

json to_json(const StructuralReport& r) {
  return {{"trace_residual", r.trace_residual},
          {"eigen_sum_residual", r.eigen_sum_residual},
          {"disc_excess", r.disc_excess},
          {"real_range_excess", r.real_range_excess},
          {"zero_present", r.zero_present},
          {"zero_multiplicity", r.zero_multiplicity},
          {"weak_components", r.weak_components},
          {"bipartite", r.bipartite},
          {"bipartite_ok", r.bipartite_ok},
          {"pt_residual", r.pt_residual},
          {"max_isotropy", r.max_isotropy},
          {"conjugate_closed", r.conjugate_closed},
          {"pass", r.pass}};
}

json to_json(const EigenpairCertificate& c) {
  return {{"lambda", c.lambda},
          {"residual", c.residual},
          {"certified", c.certified},
          {"cycle", cycle_json(c.labeling)},
          {"support_size", c.support.size()}};
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = {
      "gap", "ap", "ihara", "pt", "connectivity", "cycles", "bipartite", "structural"};
  return names;
}

CheckResult run_check(const Graph& g, std::string_view name, const CheckOptions& opts) {
  if (std::find(check_names().begin(), check_names().end(), name) == check_names().end()) {
    throw PreconditionError("unknown check '" + std::string(name) + "'");
  }
  try {
    if (name == "gap") return gap(g);
    if (name == "ap") return ap(g);
    if (name == "ihara") return ihara(g, opts);
    if (name == "pt") return pt(g);
    if (name == "connectivity") return connectivity(g);
    if (name == "cycles") return cycles(g, opts);
    if (name == "bipartite") return bipartite(g);
    return structural(g);
  } catch (const std::exception& e) {
    return {std::string(name), false, {{"error", e.what()}}};
  }
}

json check_report(const Graph& g, const std::vector<std::string>& names,
                  const CheckOptions& opts) {
  json checks = json::array();
  json failures = json::array();
  for (const std::string& n : names) {
    CheckResult r = run_check(g, n, opts);
    if (!r.pass) failures.push_back(r.check);
    checks.push_back({{"check", r.check}, {"pass", r.pass}, {"witness", r.witness}});
  }
  return {{"graph6", write_graph6(g)},
          {"pass", failures.empty()},
          {"checks", checks},
          {"failures", failures}};
}

std::string format_fixed(double x, int precision) {
  const long long scaled = std::llround(x * std::pow(10.0, precision));
  const long long mag = std::llabs(scaled);
  long long div = 1;
  for (int i = 0; i < precision; ++i) div *= 10;
  std::string frac = std::to_string(mag % div);
  frac.insert(0, static_cast<std::size_t>(precision) - frac.size(), '0');
  return (scaled < 0 ? "-" : "") + std::to_string(mag / div) + "." + frac;
}

json spectrum_json(const ComplexSpectrum& s, Operator op, int precision) {
  const SpectralFingerprint fp = fingerprint(s, op, precision);
  const double scale = std::pow(10.0, precision);
  json values = json::array();
  for (const auto& [re, im] : fp.rounded) {
    values.push_back({static_cast<double>(re) / scale, static_cast<double>(im) / scale});
  }
  return {{"operator", std::string(to_string(op))},
          {"precision", precision},
          {"rounding", "half-away-from-zero"},
          {"dimension", fp.dimension},
          {"eigenvalues", values}};
}

std::string spectrum_csv(const ComplexSpectrum& s, int precision) {
  const SpectralFingerprint fp = fingerprint(s, Operator::kA, precision);
  const double scale = std::pow(10.0, precision);
  std::ostringstream os;
  os << "re,im\n";
  for (const auto& [re, im] : fp.rounded) {
    os << format_fixed(static_cast<double>(re) / scale, precision) << ','
       << format_fixed(static_cast<double>(im) / scale, precision) << '\n';
  }
  return os.str();
}

WalkRow evaluate_walk(const Graph& g, const WalkQuery& q, std::uint64_t samples,
                      std::uint64_t seed) {
  WalkRow w;
  w.query = q;
  w.exact = exact_pn(g, q);
  w.closed_form = closed_form_pn(g, q);
  if (samples > 0) w.simulated = simulate(g, q, samples, seed);
  return w;
}

json to_json(const Graph& g, const WalkRow& w) {
  return {{"graph6", write_graph6(g)},
          {"source", w.query.source},
          {"target", w.query.target},
          {"n", w.query.length},
          {"exact", w.exact},
          {"closed_form", finite_or_null(w.closed_form)},
          {"simulated", w.simulated.p_hat},
          {"stderr", w.simulated.stderr_}};
}

}  // namespace nbspec
