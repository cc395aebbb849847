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

#include "nbspec/theory.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "nbspec/errors.hpp"

namespace nbspec {
namespace {

void require_min_degree_two(const Graph& g, const char* what) {
  if (g.vertex_count() == 0 || min_degree(g) < 2) {
    throw PreconditionError(std::string(what) + " requires minimum degree >= 2");
  }
}

int wrap(int i, int l) { return ((i % l) + l) % l; }

double residual_of(const DenseMatrix& l, double lambda, const std::vector<double>& f) {
  const std::size_t n = l.rows();
  double res = 0.0;
  double fn = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double s = -lambda * f[i];
    for (std::size_t j = 0; j < n; ++j) s += l(i, j) * f[j];
    res = std::max(res, std::abs(s));
    fn = std::max(fn, std::abs(f[i]));
  }
  return fn == 0.0 ? HUGE_VAL : res / fn;
}

EigenpairCertificate certify(const Graph& g, const ChordlessCycle& c, double lambda,
                             std::vector<double> f) {
  const NbGraph nb = build_nb_graph(g);
  const DenseMatrix l = nb_laplacian(nb);
  const CycleLift lift = lift_cycle(nb.edges(), c);
  EigenpairCertificate cert;
  cert.lambda = lambda;
  cert.support = lift.forward;
  cert.support.insert(cert.support.end(), lift.backward.begin(), lift.backward.end());
  std::sort(cert.support.begin(), cert.support.end());
  bool off_support_zero = true;
  for (int i = 0; i < static_cast<int>(f.size()); ++i) {
    if (f[i] != 0.0 &&
        !std::binary_search(cert.support.begin(), cert.support.end(), i)) {
      off_support_zero = false;
    }
  }
  cert.residual = residual_of(l, lambda, f);
  cert.f = std::move(f);
  cert.certified = off_support_zero && cert.residual <= kCertifyTol;
  cert.labeling = c;
  return cert;
}

// Sign flip on oriented edges leaving c_i for odd 1-based i.
void alternate(std::vector<double>& f, const CycleLift& lift) {
  const int l = static_cast<int>(lift.forward.size());
  for (int i = 0; i < l; i += 2) {
    f[lift.forward[i]] = -f[lift.forward[i]];
    f[lift.backward[wrap(i - 1, l)]] = -f[lift.backward[wrap(i - 1, l)]];
  }
}

void check_cycle(const Graph& g, const ChordlessCycle& c) {
  if (c.length() < 3 || !is_chordless_cycle(g, c)) {
    throw PreconditionError("vertex list is not a chordless cycle of the graph");
  }
}

// Edge-lifted values from the recursions of the support characterization.
// Requires deg c_1 > 2 in the given labeling, or an all-degree-2 cycle.
std::vector<double> support_function(const Graph& g, const ChordlessCycle& c,
                                     const CycleLift& lift, double mu, int size) {
  const int l = c.length();
  std::vector<double> w(static_cast<std::size_t>(l));
  for (int j = 0; j < l; ++j) w[j] = mu / (g.degree(c.vertices[j]) - 1);
  std::vector<double> fwd(static_cast<std::size_t>(l));
  std::vector<double> bwd(static_cast<std::size_t>(l));  // bwd[i] = f([c_i, c_{i-1}])
  fwd[0] = 1.0;
  bwd[0] = -1.0;
  fwd[l - 1] = w[0] * fwd[0];
  for (int i = l - 1; i >= 2; --i) fwd[i - 1] = w[i] * fwd[i];
  for (int i = 0; i + 1 < l; ++i) bwd[i + 1] = w[i] * bwd[i];
  std::vector<double> f(static_cast<std::size_t>(size), 0.0);
  for (int i = 0; i < l; ++i) {
    f[lift.forward[i]] = fwd[i];
    f[lift.backward[wrap(i - 1, l)]] = bwd[i];
  }
  return f;
}

bool balance_condition(const Graph& g, const ChordlessCycle& c, double mu) {
  const int l = c.length();
  std::vector<double> w(static_cast<std::size_t>(l));
  for (int j = 0; j < l; ++j) w[j] = mu / (g.degree(c.vertices[j]) - 1);
  for (int i = 1; i < l; ++i) {
    if (g.degree(c.vertices[i]) <= 2) continue;
    double lhs = w[0];
    for (int j = i + 1; j < l; ++j) lhs *= w[j];
    double rhs = w[0];
    for (int j = i - 1; j >= 1; --j) rhs *= w[j];
    if (std::abs(lhs - rhs) > 1e-12 * std::max(std::abs(lhs), std::abs(rhs))) {
      return false;
    }
  }
  return true;
}

}  // namespace

bool is_chordless_cycle(const Graph& g, const ChordlessCycle& c) {
  const int l = c.length();
  if (l < 3) return false;
  for (Vertex v : c.vertices)
    if (v < 0 || v >= g.vertex_count()) return false;
  for (int i = 0; i < l; ++i)
    for (int j = i + 1; j < l; ++j) {
      if (c.vertices[i] == c.vertices[j]) return false;
      const bool consecutive = j == i + 1 || (i == 0 && j == l - 1);
      if (g.has_edge(c.vertices[i], c.vertices[j]) != consecutive) return false;
    }
  return true;
}

std::vector<ChordlessCycle> find_chordless_cycles(const Graph& g, int max_len) {
  if (max_len < 3) throw PreconditionError("max_len must be at least 3");
  std::vector<ChordlessCycle> out;
  const int n = g.vertex_count();
  std::vector<Vertex> path;
  std::vector<char> on_path(static_cast<std::size_t>(n), 0);

  // Extends path (starting at s = path[0]); every vertex on it is > s.
  auto extend = [&](auto&& self) -> void {
    const Vertex s = path.front();
    const Vertex last = path.back();
    for (Vertex v : g.neighbors(last)) {
      if (v <= s || on_path[v]) continue;
      bool chord = false;
      for (std::size_t k = 1; k + 1 < path.size() && !chord; ++k) {
        chord = g.has_edge(path[k], v);
      }
      if (chord) continue;
      if (path.size() >= 2 && g.has_edge(s, v)) {
        if (path[1] < v &&
            static_cast<int>(path.size()) + 1 <= max_len) {
          ChordlessCycle c;
          c.vertices = path;
          c.vertices.push_back(v);
          out.push_back(std::move(c));
        }
        continue;
      }
      if (static_cast<int>(path.size()) + 1 >= max_len) continue;
      path.push_back(v);
      on_path[v] = 1;
      self(self);
      on_path[v] = 0;
      path.pop_back();
    }
  };
  for (Vertex s = 0; s < n; ++s) {
    path.assign(1, s);
    on_path[s] = 1;
    extend(extend);
    on_path[s] = 0;
  }
  std::sort(out.begin(), out.end(), [](const ChordlessCycle& a, const ChordlessCycle& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.vertices < b.vertices;
  });
  return out;
}

ChordlessCycle relabel_cycle(const ChordlessCycle& c, int rotate, bool reverse) {
  const int l = c.length();
  ChordlessCycle r;
  r.vertices.resize(static_cast<std::size_t>(l));
  for (int i = 0; i < l; ++i) {
    const int src = reverse ? wrap(rotate - i, l) : wrap(rotate + i, l);
    r.vertices[i] = c.vertices[src];
  }
  return r;
}

CycleLift lift_cycle(const OrientedEdgeList& oe, const ChordlessCycle& c) {
  const int l = c.length();
  CycleLift lift;
  for (int i = 0; i < l; ++i) {
    const Vertex a = c.vertices[i];
    const Vertex b = c.vertices[wrap(i + 1, l)];
    const int fw = oe.find(a, b);
    const int bw = oe.find(b, a);
    if (fw < 0 || bw < 0) throw PreconditionError("cycle uses a non-edge");
    lift.forward.push_back(fw);
    lift.backward.push_back(bw);
  }
  return lift;
}

ComplexSpectrum ap_spectrum_exact(const Graph& g) {
  require_min_degree_two(g, "ap_spectrum_exact");
  ComplexSpectrum s;
  for (int d : degrees(g)) s.values.emplace_back(d - 1, 0.0);
  const int minus = 2 * g.edge_count() - g.vertex_count();
  for (int i = 0; i < minus; ++i) s.values.emplace_back(-1.0, 0.0);
  return s;
}

GapReport check_gap_bound(const Graph& g) {
  require_min_degree_two(g, "check_gap_bound");
  GapReport r;
  const ComplexSpectrum s = eigenvalues(nb_laplacian(build_nb_graph(g)));
  r.epsilon = spectral_gap_from_one(s);
  r.bound = 1.0 / (max_degree(g) - 1);
  r.tight = std::abs(r.epsilon - r.bound) < 1e-8;
  r.pass = r.epsilon >= r.bound - 1e-9;
  return r;
}

EigenpairCertificate cycle_eigenpair_regular(const Graph& g, const ChordlessCycle& c,
                                             int d, Sign sign) {
  require_min_degree_two(g, "cycle_eigenpair_regular");
  check_cycle(g, c);
  if (d < 2) throw PreconditionError("degree d must be at least 2");
  for (Vertex v : c.vertices) {
    if (g.degree(v) != d) {
      throw PreconditionError("cycle vertex " + std::to_string(v) + " has degree " +
                              std::to_string(g.degree(v)) + ", expected " +
                              std::to_string(d));
    }
  }
  if (sign == Sign::kPlus && c.length() % 2 != 0) {
    throw PreconditionError("the plus eigenvalue needs an even cycle");
  }
  const OrientedEdgeList oe = orient_edges(g);
  const CycleLift lift = lift_cycle(oe, c);
  std::vector<double> f(static_cast<std::size_t>(oe.size()), 0.0);
  for (int i : lift.forward) f[i] = 1.0;
  for (int i : lift.backward) f[i] = -1.0;
  if (sign == Sign::kPlus) alternate(f, lift);
  const double step = 1.0 / (d - 1);
  return certify(g, c, sign == Sign::kMinus ? 1.0 - step : 1.0 + step, std::move(f));
}

EigenpairCertificate cycle_eigenpair_hub(const Graph& g, const ChordlessCycle& c,
                                         int d, Sign sign) {
  require_min_degree_two(g, "cycle_eigenpair_hub");
  check_cycle(g, c);
  const int l = c.length();
  if (d <= 2) throw PreconditionError("hub degree must exceed 2");
  int hub = -1;
  for (int i = 0; i < l; ++i) {
    const int deg = g.degree(c.vertices[i]);
    if (deg == d && hub < 0) {
      hub = i;
    } else if (deg != 2) {
      throw PreconditionError("cycle must have one vertex of degree d and the rest of degree 2");
    }
  }
  if (hub < 0) throw PreconditionError("no cycle vertex has degree d");
  if (sign == Sign::kPlus && l % 2 != 0) {
    throw PreconditionError("the plus eigenvalue needs an even cycle");
  }
  const ChordlessCycle cc = relabel_cycle(c, hub, false);
  const OrientedEdgeList oe = orient_edges(g);
  const CycleLift lift = lift_cycle(oe, cc);
  const double mu = std::pow(static_cast<double>(d - 1), 1.0 / l);

  std::vector<double> fwd(static_cast<std::size_t>(l));  // f([c_i, c_{i+1}])
  std::vector<double> bwd(static_cast<std::size_t>(l));  // f([c_i, c_{i-1}])
  fwd[0] = 1.0;
  bwd[0] = -1.0;
  fwd[l - 1] = mu / (d - 1);
  bwd[1] = -mu / (d - 1);
  for (int i = l - 1; i >= 2; --i) fwd[i - 1] = mu * fwd[i];
  for (int i = 1; i + 1 < l; ++i) bwd[i + 1] = mu * bwd[i];
  std::vector<double> f(static_cast<std::size_t>(oe.size()), 0.0);
  for (int i = 0; i < l; ++i) {
    f[lift.forward[i]] = fwd[i];
    f[lift.backward[wrap(i - 1, l)]] = bwd[i];
  }
  if (sign == Sign::kPlus) alternate(f, lift);
  return certify(g, cc, sign == Sign::kMinus ? 1.0 - 1.0 / mu : 1.0 + 1.0 / mu,
                 std::move(f));
}

SupportAnalysis analyze_cycle_support(const Graph& g, const ChordlessCycle& c) {
  require_min_degree_two(g, "analyze_cycle_support");
  check_cycle(g, c);
  const int l = c.length();
  SupportAnalysis a;
  double prod = 1.0;
  for (Vertex v : c.vertices) prod *= g.degree(v) - 1;
  a.mu = std::pow(prod, 1.0 / l);
  for (int rot = 0; rot < l; ++rot) {
    for (bool rev : {false, true}) {
      const ChordlessCycle r = relabel_cycle(c, rot, rev);
      if (g.degree(r.vertices[0]) <= 2) continue;
      ++a.labelings_tried;
      if (balance_condition(g, r, a.mu)) a.satisfying_labelings.push_back(r);
    }
  }

  const NbGraph nb = build_nb_graph(g);
  const DenseMatrix lap = nb_laplacian(nb);
  const CycleLift lift = lift_cycle(nb.edges(), c);
  std::vector<int> support = lift.forward;
  support.insert(support.end(), lift.backward.begin(), lift.backward.end());
  const std::size_t rows = lap.rows();
  const std::size_t k = support.size();

  auto restricted_nullity = [&](Complex lambda) {
    ComplexMatrix m(rows, k);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        Complex v = lap(i, support[j]);
        if (static_cast<int>(i) == support[j]) v -= lambda;
        m(i, j) = v;
      }
    return static_cast<int>(k - numeric_rank(std::move(m), 1e-7));
  };
  a.supported_nullity = restricted_nullity(1.0 - 1.0 / a.mu);

  DenseMatrix block(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) block(i, j) = lap(support[i], support[j]);
  for (const Complex& lambda : eigenvalues(block).values) {
    if (restricted_nullity(lambda) > 0) {
      a.any_supported_eigenvector = true;
      break;
    }
  }
  return a;
}

std::optional<EigenpairCertificate> cycle_support_eigenpair(const Graph& g,
                                                            const ChordlessCycle& c) {
  require_min_degree_two(g, "cycle_support_eigenpair");
  if (is_cycle_graph(g)) {
    throw PreconditionError("cycle_support_eigenpair is undefined on a cycle graph");
  }
  check_cycle(g, c);
  const int l = c.length();
  const int size = 2 * g.edge_count();
  const bool all_two = std::all_of(c.vertices.begin(), c.vertices.end(),
                                   [&](Vertex v) { return g.degree(v) == 2; });
  if (all_two) {
    // The cycle is a whole component; mu = 1 and lambda = 0.
    const CycleLift lift = lift_cycle(orient_edges(g), c);
    return certify(g, c, 0.0, support_function(g, c, lift, 1.0, size));
  }
  double prod = 1.0;
  for (Vertex v : c.vertices) prod *= g.degree(v) - 1;
  const double mu = std::pow(prod, 1.0 / l);
  for (int rot = 0; rot < l; ++rot) {
    for (bool rev : {false, true}) {
      const ChordlessCycle r = relabel_cycle(c, rot, rev);
      if (g.degree(r.vertices[0]) <= 2 || !balance_condition(g, r, mu)) continue;
      const CycleLift lift = lift_cycle(orient_edges(g), r);
      return certify(g, r, 1.0 - 1.0 / mu, support_function(g, r, lift, mu, size));
    }
  }
  return std::nullopt;
}

double ihara_bass_lhs(const Graph& g, double t) {
  const DenseMatrix b = nb_adjacency(build_nb_graph(g));
  DenseMatrix m = DenseMatrix::identity(b.rows());
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m(i, j) -= t * b(i, j);
  return determinant(std::move(m));
}

double ihara_bass_rhs(const Graph& g, double t, bool printed_sign) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  DenseMatrix m = DenseMatrix::identity(n);
  const double q = printed_sign ? -t * t : t * t;
  for (const Edge& e : g.edges()) {
    m(e.u, e.v) -= t;
    m(e.v, e.u) -= t;
  }
  for (std::size_t v = 0; v < n; ++v) m(v, v) += q * (g.degree(static_cast<Vertex>(v)) - 1);
  const int power = g.edge_count() - g.vertex_count();
  return std::pow(1.0 - t * t, power) * determinant(std::move(m));
}

IharaBassReport ihara_bass_check(const Graph& g, int trials, std::uint64_t seed) {
  IharaBassReport r;
  r.trials = trials;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> pick(-0.3, 0.3);
  auto rel = [](double a, double b) {
    const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
    return std::abs(a - b) / scale;
  };
  for (int k = 0; k < trials; ++k) {
    const double t = pick(rng);
    const double lhs = ihara_bass_lhs(g, t);
    r.max_residual = std::max(r.max_residual, rel(lhs, ihara_bass_rhs(g, t, false)));
    r.max_residual_printed =
        std::max(r.max_residual_printed, rel(lhs, ihara_bass_rhs(g, t, true)));
  }
  r.pass = r.max_residual <= 1e-8;
  return r;
}

PtReport check_pt_and_padjoint(const Graph& g) {
  require_min_degree_two(g, "check_pt_and_padjoint");
  PtReport r;
  const NbGraph nb = build_nb_graph(g);
  const DenseMatrix l = nb_laplacian(nb);
  const DenseMatrix b = nb_adjacency(nb);
  const DenseMatrix p = parity_matrix(g.edge_count());
  r.laplacian_residual = max_abs_diff(transpose(l), multiply(multiply(p, l), p));
  r.adjacency_residual = max_abs_diff(transpose(b), multiply(multiply(p, b), p));
  const OrientedEdgeList& oe = nb.edges();
  for (const Complex& lambda : eigenvalues(l).values) {
    if (lambda.imag() <= kNonRealTol) continue;  // one per conjugate pair
    const std::vector<Complex> x = eigenvector(l, lambda);
    Complex form{};
    double norm2 = 0.0;
    for (int i = 0; i < oe.size(); ++i) {
      form += std::conj(x[i]) * x[oe.inverse(i)];
      norm2 += std::norm(x[i]);
    }
    r.max_isotropy = std::max(r.max_isotropy, std::abs(form) / norm2);
    r.max_eigen_residual = std::max(r.max_eigen_residual, eigen_residual(l, lambda, x));
    ++r.nonreal_pairs;
  }
  r.pass = r.laplacian_residual <= 1e-14 && r.adjacency_residual <= 1e-14 &&
           r.max_isotropy <= 1e-8;
  return r;
}

ConnectivityReport check_connectivity_theorem(const Graph& g) {
  require_min_degree_two(g, "check_connectivity_theorem");
  if (!is_connected(g)) throw PreconditionError("check_connectivity_theorem needs a connected graph");
  ConnectivityReport r;
  const NbGraph nb = build_nb_graph(g);
  r.cycle_graph = is_cycle_graph(g);
  r.two_independent_cycles = g.edge_count() > g.vertex_count();
  r.weak_components = nb_weak_component_count(nb);
  r.strong_components = nb_strong_components(nb).count;
  if (r.cycle_graph) {
    r.pass = !r.two_independent_cycles && r.weak_components == 2 &&
             r.strong_components == 2;
  } else {
    r.pass = r.two_independent_cycles && r.weak_components == 1 &&
             r.strong_components == 1;
  }
  return r;
}

BipartiteReport check_bipartite(const Graph& g) {
  BipartiteReport r;
  const NbGraph nb = build_nb_graph(g);
  r.graph_bipartite = is_bipartite(g);
  r.nb_bipartite = nb_is_bipartite(nb);
  r.nb_odd_directed_cycle = nb_has_odd_directed_cycle(nb);
  r.pass = r.graph_bipartite == r.nb_bipartite &&
           r.graph_bipartite == !r.nb_odd_directed_cycle;
  if (g.vertex_count() > 0 && min_degree(g) >= 2) {
    const ComplexSpectrum s = eigenvalues(nb_laplacian(nb));
    r.spectrum_symmetric = multisets_match(s.values, affine_map(s, 2.0, -1.0).values, 1e-8);
    r.has_two = contains(s, 2.0, 1e-8);
    if (r.nb_bipartite) r.pass = r.pass && r.spectrum_symmetric && r.has_two;
  }
  return r;
}

StructuralReport check_structural_invariants(const Graph& g) {
  require_min_degree_two(g, "check_structural_invariants");
  StructuralReport r;
  const NbGraph nb = build_nb_graph(g);
  const DenseMatrix l = nb_laplacian(nb);
  const double two_m = 2.0 * g.edge_count();
  const ComplexSpectrum s = eigenvalues(l);
  r.trace_residual = std::abs(trace(l) - two_m);
  r.eigen_sum_residual = std::abs(s.sum() - Complex(two_m, 0.0)) / two_m;
  for (const Complex& v : s.values) {
    r.disc_excess = std::max(r.disc_excess, std::abs(v - 1.0) - 1.0);
    if (std::abs(v.imag()) <= kNonRealTol) {
      r.real_range_excess =
          std::max({r.real_range_excess, -v.real(), v.real() - 2.0});
    }
  }
  r.zero_present = contains(s, 0.0, 1e-8);
  r.zero_multiplicity = static_cast<int>(count_near(s, 0.0, 1e-6));
  r.weak_components = nb_weak_component_count(nb);
  r.conjugate_closed = conjugate_closed(s, 1e-9);
  const BipartiteReport bip = check_bipartite(g);
  r.bipartite = bip.nb_bipartite;
  r.bipartite_ok = !bip.nb_bipartite || (bip.spectrum_symmetric && bip.has_two);
  const PtReport pt = check_pt_and_padjoint(g);
  r.pt_residual = pt.laplacian_residual;
  r.max_isotropy = pt.max_isotropy;
  r.pass = r.trace_residual <= 1e-12 && r.eigen_sum_residual <= 1e-8 &&
           r.disc_excess <= 1e-8 && r.real_range_excess <= 1e-8 && r.zero_present &&
           r.zero_multiplicity == r.weak_components && r.bipartite_ok &&
           r.pt_residual <= 1e-14 && r.max_isotropy <= 1e-8 && r.conjugate_closed;
  return r;
}

}  // namespace nbspec
