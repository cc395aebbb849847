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

#ifndef NBSPEC_THEORY_HPP
#define NBSPEC_THEORY_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "nbspec/graph.hpp"
#include "nbspec/nb.hpp"
#include "nbspec/spectra.hpp"

namespace nbspec {

// Values with |imag| above this are treated as non-real.
inline constexpr double kNonRealTol = 1e-6;
inline constexpr double kCertifyTol = 1e-10;

/// Cycle c_1..c_l of G with no chord.
struct ChordlessCycle {
  std::vector<Vertex> vertices;

  int length() const noexcept { return static_cast<int>(vertices.size()); }
};

bool is_chordless_cycle(const Graph& g, const ChordlessCycle& c);

// Each chordless cycle of length 3..max_len once, starting at its smallest
// vertex with the smaller neighbour second.
std::vector<ChordlessCycle> find_chordless_cycles(const Graph& g, int max_len);

// Rotation by k followed by optional reversal.
ChordlessCycle relabel_cycle(const ChordlessCycle& c, int rotate, bool reverse);

enum class Sign { kMinus, kPlus };

struct EigenpairCertificate {
  double lambda = 0.0;
  std::vector<double> f;     // one value per NB node
  std::vector<int> support;  // sorted NB node indices of the cycle lifts
  double residual = 0.0;     // ||Lf - lambda f||_inf / ||f||_inf
  bool certified = false;    // residual <= kCertifyTol and f vanishes off support
  ChordlessCycle labeling;   // labeling used to build f
};

// Indices of [c_i, c_{i+1}] (forward) and [c_{i+1}, c_i] (backward), i = 0..l-1.
struct CycleLift {
  std::vector<int> forward;
  std::vector<int> backward;
};
CycleLift lift_cycle(const OrientedEdgeList& oe, const ChordlessCycle& c);

// Exact eigenvalue multiset of B P: {deg v - 1} and -1 with multiplicity 2M - N.
ComplexSpectrum ap_spectrum_exact(const Graph& g);

struct GapReport {
  double epsilon = 0.0;
  double bound = 0.0;
  bool tight = false;
  bool pass = false;
};
GapReport check_gap_bound(const Graph& g);

// Constant-degree cycle: f = 1 on the forward lift, -1 on the backward lift,
// sign-flipped at odd positions for the plus case. lambda = 1 -/+ 1/(d-1).
EigenpairCertificate cycle_eigenpair_regular(const Graph& g, const ChordlessCycle& c,
                                             int d, Sign sign);

// One vertex of degree d > 2, the rest of degree 2.
// lambda = 1 -/+ (d-1)^(-1/l).
EigenpairCertificate cycle_eigenpair_hub(const Graph& g, const ChordlessCycle& c,
                                         int d, Sign sign);

struct SupportAnalysis {
  double mu = 0.0;  // l-th root of prod (deg c_i - 1)
  // Rotations/reflections with deg c_1 > 2 that satisfy the balance condition.
  std::vector<ChordlessCycle> satisfying_labelings;
  int labelings_tried = 0;
  // Null-space dimension of the restricted problem at lambda = 1 - 1/mu.
  int supported_nullity = 0;
  // Whether any eigenvalue whatsoever admits an eigenvector supported on
  // the two lifts (restricted system checked at every candidate lambda).
  bool any_supported_eigenvector = false;
};

// Balance condition and restricted-system ranks for a cycle.
SupportAnalysis analyze_cycle_support(const Graph& g, const ChordlessCycle& c);

/// Eigenpair (1 - 1/mu, f) supported on the two lifts of c, when the product
/// balance condition holds for some admissible labeling. Throws
/// PreconditionError when g is a cycle graph or min degree < 2.
std::optional<EigenpairCertificate> cycle_support_eigenpair(const Graph& g,
                                                            const ChordlessCycle& c);

struct IharaBassReport {
  double max_residual = 0.0;          // identity with (1 - t^2)^{M-N} det(I - tA + t^2 (D - I))
  double max_residual_printed = 0.0;  // same with -t^2 (D - I)
  int trials = 0;
  bool pass = false;
};

double ihara_bass_lhs(const Graph& g, double t);
double ihara_bass_rhs(const Graph& g, double t, bool printed_sign = false);

IharaBassReport ihara_bass_check(const Graph& g, int trials, std::uint64_t seed = 1);

struct PtReport {
  double laplacian_residual = 0.0;  // ||L^T - P L P||_inf
  double adjacency_residual = 0.0;  // ||B^T - P B P||_inf
  double max_isotropy = 0.0;        // max |x^H P x| / ||x||^2 over non-real pairs
  double max_eigen_residual = 0.0;
  int nonreal_pairs = 0;
  bool pass = false;
};
PtReport check_pt_and_padjoint(const Graph& g);

struct ConnectivityReport {
  bool cycle_graph = false;
  bool two_independent_cycles = false;  // M > N
  int weak_components = 0;
  int strong_components = 0;
  bool pass = false;
};
ConnectivityReport check_connectivity_theorem(const Graph& g);

struct BipartiteReport {
  bool graph_bipartite = false;
  bool nb_bipartite = false;
  bool nb_odd_directed_cycle = false;
  bool spectrum_symmetric = false;  // about re = 1
  bool has_two = false;
  bool pass = false;
};
BipartiteReport check_bipartite(const Graph& g);

struct StructuralReport {
  double trace_residual = 0.0;      // |trace L - 2M|
  double eigen_sum_residual = 0.0;  // |sum lambda - 2M| / 2M
  double disc_excess = 0.0;         // max(|lambda - 1| - 1, 0)
  double real_range_excess = 0.0;   // distance of real values outside [0, 2]
  bool zero_present = false;
  int zero_multiplicity = 0;  // |lambda| < 1e-6
  int weak_components = 0;
  bool bipartite = false;
  bool bipartite_ok = true;  // symmetry and 2 in spectrum when bipartite
  double pt_residual = 0.0;
  double max_isotropy = 0.0;
  bool conjugate_closed = false;
  bool pass = false;
};
StructuralReport check_structural_invariants(const Graph& g);

}  // namespace nbspec

#endif  // NBSPEC_THEORY_HPP
