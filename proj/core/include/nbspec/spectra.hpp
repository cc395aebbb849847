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

#ifndef NBSPEC_SPECTRA_HPP
#define NBSPEC_SPECTRA_HPP

#include <compare>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nbspec/matrix.hpp"

namespace nbspec {

using Complex = std::complex<double>;

struct ComplexSpectrum {
  std::vector<Complex> values;

  std::size_t size() const noexcept { return values.size(); }
  Complex sum() const;
};

/// All eigenvalues of a real square matrix, with algebraic multiplicity.
///
/// Balancing (row/column isolation, then power-of-two scaling), Householder
/// reduction to upper Hessenberg form and the Francis implicit double-shift
/// QR iteration with exceptional shifts. Throws SolverError when the total
/// number of QR sweeps exceeds 40 * dimension.
ComplexSpectrum eigenvalues(const DenseMatrix& m);

// Right eigenvector for an eigenvalue estimate, by shifted inverse iteration
// (three steps from a fixed pseudo-random start). Normalized to unit 2-norm.
std::vector<Complex> eigenvector(const DenseMatrix& m, Complex lambda);

// Infinity-norm residual of (m - lambda) x divided by the infinity norm of x.
double eigen_residual(const DenseMatrix& m, Complex lambda,
                      const std::vector<Complex>& x);

enum class Operator { kA, kL, kNBA, kNBL };

std::string_view to_string(Operator op);
// Accepts a, l, nba, nbl (any case).
std::optional<Operator> parse_operator(std::string_view s);

inline constexpr int kDefaultPrecision = 6;

/// Sorted multiset of eigenvalues rounded half away from zero to a fixed
/// number of decimals, stored as scaled integers.
struct SpectralFingerprint {
  Operator tag = Operator::kA;
  std::size_t dimension = 0;
  int precision = kDefaultPrecision;
  std::vector<std::pair<std::int64_t, std::int64_t>> rounded;

  bool operator==(const SpectralFingerprint&) const = default;
  auto operator<=>(const SpectralFingerprint&) const = default;

  // "(re,im);(re,im);..." with fixed decimals.
  std::string serialize() const;
};

SpectralFingerprint fingerprint(const ComplexSpectrum& spec, Operator tag,
                                int precision = kDefaultPrecision);

// Equality of the rounded multisets regardless of tag and dimension.
bool same_rounded_multiset(const SpectralFingerprint& a, const SpectralFingerprint& b);

// Applies lambda -> a + b * lambda to every value.
ComplexSpectrum affine_map(const ComplexSpectrum& s, double a, double b);

// min |1 - lambda|; +infinity for an empty spectrum.
double spectral_gap_from_one(const ComplexSpectrum& s);
// max |lambda|; 0 for an empty spectrum.
double spectral_radius(const ComplexSpectrum& s);

// Number of values within tol of mu.
std::size_t count_near(const ComplexSpectrum& s, Complex mu, double tol);
inline bool contains(const ComplexSpectrum& s, Complex mu, double tol = 1e-6) {
  return count_near(s, mu, tol) > 0;
}

// Whether a perfect matching between the two multisets pairs every value
// with one at distance <= tol.
bool multisets_match(const std::vector<Complex>& a, const std::vector<Complex>& b,
                     double tol);

// Smallest tol for which multisets_match holds (bottleneck distance);
// +infinity when sizes differ.
double matching_distance(const std::vector<Complex>& a, const std::vector<Complex>& b);

// Whether the non-real values can be paired with their conjugates within tol.
bool conjugate_closed(const ComplexSpectrum& s, double tol);

}  // namespace nbspec

#endif  // NBSPEC_SPECTRA_HPP
