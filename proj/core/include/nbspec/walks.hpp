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

#ifndef NBSPEC_WALKS_HPP
#define NBSPEC_WALKS_HPP

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

#include "nbspec/graph.hpp"

namespace nbspec {

using Rational = boost::multiprecision::cpp_rational;

struct WalkQuery {
  Vertex source = 0;
  Vertex target = 0;
  int length = 1;
};

/// Probability that a non-backtracking random walk of the given length that
/// starts at source ends at target. The first step is uniform over the
/// neighbours of source; every later step is uniform over the neighbours of
/// the current vertex other than the previous one. Computed by propagating
/// mass over oriented edges. Requires min degree >= 2.
double exact_pn(const Graph& g, const WalkQuery& q);
Rational exact_pn_rational(const Graph& g, const WalkQuery& q);

// Vertex-level closed forms for lengths 1..4 and the general expression for
// length >= 5. kAlternate replaces A(v_{n-3}, v_n) in the common-neighbour
// factor of the general expression by A(v_{n-2}, v_n); lengths 1..4 are the
// same under both readings.
enum class WalkReading { kAsPrinted, kAlternate };

// NaN when some term has a zero denominator.
double closed_form_pn(const Graph& g, const WalkQuery& q,
                      WalkReading reading = WalkReading::kAsPrinted);

struct WalkEstimate {
  double p_hat = 0.0;
  double stderr_ = 0.0;
  std::uint64_t samples = 0;
};

// Monte Carlo estimate with a generator seeded from seed alone.
WalkEstimate simulate(const Graph& g, const WalkQuery& q, std::uint64_t samples,
                      std::uint64_t seed);

}  // namespace nbspec

#endif  // NBSPEC_WALKS_HPP
