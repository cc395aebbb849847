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

#ifndef NBSPEC_REPORT_HPP
#define NBSPEC_REPORT_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "nbspec/graph.hpp"
#include "nbspec/spectra.hpp"
#include "nbspec/theory.hpp"
#include "nbspec/walks.hpp"

namespace nbspec {

nlohmann::json to_json(const GapReport& r);
nlohmann::json to_json(const IharaBassReport& r);
nlohmann::json to_json(const PtReport& r);
nlohmann::json to_json(const ConnectivityReport& r);
nlohmann::json to_json(const BipartiteReport& r);
nlohmann::json to_json(const StructuralReport& r);
nlohmann::json to_json(const EigenpairCertificate& c);

/// Outcome of one named check on one graph. A precondition violation is a
/// failure whose witness carries the error message.
struct CheckResult {
  std::string check;
  bool pass = false;
  nlohmann::json witness;
};

// gap, ap, ihara, pt, connectivity, cycles, bipartite, structural
const std::vector<std::string>& check_names();

struct CheckOptions {
  int ihara_trials = 10;
  std::uint64_t seed = 1;
  int max_cycle_length = 0;  // 0: no limit
};

// Throws PreconditionError for an unknown name.
CheckResult run_check(const Graph& g, std::string_view name,
                      const CheckOptions& opts = {});

// {graph6, pass, checks: [{check, pass, witness}], failures: [names]}
nlohmann::json check_report(const Graph& g, const std::vector<std::string>& names,
                            const CheckOptions& opts = {});

// Eigenvalues rounded half away from zero to precision decimals.
nlohmann::json spectrum_json(const ComplexSpectrum& s, Operator op, int precision);
std::string spectrum_csv(const ComplexSpectrum& s, int precision);

struct WalkRow {
  WalkQuery query;
  double exact = 0.0;
  double closed_form = 0.0;
  WalkEstimate simulated;
};

WalkRow evaluate_walk(const Graph& g, const WalkQuery& q, std::uint64_t samples,
                      std::uint64_t seed);
nlohmann::json to_json(const Graph& g, const WalkRow& w);

// Fixed-point decimal text of x rounded half away from zero.
std::string format_fixed(double x, int precision);

}  // namespace nbspec

#endif  // NBSPEC_REPORT_HPP
