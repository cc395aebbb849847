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

#ifndef NBSPEC_CENSUS_HPP
#define NBSPEC_CENSUS_HPP

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "nbspec/graph.hpp"
#include "nbspec/nb.hpp"
#include "nbspec/spectra.hpp"

namespace nbspec {

// Which graphs may be mates of each other.
enum class Grouping {
  kN,       // same vertex count
  kNM,      // same vertex and edge count
  kM,       // same edge count, any vertex count
  kGlobal,  // whole corpus
};

std::string_view to_string(Grouping g);
std::optional<Grouping> parse_grouping(std::string_view s);

inline constexpr std::array<Operator, 4> kAllOperators = {Operator::kA, Operator::kL,
                                                          Operator::kNBA, Operator::kNBL};

struct CensusOptions {
  std::vector<Operator> operators{kAllOperators.begin(), kAllOperators.end()};
  // Indexed by Operator. A and L compare graphs of equal order; the NB
  // operators compare graphs of equal order and size.
  std::array<Grouping, 4> grouping{Grouping::kN, Grouping::kN, Grouping::kNM,
                                   Grouping::kNM};
  int precision = kDefaultPrecision;
  TildeConvention tilde = TildeConvention::kLiteral;
  IsolatedConvention isolated = IsolatedConvention::kUnitDiagonal;
  unsigned workers = 1;

  Grouping grouping_for(Operator op) const { return grouping[static_cast<int>(op)]; }
  void set_grouping(Operator op, Grouping g) { grouping[static_cast<int>(op)] = g; }
};

/// Per-graph fingerprints. n and m describe the input graph; NB operators
/// are evaluated after removing degree-0 vertices, which leaves m unchanged.
struct CensusRecord {
  std::string graph6;
  int n = 0;
  int m = 0;
  int nb_n = 0;
  std::map<Operator, SpectralFingerprint> fingerprints;
  // Eigenvalue coordinates within 1e-9 of a rounding midpoint.
  int near_boundary = 0;
};

CensusRecord make_record(const Graph& g, const CensusOptions& opts);

struct CospectralClass {
  std::vector<std::size_t> members;  // indices into CensusTable::records
};

struct CensusTable {
  CensusOptions options;
  std::vector<CensusRecord> records;  // sorted by (n, m, graph6)
  // Classes of size >= 1 per operator, ordered by their smallest member.
  std::map<Operator, std::vector<CospectralClass>> classes;

  // class_of[op][i]: index into classes[op] for record i.
  std::map<Operator, std::vector<std::size_t>> class_of;
};

/// Fingerprints every graph and partitions each operator's fingerprints into
/// cospectrality classes within the configured grouping scope. The result is
/// independent of corpus order and worker count.
CensusTable run_census(std::span<const Graph> corpus, const CensusOptions& opts);

enum class RowAxis { kN, kM };

struct CensusRow {
  int key = 0;          // N or M
  std::string label;    // "7", "<=6", ...
  std::size_t universe = 0;
  std::map<Operator, std::size_t> not_determined;
  std::map<Operator, std::size_t> in_pairs;  // graphs in classes of size exactly 2
  // class size -> number of graphs of this row in classes of that size
  std::map<Operator, std::map<std::size_t, std::size_t>> class_sizes;

  // 100 * in_pairs / not_determined, absent when nothing is undetermined.
  std::optional<double> pair_percentage(Operator op) const;
};

std::vector<CensusRow> census_rows(const CensusTable& t, RowAxis axis);

// Merges the rows with lo <= key <= hi into one labelled row.
CensusRow merge_rows(std::span<const CensusRow> rows, int lo, int hi,
                     const std::string& label);

// Percentages of undetermined graphs lying in classes of size exactly two.
std::vector<CensusRow> class_size_report(const CensusTable& t);

// Rows by edge count. Meaningful when NB operators were grouped by M.
std::vector<CensusRow> by_edges_report(const CensusTable& t);

// Nontrivial classes for one operator, members as sorted graph6 strings.
std::vector<std::vector<std::string>> list_mates(const CensusTable& t, Operator op);

enum class OutputFormat { kCsv, kMarkdown, kJson };
std::optional<OutputFormat> parse_format(std::string_view s);

nlohmann::json census_metadata(const CensusOptions& opts);

// Counts table (universe and undetermined graphs per operator) followed by
// the class-size percentage table.
std::string format_rows(const CensusTable& t, std::span<const CensusRow> rows,
                        OutputFormat fmt, const std::string& axis_name);

}  // namespace nbspec

#endif  // NBSPEC_CENSUS_HPP
