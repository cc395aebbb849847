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

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "nbspec/census.hpp"
#include "nbspec/errors.hpp"
#include "nbspec/families.hpp"
#include "nbspec/generate.hpp"
#include "nbspec/graph6.hpp"
#include "oracles.hpp"

namespace nbspec {
namespace {

std::vector<Graph> corpus(int lo, int hi, int min_degree) {
  std::vector<Graph> out;
  for (int n = lo; n <= hi; ++n) {
    for (Graph& g : generate_nonisomorphic(n, min_degree).drain()) out.push_back(std::move(g));
  }
  return out;
}

std::map<Operator, std::vector<std::vector<std::string>>> all_mates(const CensusTable& t) {
  std::map<Operator, std::vector<std::vector<std::string>>> m;
  for (Operator op : t.options.operators) m[op] = list_mates(t, op);
  return m;
}

TEST(Census, OrderAndWorkerIndependence) {
  std::vector<Graph> gs = corpus(4, 6, 0);
  CensusOptions opts;
  const CensusTable base = run_census(gs, opts);
  std::mt19937_64 rng(17);
  std::shuffle(gs.begin(), gs.end(), rng);
  opts.workers = 4;
  const CensusTable shuffled = run_census(gs, opts);
  ASSERT_EQ(base.records.size(), shuffled.records.size());
  for (std::size_t i = 0; i < base.records.size(); ++i) {
    EXPECT_EQ(base.records[i].graph6, shuffled.records[i].graph6);
    EXPECT_EQ(base.records[i].fingerprints, shuffled.records[i].fingerprints);
  }
  EXPECT_EQ(all_mates(base), all_mates(shuffled));
  EXPECT_EQ(format_rows(base, census_rows(base, RowAxis::kN), OutputFormat::kJson, "N"),
            format_rows(shuffled, census_rows(shuffled, RowAxis::kN), OutputFormat::kJson, "N"));
}

TEST(Census, TildeConventionsGiveSamePartition) {
  const std::vector<Graph> gs = corpus(4, 7, 2);
  CensusOptions a;
  a.operators = {Operator::kNBL};
  CensusOptions b = a;
  b.tilde = TildeConvention::kIdentityMinus;
  EXPECT_EQ(list_mates(run_census(gs, a), Operator::kNBL),
            list_mates(run_census(gs, b), Operator::kNBL));
}

TEST(Census, CoarserGroupingOnlyMergesClasses) {
  const std::vector<Graph> gs = corpus(4, 7, 0);
  CensusOptions fine;
  fine.operators = {Operator::kNBA, Operator::kNBL};
  CensusOptions coarse = fine;
  coarse.set_grouping(Operator::kNBA, Grouping::kM);
  coarse.set_grouping(Operator::kNBL, Grouping::kM);
  const auto f = merge_rows(census_rows(run_census(gs, fine), RowAxis::kN), 0, 99, "all");
  const auto c = merge_rows(census_rows(run_census(gs, coarse), RowAxis::kN), 0, 99, "all");
  for (Operator op : fine.operators) EXPECT_LE(f.not_determined.at(op), c.not_determined.at(op));
}

TEST(Census, EmptyAndSingleEdgeGraphsAcrossOrders) {
  std::vector<Graph> gs;
  for (int n = 4; n <= 10; ++n) gs.push_back(Graph(n));
  const std::vector<Edge> one{{0, 1}};
  std::vector<Graph> single;
  for (int n = 4; n <= 10; ++n) single.push_back(Graph(n, one));
  gs.insert(gs.end(), single.begin(), single.end());
  CensusOptions opts;
  opts.operators = {Operator::kNBA, Operator::kNBL};
  opts.set_grouping(Operator::kNBA, Grouping::kM);
  opts.set_grouping(Operator::kNBL, Grouping::kM);
  const CensusTable t = run_census(gs, opts);
  const auto rows = by_edges_report(t);
  ASSERT_EQ(rows.size(), 2U);
  for (const CensusRow& r : rows) {
    EXPECT_EQ(r.universe, 7U);
    EXPECT_EQ(r.not_determined.at(Operator::kNBA), 7U);
    EXPECT_EQ(r.not_determined.at(Operator::kNBL), 7U);
  }
}

TEST(Census, NotDeterminedIsSumOfNontrivialClassSizes) {
  const CensusTable t = run_census(corpus(4, 7, 0), CensusOptions{});
  for (const CensusRow& r : census_rows(t, RowAxis::kN)) {
    for (Operator op : t.options.operators) {
      std::size_t sum = 0;
      for (const auto& [size, graphs] : r.class_sizes.at(op))
        if (size >= 2) sum += graphs;
      EXPECT_EQ(sum, r.not_determined.at(op));
      const std::size_t pairs = r.class_sizes.at(op).count(2) ? r.class_sizes.at(op).at(2) : 0;
      EXPECT_EQ(pairs, r.in_pairs.at(op));
    }
  }
}

// Cospectrality from exact characteristic polynomials, compared with the
// rounded-fingerprint classes.
TEST(Census, ClassesMatchExactCharacteristicPolynomials) {
  const std::vector<Graph> gs = corpus(4, 5, 0);
  CensusOptions opts;
  const CensusTable t = run_census(gs, opts);
  for (Operator op : kAllOperators) {
    std::map<std::pair<std::vector<oracle::Rational>, std::pair<int, int>>,
             std::vector<std::string>>
        exact;
    for (const CensusRecord& r : t.records) {
      const Graph g = parse_graph6(r.graph6);
      const Graph core = remove_isolated(g);
      DenseMatrix m;
      if (op == Operator::kA) m = adjacency_matrix(g);
      if (op == Operator::kL) m = rw_laplacian(g);
      if (op == Operator::kNBA) m = nb_adjacency(build_nb_graph(core));
      if (op == Operator::kNBL) m = nb_laplacian_tilde(build_nb_graph(core));
      const bool by_m = opts.grouping_for(op) == Grouping::kNM;
      exact[{oracle::charpoly(m), {r.n, by_m ? r.m : -1}}].push_back(r.graph6);
    }
    std::vector<std::vector<std::string>> expected;
    for (auto& [key, members] : exact) {
      if (members.size() < 2) continue;
      std::sort(members.begin(), members.end());
      expected.push_back(members);
    }
    std::sort(expected.begin(), expected.end());
    EXPECT_EQ(list_mates(t, op), expected) << to_string(op);
  }
}

TEST(Census, Table2RowsThroughSeven) {
  const CensusTable t = run_census(corpus(4, 7, 2), CensusOptions{});
  const auto rows = census_rows(t, RowAxis::kN);
  const CensusRow low = merge_rows(rows, 4, 6, "<=6");
  EXPECT_EQ(low.universe, 76U);
  EXPECT_EQ(low.not_determined.at(Operator::kA), 0U);
  EXPECT_EQ(low.not_determined.at(Operator::kL), 2U);
  EXPECT_EQ(low.not_determined.at(Operator::kNBA), 0U);
  EXPECT_EQ(low.not_determined.at(Operator::kNBL), 0U);
  const CensusRow seven = rows.back();
  EXPECT_EQ(seven.universe, 510U);
  EXPECT_EQ(seven.not_determined.at(Operator::kA), 26U);
  EXPECT_EQ(seven.not_determined.at(Operator::kL), 4U);
  EXPECT_EQ(seven.not_determined.at(Operator::kNBA), 0U);
  EXPECT_EQ(seven.not_determined.at(Operator::kNBL), 0U);
  EXPECT_FALSE(seven.pair_percentage(Operator::kNBL).has_value());
}

TEST(Census, RejectsDuplicates) {
  const std::vector<Graph> gs{families::complete(4), families::complete(4)};
  EXPECT_THROW(run_census(gs, CensusOptions{}), PreconditionError);
}

TEST(Census, FormatsCarryMetadata) {
  const CensusTable t = run_census(corpus(4, 5, 0), CensusOptions{});
  const auto rows = census_rows(t, RowAxis::kN);
  const std::string csv = format_rows(t, rows, OutputFormat::kCsv, "N");
  EXPECT_NE(csv.find("half-away-from-zero"), std::string::npos);
  EXPECT_NE(csv.find("N,graphs,A,L,NBA,NBL"), std::string::npos);
  const std::string md = format_rows(t, rows, OutputFormat::kMarkdown, "N");
  EXPECT_NE(md.find("| 5 | 34 | 2 | 12 |"), std::string::npos);
  const auto j = nlohmann::json::parse(format_rows(t, rows, OutputFormat::kJson, "N"));
  EXPECT_EQ(j["metadata"]["precision"], 6);
  EXPECT_EQ(j["metadata"]["tilde_convention"], "DtB");
  EXPECT_EQ(j["rows"][1]["graphs"], 34);
  EXPECT_EQ(parse_grouping("m"), Grouping::kM);
  EXPECT_FALSE(parse_format("xml").has_value());
}

}  // namespace
}  // namespace nbspec
