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

#include "nbspec/census.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>
#include <tuple>

#include "nbspec/errors.hpp"
#include "nbspec/graph6.hpp"

namespace nbspec {
namespace {

using GroupKey = std::pair<int, int>;

GroupKey group_key(const CensusRecord& r, Grouping g) {
  switch (g) {
    case Grouping::kN:
      return {r.n, -1};
    case Grouping::kNM:
      return {r.n, r.m};
    case Grouping::kM:
      return {-1, r.m};
    case Grouping::kGlobal:
      return {-1, -1};
  }
  return {-1, -1};
}

int count_near_midpoint(const ComplexSpectrum& s, int precision) {
  const double scale = std::pow(10.0, precision);
  const double tol = 1e-9 * scale;
  int hits = 0;
  for (const Complex& v : s.values) {
    for (double x : {v.real(), v.imag()}) {
      const double y = std::abs(x) * scale;
      if (std::abs(y - std::floor(y) - 0.5) < tol) ++hits;
    }
  }
  return hits;
}

std::string pct(const std::optional<double>& p) {
  if (!p) return "---";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", *p);
  return buf;
}

}  // namespace

std::string_view to_string(Grouping g) {
  switch (g) {
    case Grouping::kN:
      return "n";
    case Grouping::kNM:
      return "nm";
    case Grouping::kM:
      return "m";
    case Grouping::kGlobal:
      return "global";
  }
  return "?";
}

std::optional<Grouping> parse_grouping(std::string_view s) {
  if (s == "n") return Grouping::kN;
  if (s == "nm") return Grouping::kNM;
  if (s == "m") return Grouping::kM;
  if (s == "global") return Grouping::kGlobal;
  return std::nullopt;
}

std::optional<OutputFormat> parse_format(std::string_view s) {
  if (s == "csv") return OutputFormat::kCsv;
  if (s == "md") return OutputFormat::kMarkdown;
  if (s == "json") return OutputFormat::kJson;
  return std::nullopt;
}

CensusRecord make_record(const Graph& g, const CensusOptions& opts) {
  CensusRecord r;
  r.graph6 = write_graph6(g);
  r.n = g.vertex_count();
  r.m = g.edge_count();
  const Graph core = remove_isolated(g);
  r.nb_n = core.vertex_count();
  const NbGraph nb = build_nb_graph(core);
  try {
    for (Operator op : opts.operators) {
      ComplexSpectrum s;
      switch (op) {
        case Operator::kA:
          s = eigenvalues(adjacency_matrix(g));
          break;
        case Operator::kL:
          s = eigenvalues(rw_laplacian(g, opts.isolated));
          break;
        case Operator::kNBA:
          s = eigenvalues(nb_adjacency(nb));
          break;
        case Operator::kNBL:
          s = eigenvalues(nb_laplacian_tilde(nb, opts.tilde));
          break;
      }
      r.near_boundary += count_near_midpoint(s, opts.precision);
      r.fingerprints.emplace(op, fingerprint(s, op, opts.precision));
    }
  } catch (const SolverError& e) {
    throw SolverError(std::string(e.what()) + " (graph " + r.graph6 + ")", e.dimension());
  }
  return r;
}

CensusTable run_census(std::span<const Graph> corpus, const CensusOptions& opts) {
  CensusTable t;
  t.options = opts;
  t.records.resize(corpus.size());
  const unsigned workers = std::max(1U, opts.workers);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto work = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= corpus.size()) return;
      try {
        t.records[i] = make_record(corpus[i], opts);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mu);
        if (!failure) failure = std::current_exception();
        next.store(corpus.size());
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);

  std::sort(t.records.begin(), t.records.end(),
            [](const CensusRecord& a, const CensusRecord& b) {
              return std::tie(a.n, a.m, a.graph6) < std::tie(b.n, b.m, b.graph6);
            });
  for (std::size_t i = 1; i < t.records.size(); ++i) {
    if (t.records[i].graph6 == t.records[i - 1].graph6) {
      throw PreconditionError("corpus contains graph " + t.records[i].graph6 + " twice");
    }
  }

  for (Operator op : opts.operators) {
    const Grouping g = opts.grouping_for(op);
    std::map<std::pair<GroupKey, const SpectralFingerprint*>, std::size_t,
             bool (*)(const std::pair<GroupKey, const SpectralFingerprint*>&,
                      const std::pair<GroupKey, const SpectralFingerprint*>&)>
        index([](const auto& a, const auto& b) {
          if (a.first != b.first) return a.first < b.first;
          return a.second->rounded < b.second->rounded;
        });
    auto& classes = t.classes[op];
    auto& class_of = t.class_of[op];
    class_of.resize(t.records.size());
    for (std::size_t i = 0; i < t.records.size(); ++i) {
      const CensusRecord& r = t.records[i];
      const auto key = std::make_pair(group_key(r, g), &r.fingerprints.at(op));
      auto [it, inserted] = index.emplace(key, classes.size());
      if (inserted) classes.emplace_back();
      classes[it->second].members.push_back(i);
      class_of[i] = it->second;
    }
  }
  return t;
}

std::optional<double> CensusRow::pair_percentage(Operator op) const {
  const auto nd = not_determined.find(op);
  if (nd == not_determined.end() || nd->second == 0) return std::nullopt;
  const auto p = in_pairs.find(op);
  const double pairs = p == in_pairs.end() ? 0.0 : static_cast<double>(p->second);
  return 100.0 * pairs / static_cast<double>(nd->second);
}

std::vector<CensusRow> census_rows(const CensusTable& t, RowAxis axis) {
  std::map<int, CensusRow> rows;
  for (std::size_t i = 0; i < t.records.size(); ++i) {
    const CensusRecord& r = t.records[i];
    const int key = axis == RowAxis::kN ? r.n : r.m;
    CensusRow& row = rows[key];
    row.key = key;
    row.label = std::to_string(key);
    ++row.universe;
    for (Operator op : t.options.operators) {
      const std::size_t size =
          t.classes.at(op)[t.class_of.at(op)[i]].members.size();
      row.not_determined[op] += size >= 2 ? 1 : 0;
      row.in_pairs[op] += size == 2 ? 1 : 0;
      ++row.class_sizes[op][size];
    }
  }
  std::vector<CensusRow> out;
  for (auto& [k, row] : rows) out.push_back(std::move(row));
  return out;
}

CensusRow merge_rows(std::span<const CensusRow> rows, int lo, int hi,
                     const std::string& label) {
  CensusRow m;
  m.key = hi;
  m.label = label;
  for (const CensusRow& r : rows) {
    if (r.key < lo || r.key > hi) continue;
    m.universe += r.universe;
    for (const auto& [op, v] : r.not_determined) m.not_determined[op] += v;
    for (const auto& [op, v] : r.in_pairs) m.in_pairs[op] += v;
    for (const auto& [op, hist] : r.class_sizes)
      for (const auto& [size, count] : hist) m.class_sizes[op][size] += count;
  }
  return m;
}

std::vector<CensusRow> class_size_report(const CensusTable& t) {
  return census_rows(t, RowAxis::kN);
}

std::vector<CensusRow> by_edges_report(const CensusTable& t) {
  return census_rows(t, RowAxis::kM);
}

std::vector<std::vector<std::string>> list_mates(const CensusTable& t, Operator op) {
  std::vector<std::vector<std::string>> out;
  const auto it = t.classes.find(op);
  if (it == t.classes.end()) return out;
  for (const CospectralClass& c : it->second) {
    if (c.members.size() < 2) continue;
    std::vector<std::string> names;
    for (std::size_t i : c.members) names.push_back(t.records[i].graph6);
    std::sort(names.begin(), names.end());
    out.push_back(std::move(names));
  }
  std::sort(out.begin(), out.end());
  return out;
}

nlohmann::json census_metadata(const CensusOptions& opts) {
  nlohmann::json grouping = nlohmann::json::object();
  for (Operator op : opts.operators) {
    grouping[std::string(to_string(op))] = std::string(to_string(opts.grouping_for(op)));
  }
  return {
      {"precision", opts.precision},
      {"rounding", "half-away-from-zero"},
      {"tilde_convention", std::string(to_string(opts.tilde))},
      {"isolated_vertex_L", std::string(to_string(opts.isolated))},
      {"nb_degree0_removed", true},
      {"grouping", grouping},
  };
}

std::string format_rows(const CensusTable& t, std::span<const CensusRow> rows,
                        OutputFormat fmt, const std::string& axis_name) {
  const auto& ops = t.options.operators;
  const nlohmann::json meta = census_metadata(t.options);
  std::ostringstream os;
  if (fmt == OutputFormat::kJson) {
    nlohmann::json j;
    j["metadata"] = meta;
    j["axis"] = axis_name;
    j["rows"] = nlohmann::json::array();
    for (const CensusRow& r : rows) {
      nlohmann::json row{{"label", r.label}, {"graphs", r.universe}};
      for (Operator op : ops) {
        const std::string name(to_string(op));
        row["not_determined"][name] = r.not_determined.count(op) ? r.not_determined.at(op) : 0;
        const auto p = r.pair_percentage(op);
        row["pair_percentage"][name] = p ? nlohmann::json(*p) : nlohmann::json(nullptr);
        nlohmann::json hist = nlohmann::json::object();
        if (r.class_sizes.count(op)) {
          for (const auto& [size, count] : r.class_sizes.at(op)) {
            hist[std::to_string(size)] = count;
          }
        }
        row["class_sizes"][name] = hist;
      }
      j["rows"].push_back(row);
    }
    os << j.dump(2) << '\n';
    return os.str();
  }
  const bool md = fmt == OutputFormat::kMarkdown;
  const std::string sep = md ? " | " : ",";
  auto line = [&](const std::vector<std::string>& cells) {
    if (md) os << "| ";
    for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? sep : "") << cells[i];
    if (md) os << " |";
    os << '\n';
  };
  auto rule = [&](std::size_t n) {
    if (!md) return;
    os << '|';
    for (std::size_t i = 0; i < n; ++i) os << "---|";
    os << '\n';
  };
  os << (md ? "<!-- " : "# ") << meta.dump() << (md ? " -->" : "") << '\n';
  if (md) os << '\n';
  std::vector<std::string> head{axis_name, "graphs"};
  for (Operator op : ops) head.emplace_back(to_string(op));
  line(head);
  rule(head.size());
  for (const CensusRow& r : rows) {
    std::vector<std::string> cells{r.label, std::to_string(r.universe)};
    for (Operator op : ops) {
      cells.push_back(std::to_string(r.not_determined.count(op) ? r.not_determined.at(op) : 0));
    }
    line(cells);
  }
  os << '\n';
  std::vector<std::string> head2{axis_name};
  for (Operator op : ops) head2.push_back("pairs% " + std::string(to_string(op)));
  line(head2);
  rule(head2.size());
  for (const CensusRow& r : rows) {
    std::vector<std::string> cells{r.label};
    for (Operator op : ops) cells.push_back(pct(r.pair_percentage(op)));
    line(cells);
  }
  return os.str();
}

}  // namespace nbspec
