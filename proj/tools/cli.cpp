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

#include "cli.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "nbspec/census.hpp"
#include "nbspec/errors.hpp"
#include "nbspec/families.hpp"
#include "nbspec/generate.hpp"
#include "nbspec/graph6.hpp"
#include "nbspec/nb.hpp"
#include "nbspec/report.hpp"
#include "nbspec/spectra.hpp"
#include "nbspec/walks.hpp"

namespace nbspec::cli {
namespace {

using nlohmann::json;

struct GraphSource {
  std::vector<std::string> graph6;
  std::vector<std::string> inputs;
};

void add_graph_source(CLI::App* app, GraphSource& src) {
  app->add_option("-g,--graph", src.graph6, "graph6 record (repeatable)");
  app->add_option("-i,--input", src.inputs, "graph6 file, one record per line")
      ->check(CLI::ExistingFile);
}

std::vector<Graph> load_graphs(const GraphSource& src) {
  std::vector<Graph> out;
  for (const std::string& s : src.graph6) out.push_back(parse_graph6(s));
  for (const std::string& path : src.inputs) {
    std::vector<Graph> part = read_graph6_file(path);
    out.insert(out.end(), std::make_move_iterator(part.begin()),
               std::make_move_iterator(part.end()));
  }
  if (out.empty()) throw CLI::ValidationError("no graphs: pass --graph or --input");
  return out;
}

const std::map<std::string, TildeConvention> kTilde = {
    {"dtb", TildeConvention::kLiteral}, {"i-dtb", TildeConvention::kIdentityMinus}};
const std::map<std::string, IsolatedConvention> kIsolated = {
    {"one", IsolatedConvention::kUnitDiagonal}, {"zero", IsolatedConvention::kZeroDiagonal}};
const std::map<std::string, Operator> kOperators = {
    {"a", Operator::kA}, {"l", Operator::kL}, {"nba", Operator::kNBA}, {"nbl", Operator::kNBL}};
const std::map<std::string, Grouping> kGroupings = {
    {"n", Grouping::kN}, {"nm", Grouping::kNM}, {"m", Grouping::kM}, {"global", Grouping::kGlobal}};

unsigned default_workers() {
  if (const char* env = std::getenv("NBSPEC_WORKERS")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) return static_cast<unsigned>(v);
  }
  return 1;
}

std::string matrix_csv(const DenseMatrix& m) {
  std::ostringstream os;
  char buf[40];
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      std::snprintf(buf, sizeof buf, "%.17g", m(r, c));
      os << (c ? "," : "") << buf;
    }
    os << '\n';
  }
  return os.str();
}

DenseMatrix operator_matrix(const Graph& g, Operator op, TildeConvention tilde,
                            IsolatedConvention isolated) {
  switch (op) {
    case Operator::kA:
      return adjacency_matrix(g);
    case Operator::kL:
      return rw_laplacian(g, isolated);
    case Operator::kNBA:
      return nb_adjacency(build_nb_graph(remove_isolated(g)));
    case Operator::kNBL:
      return nb_laplacian_tilde(build_nb_graph(remove_isolated(g)), tilde);
  }
  throw std::logic_error("unknown operator");
}

std::vector<Graph> generated_corpus(int min_n, int max_n, int min_degree) {
  std::vector<Graph> out;
  for (int n = std::max(min_n, 0); n <= max_n; ++n) {
    std::vector<Graph> part = n <= kMaxBuiltinOrder
                                  ? generate_nonisomorphic(n, min_degree).drain()
                                  : enumerate_graphs(n, min_degree);
    out.insert(out.end(), std::make_move_iterator(part.begin()),
               std::make_move_iterator(part.end()));
  }
  return out;
}

json error_report(const std::string& kind, const std::string& message) {
  return {{"status", "error"}, {"kind", kind}, {"message", message}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Non-backtracking spectra, cycle theorems and cospectrality census"};
  app.name("nbspec");
  app.require_subcommand(1);

  int exit_code = kExitOk;

  // nb build
  GraphSource nb_src;
  std::string nb_matrix = "none";
  std::string nb_format = "json";
  std::string nb_tilde = "i-dtb";
  CLI::App* nb_cmd = app.add_subcommand("nb", "Non-backtracking graph tools");
  nb_cmd->require_subcommand(1);
  CLI::App* nb_build = nb_cmd->add_subcommand("build", "Build the NB graph of each input");
  add_graph_source(nb_build, nb_src);
  nb_build->add_option("--matrix", nb_matrix, "Export a matrix as CSV: b, l, lt, p")
      ->check(CLI::IsMember({"none", "b", "l", "lt", "p"}));
  nb_build->add_option("--format", nb_format)->check(CLI::IsMember({"json", "csv"}));
  nb_build->add_option("--tilde", nb_tilde)->check(CLI::IsMember({"dtb", "i-dtb"}));
  nb_build->callback([&] {
    json all = json::array();
    for (const Graph& g : load_graphs(nb_src)) {
      const NbGraph nb = build_nb_graph(g);
      if (nb_matrix != "none") {
        DenseMatrix m;
        if (nb_matrix == "b") m = nb_adjacency(nb);
        if (nb_matrix == "l") m = nb_laplacian(nb);
        if (nb_matrix == "lt") m = nb_laplacian_tilde(nb, kTilde.at(nb_tilde));
        if (nb_matrix == "p") m = parity_matrix(g.edge_count());
        out << matrix_csv(m);
        continue;
      }
      const OrientedEdgeList& oe = nb.edges();
      if (nb_format == "csv") {
        out << "from_inp,from_out,to_inp,to_out\n";
        for (int i = 0; i < nb.node_count(); ++i) {
          for (int j : nb.successors(i)) {
            out << oe.inp[i] << ',' << oe.out[i] << ',' << oe.inp[j] << ',' << oe.out[j]
                << '\n';
          }
        }
        continue;
      }
      json nodes = json::array();
      json arcs = json::array();
      for (int i = 0; i < nb.node_count(); ++i) {
        nodes.push_back({oe.inp[i], oe.out[i]});
        for (int j : nb.successors(i)) arcs.push_back({i, j});
      }
      all.push_back({{"graph6", write_graph6(g)},
                     {"nodes", nodes},
                     {"arcs", arcs},
                     {"nb_degrees", nb.nb_degrees()}});
    }
    if (nb_matrix == "none" && nb_format == "json") out << all.dump(2) << '\n';
  });

  // spectrum
  GraphSource sp_src;
  std::string sp_op = "nbl";
  std::string sp_format = "json";
  std::string sp_tilde = "i-dtb";
  std::string sp_isolated = "one";
  int sp_precision = kDefaultPrecision;
  CLI::App* sp = app.add_subcommand("spectrum", "Eigenvalues of one operator");
  add_graph_source(sp, sp_src);
  sp->add_option("--operator", sp_op, "a, l, nba or nbl")
      ->check(CLI::IsMember({"a", "l", "nba", "nbl"}, CLI::ignore_case));
  sp->add_option("--precision", sp_precision)->check(CLI::Range(1, 12));
  sp->add_option("--format", sp_format)->check(CLI::IsMember({"json", "csv"}));
  sp->add_option("--tilde", sp_tilde, "NB Laplacian convention: dtb or i-dtb")
      ->check(CLI::IsMember({"dtb", "i-dtb"}));
  sp->add_option("--isolated", sp_isolated, "L diagonal at isolated vertices: one or zero")
      ->check(CLI::IsMember({"one", "zero"}));
  sp->callback([&] {
    std::string key = sp_op;
    std::transform(key.begin(), key.end(), key.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    const Operator op = kOperators.at(key);
    json all = json::array();
    for (const Graph& g : load_graphs(sp_src)) {
      const ComplexSpectrum s = eigenvalues(
          operator_matrix(g, op, kTilde.at(sp_tilde), kIsolated.at(sp_isolated)));
      if (sp_format == "csv") {
        out << spectrum_csv(s, sp_precision);
        continue;
      }
      json j = spectrum_json(s, op, sp_precision);
      j["graph6"] = write_graph6(g);
      all.push_back(j);
    }
    if (sp_format == "json") out << all.dump(2) << '\n';
  });

  // check
  GraphSource ck_src;
  std::string ck_name;
  CheckOptions ck_opts;
  std::vector<std::string> ck_choices = check_names();
  ck_choices.push_back("all");
  CLI::App* ck = app.add_subcommand("check", "Verify theorem statements on graphs");
  ck->add_option("name", ck_name, "gap, ap, ihara, pt, connectivity, cycles, bipartite, "
                                  "structural or all")
      ->required()
      ->check(CLI::IsMember(ck_choices));
  add_graph_source(ck, ck_src);
  ck->add_option("--trials", ck_opts.ihara_trials, "Random t values for ihara")
      ->check(CLI::Range(1, 1000));
  ck->add_option("--seed", ck_opts.seed);
  ck->add_option("--max-cycle-length", ck_opts.max_cycle_length);
  ck->callback([&] {
    const std::vector<std::string> names =
        ck_name == "all" ? check_names() : std::vector<std::string>{ck_name};
    json reports = json::array();
    json failures = json::array();
    for (const Graph& g : load_graphs(ck_src)) {
      json r = check_report(g, names, ck_opts);
      for (const auto& f : r["failures"]) {
        failures.push_back({{"graph6", r["graph6"]}, {"check", f}});
      }
      reports.push_back(std::move(r));
    }
    const json doc{{"pass", failures.empty()}, {"failures", failures}, {"reports", reports}};
    out << doc.dump(2) << '\n';
    if (!failures.empty()) {
      err << json{{"status", "check_failed"}, {"failures", failures}}.dump() << '\n';
      exit_code = kExitCheckFailed;
    }
  });

  // walk
  GraphSource wk_src;
  std::optional<int> wk_source;
  std::optional<int> wk_target;
  int wk_length = 1;
  std::uint64_t wk_samples = 100000;
  std::uint64_t wk_seed = 1;
  CLI::App* wk = app.add_subcommand("walk", "Non-backtracking walk probabilities");
  add_graph_source(wk, wk_src);
  wk->add_option("--source", wk_source, "Start vertex (all when omitted)");
  wk->add_option("--target", wk_target, "End vertex (all when omitted)");
  wk->add_option("-n,--length", wk_length)->required()->check(CLI::PositiveNumber);
  wk->add_option("--samples", wk_samples, "Monte Carlo samples, 0 to skip");
  wk->add_option("--seed", wk_seed);
  wk->callback([&] {
    json rows = json::array();
    for (const Graph& g : load_graphs(wk_src)) {
      const int n = g.vertex_count();
      for (int s = 0; s < n; ++s) {
        if (wk_source && *wk_source != s) continue;
        for (int t = 0; t < n; ++t) {
          if (wk_target && *wk_target != t) continue;
          const WalkRow w = evaluate_walk(g, {s, t, wk_length}, wk_samples, wk_seed);
          rows.push_back(to_json(g, w));
        }
      }
    }
    out << rows.dump(2) << '\n';
  });

  // census
  GraphSource cs_src;
  std::vector<std::string> cs_ops{"a", "l", "nba", "nbl"};
  std::optional<int> cs_min_degree;
  int cs_min_n = 1;
  std::optional<int> cs_max_n;
  std::string cs_grouping = "nm";
  std::string cs_format = "md";
  std::string cs_rows = "n";
  std::string cs_tilde = "dtb";
  std::string cs_isolated = "one";
  std::optional<int> cs_merge_upto;
  std::optional<std::string> cs_mates;
  int cs_precision = kDefaultPrecision;
  unsigned cs_workers = default_workers();
  CLI::App* cs = app.add_subcommand("census", "Cospectrality census over a corpus");
  cs->add_option("-i,--input", cs_src.inputs, "graph6 corpus file(s)")
      ->check(CLI::ExistingFile);
  cs->add_option("--operators", cs_ops)
      ->delimiter(',')
      ->check(CLI::IsMember({"a", "l", "nba", "nbl"}));
  cs->add_option("--min-degree", cs_min_degree)->check(CLI::NonNegativeNumber);
  cs->add_option("--min-n", cs_min_n, "Smallest order for the built-in generator");
  cs->add_option("--max-n", cs_max_n, "Largest order for the built-in generator")
      ->check(CLI::Range(0, kMaxKeyedOrder - 1));
  cs->add_option("--grouping", cs_grouping, "Comparison scope of NB operators")
      ->check(CLI::IsMember({"nm", "m", "global"}));
  cs->add_option("--rows", cs_rows, "Row axis: n (vertices) or m (edges)")
      ->check(CLI::IsMember({"n", "m"}));
  cs->add_option("--merge-upto", cs_merge_upto, "Merge rows with key <= K into one");
  cs->add_option("--format", cs_format)->check(CLI::IsMember({"csv", "md", "json"}));
  cs->add_option("--precision", cs_precision)->check(CLI::Range(1, 12));
  cs->add_option("--tilde", cs_tilde)->check(CLI::IsMember({"dtb", "i-dtb"}));
  cs->add_option("--isolated", cs_isolated)->check(CLI::IsMember({"one", "zero"}));
  cs->add_option("--workers", cs_workers, "Worker threads (env NBSPEC_WORKERS)")
      ->check(CLI::Range(1U, 1024U));
  cs->add_option("--mates", cs_mates, "List cospectral classes for one operator")
      ->check(CLI::IsMember({"a", "l", "nba", "nbl"}));
  cs->callback([&] {
    std::vector<Graph> corpus;
    if (!cs_src.inputs.empty()) {
      corpus = load_graphs(cs_src);
      if (cs_min_degree) {
        std::erase_if(corpus, [&](const Graph& g) {
          return g.vertex_count() > 0 && min_degree(g) < *cs_min_degree;
        });
      }
    } else if (cs_max_n) {
      corpus = generated_corpus(cs_min_n, *cs_max_n, cs_min_degree.value_or(0));
    } else {
      throw CLI::ValidationError("census needs --input or --max-n");
    }
    CensusOptions opts;
    opts.operators.clear();
    for (const std::string& o : cs_ops) opts.operators.push_back(kOperators.at(o));
    std::sort(opts.operators.begin(), opts.operators.end());
    opts.operators.erase(std::unique(opts.operators.begin(), opts.operators.end()),
                         opts.operators.end());
    opts.set_grouping(Operator::kNBA, kGroupings.at(cs_grouping));
    opts.set_grouping(Operator::kNBL, kGroupings.at(cs_grouping));
    opts.precision = cs_precision;
    opts.tilde = kTilde.at(cs_tilde);
    opts.isolated = kIsolated.at(cs_isolated);
    opts.workers = cs_workers;
    const CensusTable table = run_census(corpus, opts);

    if (cs_mates) {
      const json doc{{"metadata", census_metadata(opts)},
                     {"operator", std::string(to_string(kOperators.at(*cs_mates)))},
                     {"classes", list_mates(table, kOperators.at(*cs_mates))}};
      out << doc.dump(2) << '\n';
      return;
    }
    const bool by_m = cs_rows == "m";
    std::vector<CensusRow> rows = by_m ? by_edges_report(table) : class_size_report(table);
    if (cs_merge_upto) {
      const int k = *cs_merge_upto;
      std::vector<CensusRow> merged;
      if (std::any_of(rows.begin(), rows.end(), [&](const CensusRow& r) { return r.key <= k; })) {
        merged.push_back(merge_rows(rows, std::numeric_limits<int>::min(), k,
                                    "<=" + std::to_string(k)));
      }
      for (CensusRow& r : rows)
        if (r.key > k) merged.push_back(std::move(r));
      rows = std::move(merged);
    }
    out << format_rows(table, rows, *parse_format(cs_format), by_m ? "M" : "N");
  });

  // scatter
  GraphSource sc_src;
  int sc_n = 100;
  double sc_alpha = 8.0;
  std::uint64_t sc_seed = 1;
  std::string sc_format = "json";
  CLI::App* sc = app.add_subcommand(
      "scatter", "Eigenvalues of B and D~B with reference circle radii");
  add_graph_source(sc, sc_src);
  sc->add_option("--er-n", sc_n, "Order of the random graph when no graph is given")
      ->check(CLI::Range(1, 2000));
  sc->add_option("--alpha", sc_alpha, "Expected degree; edge probability alpha/(n-1)")
      ->check(CLI::PositiveNumber);
  sc->add_option("--seed", sc_seed);
  sc->add_option("--format", sc_format)->check(CLI::IsMember({"json", "csv"}));
  sc->callback([&] {
    std::vector<Graph> graphs;
    if (sc_src.graph6.empty() && sc_src.inputs.empty()) {
      graphs.push_back(families::erdos_renyi(sc_n, sc_alpha, sc_seed));
    } else {
      graphs = load_graphs(sc_src);
    }
    const double r_outer = sc_alpha > 1.0 ? std::sqrt(sc_alpha - 1.0) : 0.0;
    const double r_inner = sc_alpha > 1.0 ? 1.0 / r_outer : 0.0;
    json all = json::array();
    for (const Graph& g : graphs) {
      const NbGraph nb = build_nb_graph(remove_isolated(g));
      const ComplexSpectrum b = eigenvalues(nb_adjacency(nb));
      const ComplexSpectrum l = eigenvalues(nb_laplacian_tilde(nb, TildeConvention::kLiteral));
      if (sc_format == "csv") {
        out << "# alpha=" << format_fixed(sc_alpha, 6) << " radius_b="
            << format_fixed(r_outer, 12) << " radius_dtb=" << format_fixed(r_inner, 12)
            << '\n';
        out << "operator,re,im\n";
        for (const Complex& z : b.values)
          out << "NBA," << format_fixed(z.real(), 12) << ',' << format_fixed(z.imag(), 12)
              << '\n';
        for (const Complex& z : l.values)
          out << "NBL," << format_fixed(z.real(), 12) << ',' << format_fixed(z.imag(), 12)
              << '\n';
        continue;
      }
      auto pairs = [](const ComplexSpectrum& s) {
        json a = json::array();
        for (const Complex& z : s.values) a.push_back({z.real(), z.imag()});
        return a;
      };
      all.push_back({{"graph6", write_graph6(g)},
                     {"n", g.vertex_count()},
                     {"m", g.edge_count()},
                     {"alpha", sc_alpha},
                     {"radius_nba", r_outer},
                     {"radius_nbl", r_inner},
                     {"nba", pairs(b)},
                     {"nbl", pairs(l)}});
    }
    if (sc_format == "json") out << all.dump(2) << '\n';
  });

  // generate
  int gen_n = 0;
  int gen_min_degree = 0;
  CLI::App* gen = app.add_subcommand("generate", "Write non-isomorphic graphs as graph6");
  gen->add_option("-n,--order", gen_n)->required()->check(CLI::Range(0, kMaxKeyedOrder - 1));
  gen->add_option("--min-degree", gen_min_degree)->check(CLI::NonNegativeNumber);
  gen->callback([&] {
    const std::vector<Graph> graphs = generated_corpus(gen_n, gen_n, gen_min_degree);
    write_graph6(out, graphs);
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << error_report("usage", e.what()).dump() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    json j = error_report("graph6", e.what());
    j["line"] = e.line();
    j["offset"] = e.offset();
    err << j.dump() << '\n';
    return kExitError;
  } catch (const PreconditionError& e) {
    err << error_report("precondition", e.what()).dump() << '\n';
    return kExitError;
  } catch (const UnsupportedSizeError& e) {
    err << error_report("unsupported_size", e.what()).dump() << '\n';
    return kExitError;
  } catch (const SolverError& e) {
    err << error_report("solver", e.what()).dump() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    err << error_report("runtime", e.what()).dump() << '\n';
    return kExitError;
  }
  return exit_code;
}

}  // namespace nbspec::cli
