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

#include <benchmark/benchmark.h>

#include "nbspec/census.hpp"
#include "nbspec/families.hpp"
#include "nbspec/generate.hpp"
#include "nbspec/nb.hpp"
#include "nbspec/spectra.hpp"
#include "nbspec/theory.hpp"
#include "nbspec/walks.hpp"

namespace {

using namespace nbspec;

Graph er_core(int n) { return remove_isolated(families::erdos_renyi(n, 6.0, 11)); }

void BM_EigenvaluesNbl(benchmark::State& state) {
  const DenseMatrix m = nb_laplacian_tilde(build_nb_graph(er_core(static_cast<int>(state.range(0)))));
  for (auto _ : state) benchmark::DoNotOptimize(eigenvalues(m));
  state.counters["dim"] = static_cast<double>(m.rows());
}
BENCHMARK(BM_EigenvaluesNbl)->Arg(10)->Arg(20)->Arg(40)->Arg(80)->Unit(benchmark::kMillisecond);

void BM_BuildNbGraph(benchmark::State& state) {
  const Graph g = families::erdos_renyi(static_cast<int>(state.range(0)), 8.0, 3);
  for (auto _ : state) benchmark::DoNotOptimize(build_nb_graph(g));
}
BENCHMARK(BM_BuildNbGraph)->Arg(100)->Arg(1000)->Arg(10000);

void BM_CanonicalKey(benchmark::State& state) {
  const Graph g = families::petersen();
  for (auto _ : state) benchmark::DoNotOptimize(canonical_key(g));
}
BENCHMARK(BM_CanonicalKey);

void BM_CanonicalKeyBruteforce(benchmark::State& state) {
  const Graph g = families::erdos_renyi(static_cast<int>(state.range(0)), 3.0, 5);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_key_bruteforce(g));
}
BENCHMARK(BM_CanonicalKeyBruteforce)->DenseRange(5, 7)->Unit(benchmark::kMicrosecond);

void BM_Generate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(generate_nonisomorphic(n, 2).drain());
}
BENCHMARK(BM_Generate)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

void BM_Census(benchmark::State& state) {
  const std::vector<Graph> corpus = generate_nonisomorphic(static_cast<int>(state.range(0)), 2).drain();
  CensusOptions opts;
  opts.workers = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(run_census(corpus, opts));
  state.counters["graphs"] = static_cast<double>(corpus.size());
}
BENCHMARK(BM_Census)->Args({6, 1})->Args({7, 1})->Args({7, 4})->Unit(benchmark::kMillisecond);

void BM_IharaBass(benchmark::State& state) {
  const Graph g = families::petersen();
  for (auto _ : state) benchmark::DoNotOptimize(ihara_bass_check(g, 10, 1));
}
BENCHMARK(BM_IharaBass)->Unit(benchmark::kMillisecond);

void BM_ExactWalk(benchmark::State& state) {
  const Graph g = families::petersen();
  const int len = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(exact_pn_rational(g, {0, 5, len}));
}
BENCHMARK(BM_ExactWalk)->Arg(4)->Arg(8)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
