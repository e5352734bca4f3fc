// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "matroid/freedom.hpp"
#include "matroid/g_invariant.hpp"
#include "matroid/nbc.hpp"
#include "matroid/orlik_solomon.hpp"
#include "matroid/tutte.hpp"

namespace matroid {
namespace {

Graph complete_graph(int v) {
  Graph g{v, {}};
  for (int a = 1; a <= v; ++a)
    for (int b = a + 1; b <= v; ++b) g.edges.emplace_back(a, b);
  return g;
}

void BM_CharPolyMobius(benchmark::State& state) {
  const Matroid m = uniform_matroid(3, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(char_poly_mobius(m));
}
BENCHMARK(BM_CharPolyMobius)->DenseRange(6, 12, 3);

void BM_NbcSets(benchmark::State& state) {
  const Matroid m = from_graph(complete_graph(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(nbc_sets(m));
}
BENCHMARK(BM_NbcSets)->DenseRange(4, 5);

void BM_Tutte(benchmark::State& state) {
  const Matroid m = from_graph(complete_graph(5));
  const auto method = static_cast<TutteMethod>(state.range(0));
  state.SetLabel(std::string(method_name(method)));
  for (auto _ : state) benchmark::DoNotOptimize(tutte(m, method));
}
BENCHMARK(BM_Tutte)->DenseRange(0, 2);

void BM_GInvariantChainDp(benchmark::State& state) {
  const Matroid m = uniform_matroid(3, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(g_invariant(m, GMethod::kChainDp));
}
BENCHMARK(BM_GInvariantChainDp)->DenseRange(6, 12, 2);

void BM_GInvariantPermutations(benchmark::State& state) {
  const Matroid m = uniform_matroid(3, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(g_invariant(m, GMethod::kPermutations));
}
BENCHMARK(BM_GInvariantPermutations)->DenseRange(6, 8);

void BM_ReduceTopDegree(benchmark::State& state) {
  const Matroid m = from_graph(complete_graph(5));
  for (auto _ : state) {
    // A fresh context each time so the normal-form cache starts empty.
    const OsContext ctx(m);
    ExteriorElement a;
    for_each_k_subset(m.ground_set(), m.rank(), [&](ElementSet s) { a.add_term(s, 1); });
    benchmark::DoNotOptimize(reduce_to_nbc(ctx, a));
  }
}
BENCHMARK(BM_ReduceTopDegree)->Unit(benchmark::kMillisecond);

void BM_TutteSpanDimension(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(tutte_span_dimension(n, 3));
}
BENCHMARK(BM_TutteSpanDimension)->DenseRange(6, 8)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace matroid

BENCHMARK_MAIN();
