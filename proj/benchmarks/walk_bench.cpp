// Copyright 2026 The qgwalk Authors
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

#include "qgwalk/quantum_graph.hpp"
#include "qgwalk/szegedy.hpp"

namespace {

using namespace qgwalk;

void BM_EvolutionOperator(benchmark::State& state) {
  const ArcSpace arcs(complete_graph(static_cast<int>(state.range(0))));
  std::mt19937_64 rng(1);
  const Partition p = random_partition(arcs, rng);
  const CoinSet coins = CoinSet::random(arcs.graph(), rng);
  for (auto _ : state) benchmark::DoNotOptimize(evolution(WalkKind::G, p, coins).matrix.data());
  state.counters["arcs"] = static_cast<double>(arcs.size());
}
BENCHMARK(BM_EvolutionOperator)->Arg(4)->Arg(6)->Arg(8);

void BM_SzegedySpectrum(benchmark::State& state) {
  const ArcSpace arcs(complete_graph(static_cast<int>(state.range(0))));
  const TransitionMatrix p = TransitionMatrix::uniform(arcs);
  for (auto _ : state) benchmark::DoNotOptimize(szegedy_spectrum(p).max_residual);
}
BENCHMARK(BM_SzegedySpectrum)->Arg(4)->Arg(6)->Arg(8);

void BM_StationarityIndicator(benchmark::State& state) {
  const QuantumGraphParams q =
      QuantumGraphParams::uniform(complete_graph(static_cast<int>(state.range(0))), 1.0, VertexStrength::finite(0.5));
  double k = 1.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(stationarity_indicator(q, k));
    k += 1e-3;
  }
}
BENCHMARK(BM_StationarityIndicator)->Arg(3)->Arg(5)->Arg(8);

void BM_ScanStar(benchmark::State& state) {
  const QuantumGraphParams q = QuantumGraphParams::uniform(star_graph(3), 1.0, VertexStrength::neumann());
  ScanOptions opts;
  opts.threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(scan_roots(q, 0.5, 3.5, opts).roots.size());
}
BENCHMARK(BM_ScanStar)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_EnumeratePartitions(benchmark::State& state) {
  const ArcSpace arcs(complete_graph(4));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_partitions(arcs).size());
}
BENCHMARK(BM_EnumeratePartitions)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
