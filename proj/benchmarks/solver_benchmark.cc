// Copyright 2026 The extraconn Authors.
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

#include <random>

#include "benchmark/benchmark.h"
#include "extraconn/enumeration.h"
#include "extraconn/extra_connectivity.h"
#include "extraconn/families.h"
#include "extraconn/graph.h"

namespace extraconn {
namespace {

Graph RandomConnected(int n, double p, unsigned seed) {
  std::mt19937 rng(seed);
  std::bernoulli_distribution coin(p);
  while (true) {
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (coin(rng)) b.AddEdge(u, v);
      }
    }
    Graph g = b.Build();
    if (IsConnected(g)) return g;
  }
}

void BM_KappaRandom(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  int g = static_cast<int>(state.range(1));
  Graph graph = RandomConnected(n, 0.4, 42);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ExtraConnectivity(graph, g));
  }
}
BENCHMARK(BM_KappaRandom)
    ->Args({10, 1})
    ->Args({14, 1})
    ->Args({14, 3})
    ->Args({18, 2})
    ->Args({20, 4});

void BM_KappaWheel(benchmark::State& state) {
  Graph graph = WheelGraph(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ExtraConnectivity(graph, 2));
  }
}
BENCHMARK(BM_KappaWheel)->DenseRange(8, 20, 4);

void BM_Profile(benchmark::State& state) {
  Graph graph = RandomConnected(static_cast<int>(state.range(0)), 0.3, 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(KappaProfile(graph));
  }
}
BENCHMARK(BM_Profile)->Arg(12)->Arg(16);

void BM_EnumerateConnected(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  bool dedupe = state.range(1) != 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(EnumerateConnectedGraphs(n, dedupe));
  }
}
BENCHMARK(BM_EnumerateConnected)
    ->Args({5, 0})
    ->Args({6, 0})
    ->Args({6, 1})
    ->Unit(benchmark::kMillisecond);

void BM_CanonicalCode(benchmark::State& state) {
  Graph graph = RandomConnected(static_cast<int>(state.range(0)), 0.5, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(CanonicalCode(graph));
  }
}
BENCHMARK(BM_CanonicalCode)->Arg(6)->Arg(7)->Arg(8);

}  // namespace
}  // namespace extraconn

BENCHMARK_MAIN();
