// Copyright 2026 The hypnet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "hypnet/embed.h"
#include "hypnet/graph.h"
#include "hypnet/graphgen.h"
#include "hypnet/rng.h"

namespace hypnet {
namespace {

void BM_ShortestPaths(benchmark::State& state) {
  Rng rng = DeriveStream(1, "bench");
  const Graph g = GenerateGraph(SampleQuasiUniform({1.0, 1.0}, state.range(0), rng), {1.5});
  for (auto _ : state) benchmark::DoNotOptimize(ShortestPaths(g));
}
BENCHMARK(BM_ShortestPaths)->Arg(100)->Arg(400);

void BM_CoshMds(benchmark::State& state) {
  Rng rng = DeriveStream(2, "bench");
  const Graph g = GenerateGraph(SampleQuasiUniform({1.0, 1.0}, state.range(0), rng), {1.5});
  const DistanceMatrix d = ShortestPaths(LargestComponent(g).graph);
  for (auto _ : state) benchmark::DoNotOptimize(CoshMds(d));
}
BENCHMARK(BM_CoshMds)->Arg(100)->Arg(400);

}  // namespace
}  // namespace hypnet

BENCHMARK_MAIN();
