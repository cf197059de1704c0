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

#include "hypnet/graphgen.h"
#include "hypnet/nettest.h"
#include "hypnet/rng.h"

namespace hypnet {
namespace {

void BM_Compare(benchmark::State& state) {
  Rng rng = DeriveStream(7, "bench");
  const GeneratorSpec spec{QuasiUniformFamily{{1.0, 1.0}}, 100, {1.5}};
  const Graph g1 = Generate(spec, rng), g2 = Generate(spec, rng);
  ComparisonConfig cfg;
  cfg.bootstrap_replicates = state.range(0);
  cfg.seed = 8;
  for (auto _ : state) benchmark::DoNotOptimize(Compare(g1, g2, cfg));
}
BENCHMARK(BM_Compare)->Arg(10)->Arg(50)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace hypnet

BENCHMARK_MAIN();
