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
#include "hypnet/hkde.h"
#include "hypnet/rng.h"

namespace hypnet {
namespace {

DensityEstimate Model(std::uint64_t seed, std::size_t n) {
  Rng rng = DeriveStream(seed, "bench");
  return DensityEstimate(SampleQuasiUniform({1.0, 1.0}, n, rng), BandwidthDefault(n));
}

void BM_L2Distance(benchmark::State& state) {
  const DensityEstimate a = Model(3, 100), b = Model(4, 100);
  Rng rng = DeriveStream(5, "bench");
  const QuadraturePoints points = QuadraturePoints::Draw(state.range(0), rng);
  for (auto _ : state) benchmark::DoNotOptimize(L2Distance(a, b, TruncationDefault(100), points));
}
BENCHMARK(BM_L2Distance)->Arg(100)->Arg(10000);

void BM_DensityEvaluator(benchmark::State& state) {
  const DensityEstimate m = Model(6, 100);
  const DensityGrid grid{257, 128};
  for (auto _ : state) {
    const DensityEvaluator eval(m, grid);
    benchmark::DoNotOptimize(eval(kBasepoint));
  }
}
BENCHMARK(BM_DensityEvaluator)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace hypnet

BENCHMARK_MAIN();
