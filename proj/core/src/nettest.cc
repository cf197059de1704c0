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

#include "hypnet/nettest.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

namespace hypnet {

void Validate(const ComparisonConfig& cfg) {
  if (cfg.bootstrap_replicates < 1) throw std::invalid_argument("bootstrap replicates must be >= 1");
  if (cfg.quadrature_pairs < 1) throw std::invalid_argument("quadrature pairs must be >= 1");
  if (!(cfg.link_threshold > 0.0)) throw std::invalid_argument("link threshold must be positive");
  if (!(cfg.alpha > 0.0 && cfg.alpha < 1.0)) throw std::invalid_argument("alpha must lie in (0, 1)");
}

double ModelEstimate::dropped_fraction() const {
  if (graph_nodes == 0) return 0.0;
  return static_cast<double>(graph_nodes - retained_nodes) / static_cast<double>(graph_nodes);
}

ModelEstimate EstimateModel(const Graph& g) {
  const Component component = LargestComponent(g);
  EmbeddedCloud cloud = CoshMds(ShortestPaths(component.graph));
  const std::size_t n = cloud.points.size();
  return ModelEstimate{DensityEstimate(std::move(cloud.points), BandwidthDefault(n)),
                       g.num_nodes(), n};
}

DensityEstimate PooledModel(const DensityEstimate& m1, const DensityEstimate& m2) {
  std::vector<HPoint> centers;
  centers.reserve(m1.size() + m2.size());
  centers.insert(centers.end(), m1.centers().begin(), m1.centers().end());
  centers.insert(centers.end(), m2.centers().begin(), m2.centers().end());
  const std::size_t n = centers.size();
  return DensityEstimate(std::move(centers), BandwidthDefault(n));
}

DensityEstimate PooledModel(const Graph& g1, const Graph& g2) {
  return PooledModel(EstimateModel(g1).model, EstimateModel(g2).model);
}

double PairTruncation(std::size_t n1, std::size_t n2) {
  return TruncationDefault(std::min(n1, n2));
}

double BootstrapPValue(double d_star, const std::vector<double>& replicates) {
  const auto at_least = std::count_if(replicates.begin(), replicates.end(),
                                      [d_star](double d) { return d >= d_star; });
  return static_cast<double>(1 + at_least) / static_cast<double>(replicates.size() + 1);
}

void ParallelFor(std::size_t count, unsigned threads,
                 const std::function<void(std::size_t)>& fn) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  const auto workers = static_cast<std::size_t>(std::min<std::size_t>(threads, count));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        while (!failed.load(std::memory_order_relaxed)) {
          const std::size_t i = next.fetch_add(1);
          if (i >= count) return;
          try {
            fn(i);
          } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error) error = std::current_exception();
            failed = true;
          }
        }
      });
    }
  }
  if (error) std::rethrow_exception(error);
}

namespace {

struct ReplicateOutcome {
  double distance = 0.0;
  std::size_t retries = 0;
};

ReplicateOutcome RunReplicate(const DensityEstimate& pooled, std::size_t n1, std::size_t n2,
                              double truncation, const QuadraturePoints& quadrature,
                              const ComparisonConfig& cfg, std::size_t index) {
  Rng rng = DeriveStream(cfg.seed, "bootstrap", index);
  const LinkRule link{cfg.link_threshold};
  for (std::size_t attempt = 0; attempt <= cfg.max_retries; ++attempt) {
    const Graph g1 = GenerateGraph(SampleFromKde(pooled, n1, rng), link);
    const Graph g2 = GenerateGraph(SampleFromKde(pooled, n2, rng), link);
    try {
      const ModelEstimate r1 = EstimateModel(g1);
      const ModelEstimate r2 = EstimateModel(g2);
      return {L2Distance(r1.model, r2.model, truncation, quadrature), attempt};
    } catch (const EmbeddingError&) {
      // Redraw the whole replicate from the same stream.
    }
  }
  throw RetryLimitExceeded("bootstrap replicate " + std::to_string(index) +
                           " failed to embed after " + std::to_string(cfg.max_retries + 1) +
                           " attempts");
}

}  // namespace

TestResult Compare(const Graph& g1, const Graph& g2, const ComparisonConfig& cfg) {
  Validate(cfg);
  const ModelEstimate e1 = EstimateModel(g1);
  const ModelEstimate e2 = EstimateModel(g2);
  const std::size_t n1 = e1.retained_nodes;
  const std::size_t n2 = e2.retained_nodes;

  Rng quadrature_rng = DeriveStream(cfg.seed, "quadrature");
  const QuadraturePoints quadrature = QuadraturePoints::Draw(cfg.quadrature_pairs, quadrature_rng);
  const double truncation = PairTruncation(n1, n2);
  const DensityEstimate pooled = PooledModel(e1.model, e2.model);

  TestResult result;
  result.d_star = L2Distance(e1.model, e2.model, truncation, quadrature);

  std::vector<ReplicateOutcome> outcomes(cfg.bootstrap_replicates);
  ParallelFor(outcomes.size(), cfg.threads, [&](std::size_t b) {
    outcomes[b] = RunReplicate(pooled, n1, n2, truncation, quadrature, cfg, b);
  });

  ComparisonDiagnostics& diag = result.diagnostics;
  result.replicates.reserve(outcomes.size());
  for (const auto& outcome : outcomes) {
    result.replicates.push_back(outcome.distance);
    diag.replicate_retries += outcome.retries;
  }
  result.p_value = BootstrapPValue(result.d_star, result.replicates);

  diag.nodes1 = n1;
  diag.nodes2 = n2;
  diag.dropped_fraction1 = e1.dropped_fraction();
  diag.dropped_fraction2 = e2.dropped_fraction();
  diag.bandwidth1 = e1.model.bandwidth();
  diag.bandwidth2 = e2.model.bandwidth();
  diag.pooled_bandwidth = pooled.bandwidth();
  diag.truncation = truncation;
  return result;
}

PowerResult PowerSimulation(const GeneratorSpec& a, const GeneratorSpec& b, std::size_t pairs,
                            const ComparisonConfig& cfg) {
  Validate(cfg);
  Validate(a);
  Validate(b);
  if (pairs < 1) throw std::invalid_argument("power simulation needs at least one pair");

  struct PairOutcome {
    bool rejected = false;
    std::size_t regenerations = 0;
    std::size_t replicate_retries = 0;
  };
  std::vector<PairOutcome> outcomes(pairs);
  ParallelFor(pairs, cfg.threads, [&](std::size_t i) {
    Rng rng = DeriveStream(cfg.seed, "pair", i);
    ComparisonConfig pair_cfg = cfg;
    pair_cfg.seed = DeriveStream(cfg.seed, "pair-test", i)();
    pair_cfg.threads = 1;
    for (std::size_t attempt = 0; attempt <= cfg.max_retries; ++attempt) {
      const Graph g1 = Generate(a, rng);
      const Graph g2 = Generate(b, rng);
      try {
        const TestResult r = Compare(g1, g2, pair_cfg);
        outcomes[i] = {r.Rejects(cfg.alpha), attempt, r.diagnostics.replicate_retries};
        return;
      } catch (const EmbeddingError&) {
        // Observed pair could not be embedded: draw a fresh pair.
      }
    }
    throw RetryLimitExceeded("graph pair " + std::to_string(i) + " failed to embed after " +
                             std::to_string(cfg.max_retries + 1) + " attempts");
  });

  PowerResult result;
  result.pairs = pairs;
  for (const auto& o : outcomes) {
    result.rejections += o.rejected ? 1 : 0;
    result.regenerations += o.regenerations;
    result.replicate_retries += o.replicate_retries;
  }
  result.power = static_cast<double>(result.rejections) / static_cast<double>(pairs);
  return result;
}

}  // namespace hypnet
