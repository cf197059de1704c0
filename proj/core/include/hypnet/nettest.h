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

#ifndef HYPNET_NETTEST_H_
#define HYPNET_NETTEST_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "hypnet/embed.h"
#include "hypnet/graph.h"
#include "hypnet/graphgen.h"
#include "hypnet/hkde.h"

namespace hypnet {

struct ComparisonConfig {
  std::size_t bootstrap_replicates = 50;
  std::size_t quadrature_pairs = 100;
  double link_threshold = 1.5;
  double alpha = 0.1;
  std::uint64_t seed = 0;
  std::size_t max_retries = 100;
  // Worker threads for replicates and pairs; 0 means hardware concurrency.
  // Results do not depend on this value.
  unsigned threads = 1;
};

void Validate(const ComparisonConfig& cfg);

// A fitted node-density model plus what was dropped to get it.
struct ModelEstimate {
  DensityEstimate model;
  std::size_t graph_nodes = 0;
  std::size_t retained_nodes = 0;

  double dropped_fraction() const;
};

// largest component -> hop distances -> cosh-MDS -> KDE with h = 1/(n+100).
// Throws EmbeddingError.
ModelEstimate EstimateModel(const Graph& g);

// KDE on the concatenated clouds with bandwidth from the pooled size.
DensityEstimate PooledModel(const DensityEstimate& m1, const DensityEstimate& m2);
DensityEstimate PooledModel(const Graph& g1, const Graph& g2);

// Spectral truncation for a distance between models of sizes n1 and n2:
// n^(-1/6) with n = min(n1, n2).
double PairTruncation(std::size_t n1, std::size_t n2);

struct ComparisonDiagnostics {
  std::size_t nodes1 = 0;
  std::size_t nodes2 = 0;
  double dropped_fraction1 = 0.0;
  double dropped_fraction2 = 0.0;
  double bandwidth1 = 0.0;
  double bandwidth2 = 0.0;
  double pooled_bandwidth = 0.0;
  double truncation = 0.0;
  // Replicates redrawn after an embedding failure, summed over replicates.
  std::size_t replicate_retries = 0;
};

struct TestResult {
  double d_star = 0.0;
  std::vector<double> replicates;
  double p_value = 1.0;
  ComparisonDiagnostics diagnostics;

  bool Rejects(double alpha) const { return p_value <= alpha; }
};

// (1 + #{replicate >= d_star}) / (B + 1).
double BootstrapPValue(double d_star, const std::vector<double>& replicates);

class RetryLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Pooled-model bootstrap test of "same node density". Replicate b draws from
// its own stream derived from (seed, b), so the result is independent of the
// thread count. Throws EmbeddingError if an observed graph cannot be embedded
// and RetryLimitExceeded if a replicate fails max_retries + 1 times.
TestResult Compare(const Graph& g1, const Graph& g2, const ComparisonConfig& cfg);

struct PowerResult {
  double power = 0.0;
  std::size_t rejections = 0;
  std::size_t pairs = 0;
  // Observed pairs regenerated because an embedding failed.
  std::size_t regenerations = 0;
  std::size_t replicate_retries = 0;
};

// Fraction of independent (G1 ~ a, G2 ~ b) pairs rejected at cfg.alpha.
PowerResult PowerSimulation(const GeneratorSpec& a, const GeneratorSpec& b, std::size_t pairs,
                            const ComparisonConfig& cfg);

// Runs fn(i) for i in [0, count) on up to `threads` workers (0 = hardware).
// The first exception thrown by any task is rethrown after all workers stop.
void ParallelFor(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& fn);

// Result document: "key: value" lines echoing the configuration. The thread
// count is not echoed, so the document is identical across parallelism
// settings.
std::string FormatResult(const TestResult& result, const ComparisonConfig& cfg);
std::map<std::string, std::string> ParseResult(const std::string& document);

// Shortest round-trip decimal form of a double.
std::string FormatDouble(double value);

}  // namespace hypnet

#endif  // HYPNET_NETTEST_H_
