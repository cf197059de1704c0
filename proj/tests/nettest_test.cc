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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "oracles.h"

namespace hypnet {
namespace {

Graph QuasiUniformGraph(double delta, std::uint64_t seed, std::size_t n = 100) {
  Rng rng = DeriveStream(seed, "nettest-graph");
  return GenerateGraph(SampleQuasiUniform({delta, 1.0}, n, rng), {1.5});
}

ComparisonConfig SmallConfig(std::uint64_t seed, std::size_t replicates = 8) {
  ComparisonConfig cfg;
  cfg.seed = seed;
  cfg.bootstrap_replicates = replicates;
  return cfg;
}

TEST(EstimateModelTest, HundredNodeCloud) {
  const ModelEstimate e = EstimateModel(QuasiUniformGraph(1.0, 1));
  EXPECT_EQ(e.model.size(), 100u);
  EXPECT_DOUBLE_EQ(e.model.bandwidth(), 0.005);
  EXPECT_EQ(e.dropped_fraction(), 0.0);
}

TEST(EstimateModelTest, DisconnectedInputUsesLargestComponent) {
  Graph g = QuasiUniformGraph(1.0, 2, 50);
  Graph padded(g.num_nodes() + 5);
  for (const auto& [u, v] : g.Edges()) padded.AddEdge(u, v);
  padded.AddEdge(52, 53);
  const ModelEstimate e = EstimateModel(padded);
  EXPECT_EQ(e.graph_nodes, 55u);
  EXPECT_EQ(e.retained_nodes, LargestComponent(g).graph.num_nodes());
  EXPECT_NEAR(e.dropped_fraction(), (55.0 - e.retained_nodes) / 55.0, 1e-15);
}

TEST(EstimateModelTest, TwoNodeGraphFails) {
  Graph g(2);
  g.AddEdge(0, 1);
  EXPECT_THROW(EstimateModel(g), EmbeddingError);
}

TEST(PooledModelTest, SizesAndBandwidth) {
  const Graph g1 = QuasiUniformGraph(1.0, 3);
  const Graph g2 = QuasiUniformGraph(10.0, 4);
  const DensityEstimate pooled = PooledModel(g1, g2);
  EXPECT_EQ(pooled.size(), 200u);
  EXPECT_DOUBLE_EQ(pooled.bandwidth(), 1.0 / 300);
}

TEST(PooledModelTest, SelfPoolingDuplicatesCloud) {
  const Graph g = QuasiUniformGraph(1.0, 5);
  const DensityEstimate single = EstimateModel(g).model;
  const DensityEstimate pooled = PooledModel(g, g);
  ASSERT_EQ(pooled.size(), 2 * single.size());
  for (std::size_t i = 0; i < single.size(); ++i) {
    EXPECT_EQ(pooled.centers()[i], single.centers()[i]);
    EXPECT_EQ(pooled.centers()[i + single.size()], single.centers()[i]);
  }
}

TEST(PooledModelTest, OrderDoesNotChangeDensity) {
  const Graph g1 = QuasiUniformGraph(1.0, 6);
  const Graph g2 = QuasiUniformGraph(30.0, 7);
  const DensityEstimate ab = PooledModel(g1, g2);
  const DensityEstimate ba = PooledModel(g2, g1);
  EXPECT_EQ(ab.bandwidth(), ba.bandwidth());
  for (double t : {-0.4, 0.1, 0.3}) {
    for (double theta : {0.0, 2.0, 4.5}) {
      EXPECT_NEAR(std::abs(HelgasonKde(ab, {t, theta}) - HelgasonKde(ba, {t, theta})), 0.0, 1e-13);
    }
  }
}

TEST(PValueTest, AddOneFormula) {
  EXPECT_DOUBLE_EQ(BootstrapPValue(1.0, {0.5, 2.0, 1.0, 0.1}), 3.0 / 5.0);
  EXPECT_DOUBLE_EQ(BootstrapPValue(10.0, {0.5, 2.0}), 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(BootstrapPValue(0.0, {0.5, 2.0}), 1.0);
}

TEST(PValueTest, InvariantToReplicateOrder) {
  std::mt19937_64 rng(3);
  std::vector<double> reps(50);
  for (double& r : reps) r = std::uniform_real_distribution<double>(0, 1)(rng);
  const double p = BootstrapPValue(0.6, reps);
  for (int i = 0; i < 10; ++i) {
    std::shuffle(reps.begin(), reps.end(), rng);
    EXPECT_EQ(BootstrapPValue(0.6, reps), p);
  }
}

TEST(CompareTest, SameGraphGivesZeroDistanceAndUnitPValue) {
  const Graph g = QuasiUniformGraph(1.0, 8);
  const TestResult r = Compare(g, g, SmallConfig(1));
  EXPECT_EQ(r.d_star, 0.0);
  EXPECT_EQ(r.p_value, 1.0);
  EXPECT_EQ(r.replicates.size(), 8u);
}

TEST(CompareTest, PValueWithinBounds) {
  const TestResult r = Compare(QuasiUniformGraph(1.0, 9), QuasiUniformGraph(30.0, 10), SmallConfig(2, 10));
  EXPECT_GE(r.p_value, 1.0 / 11);
  EXPECT_LE(r.p_value, 1.0);
  EXPECT_DOUBLE_EQ(r.p_value, BootstrapPValue(r.d_star, r.replicates));
  EXPECT_GT(r.d_star, 0.0);
  EXPECT_NEAR(r.diagnostics.truncation, TruncationDefault(100), 1e-15);
  EXPECT_DOUBLE_EQ(r.diagnostics.pooled_bandwidth, 1.0 / 300);
}

TEST(CompareTest, DeterministicAcrossThreadCounts) {
  const Graph g1 = QuasiUniformGraph(1.0, 11);
  const Graph g2 = QuasiUniformGraph(10.0, 12);
  ComparisonConfig cfg = SmallConfig(3, 6);
  const TestResult serial = Compare(g1, g2, cfg);
  cfg.threads = 4;
  const TestResult parallel = Compare(g1, g2, cfg);
  EXPECT_EQ(serial.d_star, parallel.d_star);
  EXPECT_EQ(serial.replicates, parallel.replicates);
  EXPECT_EQ(FormatResult(serial, SmallConfig(3, 6)), FormatResult(parallel, SmallConfig(3, 6)));
}

TEST(CompareTest, ReplicateDependsOnlyOnSeedAndIndex) {
  const Graph g1 = QuasiUniformGraph(1.0, 13);
  const Graph g2 = QuasiUniformGraph(1.0, 14);
  const TestResult four = Compare(g1, g2, SmallConfig(4, 4));
  const TestResult six = Compare(g1, g2, SmallConfig(4, 6));
  ASSERT_EQ(six.replicates.size(), 6u);
  EXPECT_TRUE(std::equal(four.replicates.begin(), four.replicates.end(), six.replicates.begin()));
}

TEST(CompareTest, RotatedLatentCloudsGiveIdenticalStatistic) {
  Rng rng = DeriveStream(15, "rot");
  const auto p1 = SampleQuasiUniform({1.0, 1.0}, 100, rng);
  const auto p2 = SampleQuasiUniform({10.0, 1.0}, 100, rng);
  const Rotation k(1.234);
  std::vector<HPoint> r1, r2;
  for (const HPoint& z : p1) r1.push_back(Rotate(k, z));
  for (const HPoint& z : p2) r2.push_back(Rotate(k, z));
  const Graph g1 = GenerateGraph(p1, {1.5});
  const Graph g2 = GenerateGraph(p2, {1.5});
  ASSERT_EQ(g1, GenerateGraph(r1, {1.5}));
  ASSERT_EQ(g2, GenerateGraph(r2, {1.5}));
  const ComparisonConfig cfg = SmallConfig(5, 3);
  EXPECT_EQ(Compare(g1, g2, cfg).d_star, Compare(GenerateGraph(r1, {1.5}), GenerateGraph(r2, {1.5}), cfg).d_star);
}

TEST(CompareTest, ObservedEmbeddingFailurePropagates) {
  Graph tiny(2);
  tiny.AddEdge(0, 1);
  EXPECT_THROW(Compare(tiny, QuasiUniformGraph(1.0, 16), SmallConfig(6)), EmbeddingError);
}

TEST(CompareTest, RejectsInvalidConfig) {
  const Graph g = QuasiUniformGraph(1.0, 17);
  ComparisonConfig cfg = SmallConfig(7);
  cfg.alpha = 1.0;
  EXPECT_THROW(Compare(g, g, cfg), std::invalid_argument);
  cfg = SmallConfig(7, 0);
  EXPECT_THROW(Compare(g, g, cfg), std::invalid_argument);
}

TEST(ResultDocumentTest, RoundTripsThroughParser) {
  const Graph g1 = QuasiUniformGraph(1.0, 18);
  const Graph g2 = QuasiUniformGraph(30.0, 19);
  const ComparisonConfig cfg = SmallConfig(8, 5);
  const TestResult r = Compare(g1, g2, cfg);
  const auto fields = ParseResult(FormatResult(r, cfg));
  EXPECT_EQ(std::stod(fields.at("d_star")), r.d_star);
  EXPECT_EQ(std::stod(fields.at("p_value")), r.p_value);
  EXPECT_EQ(fields.at("B"), "5");
  EXPECT_EQ(fields.at("alpha"), "0.1");
  EXPECT_EQ(fields.at("seed"), "8");
  EXPECT_EQ(fields.at("reject"), r.Rejects(0.1) ? "true" : "false");
  EXPECT_EQ(std::count(fields.at("replicates").begin(), fields.at("replicates").end(), ','), 4);
}

TEST(FormatDoubleTest, ShortestRoundTrip) {
  EXPECT_EQ(FormatDouble(0.1), "0.1");
  EXPECT_EQ(FormatDouble(1.0), "1");
  EXPECT_EQ(std::stod(FormatDouble(1.0 / 3.0)), 1.0 / 3.0);
}

TEST(PowerSimulationTest, SmallRunIsDeterministic) {
  const GeneratorSpec a{QuasiUniformFamily{{1.0, 1.0}}, 60, {1.5}};
  const GeneratorSpec b{QuasiUniformFamily{{30.0, 1.0}}, 60, {1.5}};
  ComparisonConfig cfg = SmallConfig(9, 5);
  const PowerResult first = PowerSimulation(a, b, 3, cfg);
  cfg.threads = 3;
  const PowerResult second = PowerSimulation(a, b, 3, cfg);
  EXPECT_EQ(first.rejections, second.rejections);
  EXPECT_EQ(first.pairs, 3u);
  EXPECT_GE(first.power, 0.0);
  EXPECT_LE(first.power, 1.0);
}

TEST(ParallelForTest, RunsEveryIndexAndPropagatesErrors) {
  std::vector<int> hits(100, 0);
  ParallelFor(hits.size(), 4, [&](std::size_t i) { hits[i] += 1; });
  EXPECT_TRUE(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
  EXPECT_THROW(ParallelFor(10, 3, [](std::size_t i) {
                 if (i == 7) throw std::runtime_error("boom");
               }),
               std::runtime_error);
}

}  // namespace
}  // namespace hypnet
