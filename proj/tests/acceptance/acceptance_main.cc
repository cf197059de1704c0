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

// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli.h"
#include "hypnet/embed.h"
#include "hypnet/graph.h"
#include "hypnet/graphgen.h"
#include "hypnet/hgeom.h"
#include "hypnet/hkde.h"
#include "hypnet/nettest.h"
#include "hypnet/rng.h"
#include "oracles.h"

namespace hypnet {
namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string Fmt(const char* format, double a = 0, double b = 0, double c = 0, double d = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, format, a, b, c, d);
  return buf;
}

double Seconds(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Outcome EmbeddingExactness() {
  const auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(101);
  std::uniform_int_distribution<std::size_t> size(5, 50);
  double worst = 0.0;
  for (int cloud = 0; cloud < 25; ++cloud) {
    const std::size_t n = size(rng);
    std::vector<HPoint> points;
    for (std::size_t i = 0; i < n; ++i) points.push_back(testing::RandomPoint(rng, 3.0));
    std::vector<double> d(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i * n + j] = Dist(points[i], points[j]);
    const EmbeddedCloud out = CoshMds(d, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        worst = std::max(worst, std::abs(Dist(out.points[i], out.points[j]) - d[i * n + j]));
  }
  const double elapsed = Seconds(start);
  return {worst <= 1e-6 && elapsed < 10.0,
          Fmt("max distance error %.3g, %.2f s", worst, elapsed)};
}

Outcome QuadratureOracle() {
  const auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(202);
  Rng mc = DeriveStream(202, "quadrature");
  const double h = BandwidthDefault(20);
  const double truncation = TruncationDefault(20);
  double worst = 0.0;
  for (int pair = 0; pair < 10; ++pair) {
    std::vector<HPoint> a, b;
    for (int i = 0; i < 20; ++i) {
      a.push_back(testing::RandomPoint(rng, 1.5));
      b.push_back(testing::RandomPoint(rng, 1.5));
    }
    const DensityEstimate m1(a, h), m2(b, h);
    const double grid = testing::GridL2(m1, m2, truncation);
    const double estimate = L2Distance(m1, m2, QuadratureSpec{truncation, 100000}, mc);
    worst = std::max(worst, std::abs(estimate - grid) / grid);
  }
  const double elapsed = Seconds(start);
  return {worst <= 0.05 && elapsed < 60.0,
          Fmt("max relative error %.4f, %.1f s", worst, elapsed)};
}

ComparisonConfig PowerConfig(std::uint64_t seed) {
  ComparisonConfig cfg;
  cfg.bootstrap_replicates = 50;
  cfg.alpha = 0.1;
  cfg.link_threshold = 1.5;
  cfg.seed = seed;
  cfg.threads = 0;
  return cfg;
}

GeneratorSpec QuasiUniform(double delta) { return {QuasiUniformFamily{{delta, 1.0}}, 100, {1.5}}; }

Outcome SizeCalibration() {
  const auto start = std::chrono::steady_clock::now();
  const PowerResult r = PowerSimulation(QuasiUniform(1.0), QuasiUniform(1.0), 25, PowerConfig(303));
  return {r.rejections <= 7,
          Fmt("%.0f/25 rejections, %.0f regenerated pairs, %.1f s",
              static_cast<double>(r.rejections), static_cast<double>(r.regenerations),
              Seconds(start))};
}

Outcome PowerTrend() {
  const auto start = std::chrono::steady_clock::now();
  std::vector<double> power;
  for (double delta : {1.0, 10.0, 30.0})
    power.push_back(PowerSimulation(QuasiUniform(1.0), QuasiUniform(delta), 25, PowerConfig(404)).power);
  const bool pass = power[0] <= power[1] && power[1] <= power[2] && power[2] >= 0.8;
  return {pass, Fmt("power %.2f, %.2f, %.2f for delta 1, 10, 30; %.1f s", power[0], power[1],
                    power[2], Seconds(start))};
}

Outcome WattsStrogatzSeparation() {
  const auto start = std::chrono::steady_clock::now();
  const GeneratorSpec a{WattsStrogatzFamily{40, 0.1}, 85, {1.5}};
  const GeneratorSpec b{WattsStrogatzFamily{40, 0.3}, 85, {1.5}};
  const PowerResult r = PowerSimulation(a, b, 25, PowerConfig(505));
  return {r.power >= 0.9, Fmt("power %.2f, %.1f s", r.power, Seconds(start))};
}

Outcome ClusteringTrend() {
  std::vector<double> means;
  for (double delta : {1.0, 10.0, 30.0}) {
    double total = 0.0;
    for (std::uint64_t draw = 0; draw < 25; ++draw) {
      Rng rng = DeriveStream(606, "clustering", draw);
      total += AverageClustering(GenerateGraph(SampleQuasiUniform({delta, 1.0}, 100, rng), {1.5}));
    }
    means.push_back(total / 25);
  }
  return {means[0] < means[1] && means[1] < means[2],
          Fmt("mean clustering %.3f, %.3f, %.3f for delta 1, 10, 30", means[0], means[1], means[2])};
}

Outcome DegenerateCorrectness() {
  Rng rng = DeriveStream(707, "degenerate");
  const Graph g = Generate(QuasiUniform(1.0), rng);
  ComparisonConfig cfg = PowerConfig(707);
  const TestResult self = Compare(g, g, cfg);
  bool pass = self.d_star == 0.0 && self.p_value == 1.0;
  std::string detail = Fmt("compare(g, g): d* %.3g p %.3g", self.d_star, self.p_value);

  const DensityEstimate m = EstimateModel(g).model;
  const double self_l2 = L2Distance(m, m, QuadratureSpec{TruncationDefault(m.size())}, rng);
  pass = pass && self_l2 == 0.0;
  detail += Fmt("; l2(m, m) %.3g", self_l2);

  std::mt19937_64 gen(708);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  constexpr double kPi = std::numbers::pi;
  double worst = 0.0;
  for (int trial = 0; trial < 10000; ++trial) {
    const HPoint a = testing::RandomPoint(gen, 5.0);
    const HPoint b = testing::RandomPoint(gen, 5.0);
    const HPoint c = testing::RandomPoint(gen, 5.0);
    const double ab = Dist(a, b), ba = Dist(b, a), bc = Dist(b, c), ac = Dist(a, c);
    worst = std::max(worst, std::abs(ab - ba));
    worst = std::max(worst, ac - (ab + bc));
    const Rotation k(2.0 * kPi * unit(gen));
    worst = std::max(worst, std::abs(Dist(Rotate(k, a), Rotate(k, b)) - ab));
    const double r = 10.0 * unit(gen);
    worst = std::max(worst, std::abs(Dist(kBasepoint, PolarToPoint(PolarCoord(r, 2.0 * kPi * unit(gen)))) - r));
    worst = std::max(worst, std::abs(ImRotated(k, a) - Rotate(k, a).y));
  }
  pass = pass && worst <= 1e-9;
  detail += Fmt("; hgeom worst deviation %.3g over 1e4 cases", worst);
  return {pass, detail};
}

std::string RunCompare(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  if (cli::Run(args, out, err) != cli::kExitOk) return "error: " + err.str();
  std::ifstream in(args.back(), std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Outcome Reproducibility() {
  const std::filesystem::path dir = std::filesystem::temp_directory_path() / "hypnet_acceptance";
  std::filesystem::create_directories(dir);
  const std::string g1 = (dir / "g1.txt").string(), g2 = (dir / "g2.txt").string();
  std::ostringstream sink;
  cli::Run({"generate", "--family", "quasi-uniform", "--delta", "1", "--n", "100", "--seed", "1", "-o", g1},
           sink, sink);
  cli::Run({"generate", "--family", "quasi-uniform", "--delta", "10", "--n", "100", "--seed", "2", "-o", g2},
           sink, sink);
  bool pass = true;
  int documents = 0;
  for (const char* seed : {"11", "12"}) {
    std::string reference;
    for (const char* threads : {"1", "4", "0"}) {
      const std::string out = (dir / (std::string("result_") + seed + "_" + threads + ".txt")).string();
      const std::string doc =
          RunCompare({"compare", g1, g2, "--seed", seed, "--threads", threads, "-o", out});
      ++documents;
      if (doc.empty() || doc.starts_with("error:")) pass = false;
      if (reference.empty()) reference = doc;
      if (doc != reference) pass = false;
    }
  }
  std::filesystem::remove_all(dir);
  return {pass, Fmt("%.0f documents over 2 seeds and thread counts 1, 4, auto", documents)};
}

}  // namespace
}  // namespace hypnet

int main() {
  struct Criterion {
    const char* name;
    std::function<hypnet::Outcome()> check;
  };
  const std::vector<Criterion> criteria = {
      {"embedding exactness", hypnet::EmbeddingExactness},
      {"quadrature oracle", hypnet::QuadratureOracle},
      {"size calibration", hypnet::SizeCalibration},
      {"power trend", hypnet::PowerTrend},
      {"watts-strogatz separation", hypnet::WattsStrogatzSeparation},
      {"clustering trend", hypnet::ClusteringTrend},
      {"degenerate correctness", hypnet::DegenerateCorrectness},
      {"reproducibility", hypnet::Reproducibility},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    hypnet::Outcome outcome;
    try {
      outcome = criteria[i].check();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    if (!outcome.pass) ++failures;
    std::printf("%s [%zu] %s: %s\n", outcome.pass ? "PASS" : "FAIL", i + 1, criteria[i].name,
                outcome.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
