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

#include "hypnet/graphgen.h"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <type_traits>

namespace hypnet {
namespace {

void RequirePositive(double value, const char* what) {
  if (!(value > 0.0) || std::isnan(value)) {
    throw std::invalid_argument(std::string(what) + " must be positive");
  }
}

void RequireCount(std::size_t n) {
  if (n == 0) throw std::invalid_argument("sample size must be >= 1");
}

HPoint TangentNormal(const HPoint& base, double sd, Rng& rng) {
  const double vx = sd * StandardNormal(rng);
  const double vy = sd * StandardNormal(rng);
  return ExpMap(base, TangentVector{std::hypot(vx, vy), std::atan2(vx, vy)});
}

}  // namespace

void Validate(const QuasiUniformParams& p) {
  RequirePositive(p.delta, "quasi-uniform delta");
  RequirePositive(p.radius, "quasi-uniform radius");
  if (!std::isfinite(std::cosh(p.delta * p.radius))) {
    throw std::invalid_argument("quasi-uniform delta * radius overflows cosh");
  }
}

void Validate(const HypGaussianParams& p) { RequirePositive(p.sigma, "hyperbolic Gaussian sigma"); }

void Validate(const LinkRule& rule) { RequirePositive(rule.threshold, "link threshold"); }

double QuasiUniformRadius(const QuasiUniformParams& p, double u) {
  // acosh(1 + u (cosh(dR) - 1)) / d, written with expm1-style terms so that
  // small u stays accurate.
  const double scale = std::cosh(p.delta * p.radius) - 1.0;
  const double q = u * scale;
  const double r = std::log1p(q + std::sqrt(q * (q + 2.0))) / p.delta;
  return std::min(r, p.radius);
}

std::vector<HPoint> SampleQuasiUniform(const QuasiUniformParams& p, std::size_t n, Rng& rng) {
  Validate(p);
  RequireCount(n);
  std::vector<HPoint> points;
  points.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double theta = UniformAngle(rng);
    const double r = QuasiUniformRadius(p, Uniform01(rng));
    points.push_back(PolarToPoint(PolarCoord(r, theta)));
  }
  return points;
}

std::vector<HPoint> SampleHypGaussian(const HypGaussianParams& p, std::size_t n, Rng& rng) {
  Validate(p);
  RequireCount(n);
  std::vector<HPoint> points;
  points.reserve(n);
  for (std::size_t i = 0; i < n; ++i) points.push_back(TangentNormal(kBasepoint, p.sigma, rng));
  return points;
}

std::vector<HPoint> SampleFromKde(const DensityEstimate& model, std::size_t n, Rng& rng) {
  RequireCount(n);
  const double sd = std::sqrt(2.0 * model.bandwidth());
  const auto& centers = model.centers();
  std::vector<HPoint> points;
  points.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto pick = static_cast<std::size_t>(Uniform01(rng) * static_cast<double>(centers.size()));
    pick = std::min(pick, centers.size() - 1);
    points.push_back(TangentNormal(centers[pick], sd, rng));
  }
  return points;
}

Graph GenerateGraph(std::span<const HPoint> points, const LinkRule& rule) {
  Validate(rule);
  if (points.size() < 2) throw std::invalid_argument("GenerateGraph: need at least 2 points");
  // Compare in cosh space; cosh is monotone on [0, inf). An infinite
  // threshold connects everything.
  const double cosh_threshold = std::cosh(rule.threshold);
  Graph g(points.size());
  for (NodeId i = 0; i < points.size(); ++i) {
    for (NodeId j = i + 1; j < points.size(); ++j) {
      if (CoshDist(points[i], points[j]) <= cosh_threshold) g.AddEdge(i, j);
    }
  }
  return g;
}

Graph WattsStrogatz(std::size_t n, std::size_t k, double p, Rng& rng) {
  if (k < 2 || k % 2 != 0) throw std::invalid_argument("WattsStrogatz: k must be even and >= 2");
  if (n <= k) throw std::invalid_argument("WattsStrogatz: need n > k");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("WattsStrogatz: p must lie in [0, 1]");

  Graph g(n);
  const std::size_t half = k / 2;
  for (NodeId u = 0; u < n; ++u) {
    for (std::size_t j = 1; j <= half; ++j) g.AddEdge(u, static_cast<NodeId>((u + j) % n));
  }
  // Visit lattice edges ring-offset by ring-offset, as in the original
  // construction; a rewired edge keeps its source u.
  std::vector<NodeId> candidates;
  candidates.reserve(n);
  for (std::size_t j = 1; j <= half; ++j) {
    for (NodeId u = 0; u < n; ++u) {
      const auto v = static_cast<NodeId>((u + j) % n);
      if (Uniform01(rng) >= p) continue;
      candidates.clear();
      for (NodeId w = 0; w < n; ++w) {
        if (w != u && !g.HasEdge(u, w)) candidates.push_back(w);
      }
      if (candidates.empty()) continue;
      auto pick = static_cast<std::size_t>(Uniform01(rng) * static_cast<double>(candidates.size()));
      pick = std::min(pick, candidates.size() - 1);
      g.RemoveEdge(u, v);
      g.AddEdge(u, candidates[pick]);
    }
  }
  return g;
}

void Validate(const GeneratorSpec& spec) {
  std::visit(
      [&](const auto& fam) {
        using T = std::decay_t<decltype(fam)>;
        if constexpr (std::is_same_v<T, QuasiUniformFamily>) {
          Validate(fam.params);
        } else if constexpr (std::is_same_v<T, HypGaussianFamily>) {
          Validate(fam.params);
        } else {
          if (fam.k < 2 || fam.k % 2 != 0) throw std::invalid_argument("k must be even and >= 2");
          if (spec.nodes <= fam.k) throw std::invalid_argument("Watts-Strogatz needs n > k");
          if (!(fam.rewire >= 0.0 && fam.rewire <= 1.0)) {
            throw std::invalid_argument("rewiring probability must lie in [0, 1]");
          }
        }
      },
      spec.family);
  if (spec.nodes < 2) throw std::invalid_argument("generator needs at least 2 nodes");
  Validate(spec.link);
}

Graph Generate(const GeneratorSpec& spec, Rng& rng) {
  Validate(spec);
  return std::visit(
      [&](const auto& fam) -> Graph {
        using T = std::decay_t<decltype(fam)>;
        if constexpr (std::is_same_v<T, QuasiUniformFamily>) {
          return GenerateGraph(SampleQuasiUniform(fam.params, spec.nodes, rng), spec.link);
        } else if constexpr (std::is_same_v<T, HypGaussianFamily>) {
          return GenerateGraph(SampleHypGaussian(fam.params, spec.nodes, rng), spec.link);
        } else {
          return WattsStrogatz(spec.nodes, fam.k, fam.rewire, rng);
        }
      },
      spec.family);
}

std::string Describe(const GeneratorSpec& spec) {
  std::ostringstream out;
  std::visit(
      [&](const auto& fam) {
        using T = std::decay_t<decltype(fam)>;
        if constexpr (std::is_same_v<T, QuasiUniformFamily>) {
          out << "quasi-uniform(delta=" << fam.params.delta << ", R=" << fam.params.radius
              << ", c=" << spec.link.threshold << ")";
        } else if constexpr (std::is_same_v<T, HypGaussianFamily>) {
          out << "hyp-gaussian(sigma=" << fam.params.sigma << ", c=" << spec.link.threshold << ")";
        } else {
          out << "watts-strogatz(k=" << fam.k << ", p=" << fam.rewire << ")";
        }
      },
      spec.family);
  out << " n=" << spec.nodes;
  return out.str();
}

}  // namespace hypnet
