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

#ifndef HYPNET_GRAPHGEN_H_
#define HYPNET_GRAPHGEN_H_

#include <cstddef>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "hypnet/graph.h"
#include "hypnet/hgeom.h"
#include "hypnet/hkde.h"
#include "hypnet/rng.h"

namespace hypnet {

// Quasi-uniform density q_{delta,R}: rotation invariant about i with radial
// CDF (cosh(delta r) - 1) / (cosh(delta R) - 1) on [0, R].
struct QuasiUniformParams {
  double delta = 1.0;
  double radius = 1.0;
};

// Tangent-space isotropic normal at i pushed through the exponential map.
struct HypGaussianParams {
  double sigma = 0.1;
};

// Hard threshold link: nodes connect iff their distance is <= threshold.
struct LinkRule {
  double threshold = 1.5;
};

void Validate(const QuasiUniformParams& p);
void Validate(const HypGaussianParams& p);
void Validate(const LinkRule& rule);

// Inverse radial CDF of q_{delta,R} at u in [0, 1].
double QuasiUniformRadius(const QuasiUniformParams& p, double u);

std::vector<HPoint> SampleQuasiUniform(const QuasiUniformParams& p, std::size_t n, Rng& rng);
std::vector<HPoint> SampleHypGaussian(const HypGaussianParams& p, std::size_t n, Rng& rng);

// Draws from a kernel density estimate: a uniformly chosen center, perturbed
// by a tangent normal of standard deviation sqrt(2h).
std::vector<HPoint> SampleFromKde(const DensityEstimate& model, std::size_t n, Rng& rng);

Graph GenerateGraph(std::span<const HPoint> points, const LinkRule& rule);

// Ring lattice of degree k, each lattice edge rewired with probability p to a
// uniform target that is neither the source nor an existing neighbor.
Graph WattsStrogatz(std::size_t n, std::size_t k, double p, Rng& rng);

struct QuasiUniformFamily {
  QuasiUniformParams params;
};
struct HypGaussianFamily {
  HypGaussianParams params;
};
struct WattsStrogatzFamily {
  std::size_t k = 40;
  double rewire = 0.1;
};

// A graph-valued random generator. Latent-space families connect their
// sampled points with `link`; Watts-Strogatz ignores it.
struct GeneratorSpec {
  std::variant<QuasiUniformFamily, HypGaussianFamily, WattsStrogatzFamily> family;
  std::size_t nodes = 100;
  LinkRule link;
};

void Validate(const GeneratorSpec& spec);
Graph Generate(const GeneratorSpec& spec, Rng& rng);
std::string Describe(const GeneratorSpec& spec);

}  // namespace hypnet

#endif  // HYPNET_GRAPHGEN_H_
