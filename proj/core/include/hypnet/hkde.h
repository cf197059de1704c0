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

#ifndef HYPNET_HKDE_H_
#define HYPNET_HKDE_H_

// Kernel density estimation on the hyperbolic plane, carried out in the
// Helgason-Fourier domain.
//
// The transform of a density f is H[f](t, theta) = integral of
// f(z) Im(k_theta z)^(1/2 - i t) dz, with s = 1/2 + i t. For the empirical
// measure of n centers this is a finite sum. The kernel is the hyperbolic
// Gaussian (heat kernel) at time h, whose transform is the real multiplier
// e^{-h (t^2 + 1/4)}; convolution with it is a pointwise product.

#include <complex>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "hypnet/hgeom.h"
#include "hypnet/rng.h"

namespace hypnet {

// Kernel density estimate: equal-weight mixture of heat kernels of time
// `bandwidth` centered at `centers`.
class DensityEstimate {
 public:
  DensityEstimate(std::vector<HPoint> centers, double bandwidth);

  const std::vector<HPoint>& centers() const { return centers_; }
  double bandwidth() const { return bandwidth_; }
  std::size_t size() const { return centers_.size(); }

 private:
  std::vector<HPoint> centers_;
  double bandwidth_;
};

struct SpectralPoint {
  double t = 0.0;
  double theta = 0.0;
};

struct QuadratureSpec {
  double truncation = 1.0;  // integrate t over [-T, T]
  std::size_t pairs = 100;
};

// Uniform draws on [0,1)^2, mapped to (t, theta) in [-T, T] x [0, 2pi) on
// demand. Sharing one set across every distance of a comparison keeps the
// distances exactly comparable even when T differs between them.
class QuadraturePoints {
 public:
  static QuadraturePoints Draw(std::size_t pairs, Rng& rng);
  explicit QuadraturePoints(std::vector<std::pair<double, double>> unit);

  std::size_t size() const { return unit_.size(); }
  SpectralPoint At(std::size_t i, double truncation) const;

 private:
  std::vector<std::pair<double, double>> unit_;
};

// (1/n) sum_i Im(k_theta Z_i)^(1/2 - i t).
std::complex<double> HelgasonEmpirical(std::span<const HPoint> centers,
                                       const SpectralPoint& p);

// e^{-h (t^2 + 1/4)}.
double KernelMultiplier(double bandwidth, double t);

std::complex<double> HelgasonKde(const DensityEstimate& model, const SpectralPoint& p);

// Spectral measure of the distance statistic, t tanh(t) / (8 pi^2).
double StatisticWeight(double t);

// Plancherel density of the inverse transform, t tanh(pi t) / (8 pi^2).
double PlancherelWeight(double t);

// |H[f1] - H[f2]|^2 * StatisticWeight(t) at a single spectral point.
double L2Integrand(const DensityEstimate& m1, const DensityEstimate& m2,
                   const SpectralPoint& p);

// Monte Carlo estimate of the spectral L2 distance over [-T, T] x [0, 2pi):
// the domain measure 4 pi T times the mean integrand. Summation order is
// fixed, so the result is bit-reproducible for given points.
double L2Distance(const DensityEstimate& m1, const DensityEstimate& m2,
                  double truncation, const QuadraturePoints& points);
double L2Distance(const DensityEstimate& m1, const DensityEstimate& m2,
                  const QuadratureSpec& spec, Rng& rng);

// 1 / (n + 100).
double BandwidthDefault(std::size_t n);
// n^(-1/6).
double TruncationDefault(std::size_t n);

// Trapezoid grid for the inverse transform. The spectral cutoff is chosen
// where the kernel multiplier drops below `kernel_floor`.
struct DensityGrid {
  std::size_t t_nodes = 2049;
  std::size_t theta_nodes = 512;
  double kernel_floor = 1e-8;
};

// Evaluates the estimate in the spatial domain by numerically inverting its
// transform. The transform is tabulated once, so evaluating many points is
// much cheaper than repeated DensityAt calls.
class DensityEvaluator {
 public:
  DensityEvaluator(const DensityEstimate& model, const DensityGrid& grid = {});

  double operator()(const HPoint& z) const;
  double cutoff() const { return cutoff_; }

 private:
  DensityGrid grid_;
  double cutoff_;
  double t_step_;
  std::vector<Rotation> rotations_;
  // Row-major [t][theta]: transform times quadrature and Plancherel weights.
  std::vector<std::complex<double>> weighted_transform_;
};

double DensityAt(const DensityEstimate& model, const HPoint& z,
                 const DensityGrid& grid = {});

}  // namespace hypnet

#endif  // HYPNET_HKDE_H_
