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

#include "hypnet/hkde.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace hypnet {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEightPiSquared = 8.0 * kPi * kPi;

}  // namespace

DensityEstimate::DensityEstimate(std::vector<HPoint> centers, double bandwidth)
    : centers_(std::move(centers)), bandwidth_(bandwidth) {
  if (centers_.empty()) throw std::invalid_argument("DensityEstimate: no centers");
  if (!(bandwidth_ > 0.0) || !std::isfinite(bandwidth_)) {
    throw std::invalid_argument("DensityEstimate: bandwidth must be positive");
  }
  for (const HPoint& z : centers_) {
    if (!IsValid(z)) throw std::invalid_argument("DensityEstimate: invalid center");
  }
}

QuadraturePoints QuadraturePoints::Draw(std::size_t pairs, Rng& rng) {
  if (pairs == 0) throw std::invalid_argument("QuadraturePoints: need at least one pair");
  std::vector<std::pair<double, double>> unit(pairs);
  for (auto& [u, v] : unit) {
    u = Uniform01(rng);
    v = Uniform01(rng);
  }
  return QuadraturePoints(std::move(unit));
}

QuadraturePoints::QuadraturePoints(std::vector<std::pair<double, double>> unit)
    : unit_(std::move(unit)) {}

SpectralPoint QuadraturePoints::At(std::size_t i, double truncation) const {
  const auto [u, v] = unit_.at(i);
  return {truncation * (2.0 * u - 1.0), 2.0 * kPi * v};
}

std::complex<double> HelgasonEmpirical(std::span<const HPoint> centers,
                                       const SpectralPoint& p) {
  if (centers.empty()) throw std::invalid_argument("HelgasonEmpirical: no centers");
  const Rotation k(p.theta);
  const std::complex<double> exponent(0.5, -p.t);
  std::complex<double> sum = 0.0;
  for (const HPoint& z : centers) {
    sum += std::exp(exponent * std::log(ImRotated(k, z)));
  }
  return sum / static_cast<double>(centers.size());
}

double KernelMultiplier(double bandwidth, double t) {
  return std::exp(-bandwidth * (t * t + 0.25));
}

std::complex<double> HelgasonKde(const DensityEstimate& model, const SpectralPoint& p) {
  return KernelMultiplier(model.bandwidth(), p.t) * HelgasonEmpirical(model.centers(), p);
}

double StatisticWeight(double t) { return t * std::tanh(t) / kEightPiSquared; }

double PlancherelWeight(double t) { return t * std::tanh(kPi * t) / kEightPiSquared; }

double L2Integrand(const DensityEstimate& m1, const DensityEstimate& m2,
                   const SpectralPoint& p) {
  return std::norm(HelgasonKde(m1, p) - HelgasonKde(m2, p)) * StatisticWeight(p.t);
}

double L2Distance(const DensityEstimate& m1, const DensityEstimate& m2,
                  double truncation, const QuadraturePoints& points) {
  if (!(truncation > 0.0)) throw std::invalid_argument("L2Distance: truncation must be positive");
  if (points.size() == 0) throw std::invalid_argument("L2Distance: no quadrature points");
  double sum = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    sum += L2Integrand(m1, m2, points.At(i, truncation));
  }
  return 4.0 * kPi * truncation * sum / static_cast<double>(points.size());
}

double L2Distance(const DensityEstimate& m1, const DensityEstimate& m2,
                  const QuadratureSpec& spec, Rng& rng) {
  return L2Distance(m1, m2, spec.truncation, QuadraturePoints::Draw(spec.pairs, rng));
}

double BandwidthDefault(std::size_t n) {
  if (n == 0) throw std::invalid_argument("BandwidthDefault: n must be >= 1");
  return 1.0 / (static_cast<double>(n) + 100.0);
}

double TruncationDefault(std::size_t n) {
  if (n == 0) throw std::invalid_argument("TruncationDefault: n must be >= 1");
  return std::pow(static_cast<double>(n), -1.0 / 6.0);
}

DensityEvaluator::DensityEvaluator(const DensityEstimate& model, const DensityGrid& grid)
    : grid_(grid) {
  if (grid.t_nodes < 3 || grid.theta_nodes < 4) {
    throw std::invalid_argument("DensityGrid: too few nodes");
  }
  if (!(grid.kernel_floor > 0.0 && grid.kernel_floor < 1.0)) {
    throw std::invalid_argument("DensityGrid: kernel_floor must lie in (0, 1)");
  }
  const double h = model.bandwidth();
  cutoff_ = std::sqrt(std::max(-std::log(grid.kernel_floor) / h - 0.25, 1.0));
  t_step_ = 2.0 * cutoff_ / static_cast<double>(grid.t_nodes - 1);

  const std::size_t nt = grid.t_nodes;
  const std::size_t nq = grid.theta_nodes;
  const double theta_step = 2.0 * kPi / static_cast<double>(nq);
  rotations_.reserve(nq);
  weighted_transform_.assign(nt * nq, 0.0);
  const double inv_n = 1.0 / static_cast<double>(model.size());
  constexpr std::size_t kReanchor = 128;
  for (std::size_t k = 0; k < nq; ++k) {
    rotations_.emplace_back(theta_step * static_cast<double>(k));
    std::complex<double>* row = &weighted_transform_[k * nt];
    // Empirical transform along the t grid, one center at a time.
    for (const HPoint& c : model.centers()) {
      const double log_im = std::log(ImRotated(rotations_[k], c));
      const double amplitude = std::exp(0.5 * log_im) * inv_n;
      const std::complex<double> step = std::polar(1.0, -t_step_ * log_im);
      std::complex<double> phase;
      for (std::size_t j = 0; j < nt; ++j) {
        if (j % kReanchor == 0) {
          phase = std::polar(amplitude, -(-cutoff_ + t_step_ * static_cast<double>(j)) * log_im);
        }
        row[j] += phase;
        phase *= step;
      }
    }
    for (std::size_t j = 0; j < nt; ++j) {
      const double t = -cutoff_ + t_step_ * static_cast<double>(j);
      const double trapezoid = (j == 0 || j + 1 == nt) ? 0.5 * t_step_ : t_step_;
      row[j] *= trapezoid * theta_step * PlancherelWeight(t) * KernelMultiplier(h, t);
    }
  }
}

double DensityEvaluator::operator()(const HPoint& z) const {
  const std::size_t nt = grid_.t_nodes;
  // Powers e^{i t_j L} are advanced by a fixed phase step and re-anchored
  // periodically to bound rounding drift.
  constexpr std::size_t kReanchor = 128;
  std::complex<double> total = 0.0;
  for (std::size_t k = 0; k < rotations_.size(); ++k) {
    const double log_im = std::log(ImRotated(rotations_[k], z));
    const std::complex<double> step = std::polar(1.0, t_step_ * log_im);
    const std::complex<double>* row = &weighted_transform_[k * nt];
    std::complex<double> row_sum = 0.0;
    std::complex<double> phase;
    for (std::size_t j = 0; j < nt; ++j) {
      if (j % kReanchor == 0) {
        phase = std::polar(1.0, (-cutoff_ + t_step_ * static_cast<double>(j)) * log_im);
      }
      row_sum += row[j] * phase;
      phase *= step;
    }
    total += std::exp(0.5 * log_im) * row_sum;
  }
  if (std::abs(total.imag()) > 1e-6 * std::max(1.0, std::abs(total.real()))) {
    throw std::logic_error("DensityEvaluator: inverse transform is not real (imag " +
                           std::to_string(total.imag()) + ")");
  }
  return total.real();
}

double DensityAt(const DensityEstimate& model, const HPoint& z, const DensityGrid& grid) {
  return DensityEvaluator(model, grid)(z);
}

}  // namespace hypnet
