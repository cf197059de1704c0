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

#include "hypnet/embed.h"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <sstream>

namespace hypnet {

EmbeddingError::EmbeddingError(Reason reason, const std::string& what,
                               std::vector<double> spectrum, std::size_t row)
    : std::runtime_error(what), reason_(reason), spectrum_(std::move(spectrum)), row_(row) {}

const char* ToString(EmbeddingError::Reason reason) {
  switch (reason) {
    case EmbeddingError::Reason::kInsufficientNegativeEigenvalues:
      return "insufficient-negative-eigenvalues";
    case EmbeddingError::Reason::kDegenerateRow:
      return "degenerate-row";
    case EmbeddingError::Reason::kDisconnectedInput:
      return "disconnected-input";
  }
  return "unknown";
}

HPoint HyperboloidToHalfPlane(double x1, double x2, double xt) {
  const double quadric = xt * xt - x1 * x1 - x2 * x2;
  if (!(xt > 0.0) || !(std::abs(quadric - 1.0) <= 1e-6 * std::max(1.0, xt * xt))) {
    throw std::invalid_argument("HyperboloidToHalfPlane: point is off the upper sheet");
  }
  // Disk point w = (x1 + i x2) / (1 + xt), then z = i (1 - w) / (1 + w).
  // 1 - |w|^2 equals 2 / (1 + xt) on the sheet.
  const double wr = x1 / (1.0 + xt);
  const double wi = x2 / (1.0 + xt);
  const double den = (1.0 + wr) * (1.0 + wr) + wi * wi;
  return {2.0 * wi / den, (2.0 / (1.0 + xt)) / den};
}

namespace {

std::string DescribeSpectrum(const char* prefix, const std::vector<double>& spectrum) {
  std::ostringstream out;
  out << prefix << " (n=" << spectrum.size();
  if (!spectrum.empty()) {
    out << ", smallest=" << spectrum.front();
    if (spectrum.size() > 1) out << ", " << spectrum[1];
    out << ", largest=" << spectrum.back();
  }
  out << ")";
  return out.str();
}

// Sign convention: the largest-magnitude entry is positive (first one wins).
void FixSign(Eigen::Ref<Eigen::VectorXd> v) {
  Eigen::Index arg = 0;
  v.cwiseAbs().maxCoeff(&arg);
  if (v(arg) < 0.0) v = -v;
}

}  // namespace

EmbeddedCloud CoshMds(const std::vector<double>& distances, std::size_t n) {
  if (distances.size() != n * n) throw std::invalid_argument("CoshMds: matrix size mismatch");
  Eigen::MatrixXd r(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      r(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          std::cosh(distances[i * n + j]);
    }
  }

  std::vector<double> spectrum;
  if (n < 3) {
    // Too small for one positive and two negative eigenvalues; still report
    // the spectrum.
    if (n > 0) {
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> small(r, Eigen::EigenvaluesOnly);
      spectrum.assign(small.eigenvalues().data(), small.eigenvalues().data() + n);
    }
    throw EmbeddingError(EmbeddingError::Reason::kInsufficientNegativeEigenvalues,
                         DescribeSpectrum("cosh-distance matrix needs n >= 3", spectrum),
                         spectrum);
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(r);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("CoshMds: eigendecomposition did not converge");
  }
  const Eigen::VectorXd& values = solver.eigenvalues();  // ascending
  spectrum.assign(values.data(), values.data() + n);
  const double scale = values.cwiseAbs().maxCoeff();
  const double zero = kSpectralZeroTolerance * std::max(scale, 1.0);
  const auto last = static_cast<Eigen::Index>(n - 1);
  if (!(values(last) > zero && values(0) < -zero && values(1) < -zero)) {
    throw EmbeddingError(
        EmbeddingError::Reason::kInsufficientNegativeEigenvalues,
        DescribeSpectrum("cosh-distance matrix lacks one positive and two negative eigenvalues",
                         spectrum),
        spectrum);
  }

  Eigen::VectorXd time_axis = solver.eigenvectors().col(last);
  Eigen::VectorXd axis1 = solver.eigenvectors().col(0);
  Eigen::VectorXd axis2 = solver.eigenvectors().col(1);
  FixSign(axis1);
  FixSign(axis2);
  // The leading eigenvector of an entrywise-positive matrix is one-signed.
  if (time_axis.sum() < 0.0) time_axis = -time_axis;
  time_axis *= std::sqrt(values(last));
  axis1 *= std::sqrt(-values(0));
  axis2 *= std::sqrt(-values(1));

  EmbeddedCloud cloud;
  cloud.spectrum = std::move(spectrum);
  cloud.points.reserve(n);
  for (Eigen::Index i = 0; i < static_cast<Eigen::Index>(n); ++i) {
    const double xt = time_axis(i);
    const double x1 = axis1(i);
    const double x2 = axis2(i);
    const double quadric = xt * xt - x1 * x1 - x2 * x2;
    if (!(xt > 0.0) || !(quadric > 0.0)) {
      throw EmbeddingError(EmbeddingError::Reason::kDegenerateRow,
                           "row " + std::to_string(i) + " is not timelike",
                           cloud.spectrum, static_cast<std::size_t>(i));
    }
    const double norm = std::sqrt(quadric);
    cloud.points.push_back(HyperboloidToHalfPlane(x1 / norm, x2 / norm, xt / norm));
  }
  return cloud;
}

EmbeddedCloud CoshMds(const DistanceMatrix& d) {
  const std::size_t n = d.size();
  if (!d.AllReachable()) {
    throw EmbeddingError(EmbeddingError::Reason::kDisconnectedInput,
                         "distance matrix has unreachable pairs");
  }
  std::vector<double> distances(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) distances[i * n + j] = d.at(i, j);
  }
  return CoshMds(distances, n);
}

}  // namespace hypnet
