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

#ifndef HYPNET_EMBED_H_
#define HYPNET_EMBED_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "hypnet/graph.h"
#include "hypnet/hgeom.h"

namespace hypnet {

struct EmbeddedCloud {
  std::vector<HPoint> points;
  // Eigenvalues of the cosh-distance matrix, ascending.
  std::vector<double> spectrum;
};

class EmbeddingError : public std::runtime_error {
 public:
  enum class Reason { kInsufficientNegativeEigenvalues, kDegenerateRow, kDisconnectedInput };

  EmbeddingError(Reason reason, const std::string& what, std::vector<double> spectrum = {},
                 std::size_t row = 0);

  Reason reason() const { return reason_; }
  const std::vector<double>& spectrum() const { return spectrum_; }
  // Offending row for kDegenerateRow.
  std::size_t row() const { return row_; }

 private:
  Reason reason_;
  std::vector<double> spectrum_;
  std::size_t row_;
};

const char* ToString(EmbeddingError::Reason reason);

// Eigenvalues whose magnitude is below this fraction of the spectral radius
// count as zero when checking the signature.
inline constexpr double kSpectralZeroTolerance = 1e-9;

// Spectral cosh-MDS. Takes any symmetric matrix of pairwise hyperbolic
// distances (row-major, n x n) and returns half-plane points whose pairwise
// distances reproduce it exactly when cosh(D) has signature (1, 2, 0, ...).
// Throws EmbeddingError when the spectrum lacks one positive and two negative
// eigenvalues, or when a row is not timelike.
EmbeddedCloud CoshMds(const std::vector<double>& distances, std::size_t n);

// Same, on graph hop counts. All pairs must be reachable.
EmbeddedCloud CoshMds(const DistanceMatrix& d);

// Maps a point of the upper hyperboloid sheet xt^2 - x1^2 - x2^2 = 1 to the
// half-plane through the Poincare disk. Throws std::invalid_argument when the
// point is off the sheet by more than 1e-6 (relative to xt^2).
HPoint HyperboloidToHalfPlane(double x1, double x2, double xt);

}  // namespace hypnet

#endif  // HYPNET_EMBED_H_
