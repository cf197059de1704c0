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

#include "hypnet/hgeom.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hypnet {

bool IsValid(const HPoint& z) {
  return std::isfinite(z.x) && std::isfinite(z.y) && z.y > 0.0;
}

double WrapAngle(double theta) {
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  double wrapped = std::fmod(theta, kTwoPi);
  if (wrapped < 0.0) wrapped += kTwoPi;
  // fmod of a tiny negative value can round up to exactly 2pi.
  if (wrapped >= kTwoPi) wrapped = 0.0;
  return wrapped;
}

PolarCoord::PolarCoord(double r, double theta) : r_(r), theta_(WrapAngle(theta)) {
  if (!(r >= 0.0) || !std::isfinite(r) || !std::isfinite(theta)) {
    throw std::invalid_argument("PolarCoord: r must be finite and >= 0");
  }
}

Rotation::Rotation(double theta) : theta_(WrapAngle(theta)) {
  if (!std::isfinite(theta)) {
    throw std::invalid_argument("Rotation: angle must be finite");
  }
  cos_half_ = std::cos(0.5 * theta_);
  sin_half_ = std::sin(0.5 * theta_);
}

double CoshDist(const HPoint& a, const HPoint& b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  const double arg = 1.0 + (dx * dx + dy * dy) / (2.0 * a.y * b.y);
  return std::max(arg, 1.0);
}

double Dist(const HPoint& a, const HPoint& b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  const double q = (dx * dx + dy * dy) / (2.0 * a.y * b.y);
  // acosh(1 + q) = log1p(q + sqrt(q (q + 2))) keeps precision for close points.
  return std::log1p(q + std::sqrt(q * (q + 2.0)));
}

HPoint Rotate(const Rotation& k, const HPoint& z) {
  // (a z + b) / (c z + d) with determinant one.
  const double den_re = k.c() * z.x + k.d();
  const double den_im = k.c() * z.y;
  const double num_re = k.a() * z.x + k.b();
  const double num_im = k.a() * z.y;
  const double norm = den_re * den_re + den_im * den_im;
  return {(num_re * den_re + num_im * den_im) / norm, z.y / norm};
}

double ImRotated(const Rotation& k, const HPoint& z) {
  const double den_re = k.c() * z.x + k.d();
  const double den_im = k.c() * z.y;
  return z.y / (den_re * den_re + den_im * den_im);
}

HPoint PolarToPoint(const PolarCoord& p) {
  return Rotate(Rotation(p.theta()), HPoint{0.0, std::exp(p.r())});
}

HPoint ExpMap(const HPoint& base, const TangentVector& v) {
  const HPoint at_origin = PolarToPoint(PolarCoord(v.magnitude, v.direction));
  return {base.y * at_origin.x + base.x, base.y * at_origin.y};
}

}  // namespace hypnet
