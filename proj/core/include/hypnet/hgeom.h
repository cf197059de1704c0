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

#ifndef HYPNET_HGEOM_H_
#define HYPNET_HGEOM_H_

#include <numbers>

namespace hypnet {

// A point of the Poincare half-plane {x + iy : y > 0} with metric
// (dx^2 + dy^2) / y^2.
struct HPoint {
  double x = 0.0;
  double y = 1.0;

  friend bool operator==(const HPoint&, const HPoint&) = default;
};

// The basepoint i.
inline constexpr HPoint kBasepoint{0.0, 1.0};

bool IsValid(const HPoint& z);

// Geodesic polar coordinates about i. `theta` is kept in [0, 2pi).
class PolarCoord {
 public:
  PolarCoord(double r, double theta);

  double r() const { return r_; }
  double theta() const { return theta_; }

 private:
  double r_;
  double theta_;
};

// Element k_theta of the stabilizer of i, acting as the SL2 matrix
// [[cos(theta/2), sin(theta/2)], [-sin(theta/2), cos(theta/2)]]. The half
// angle makes theta in [0, 2pi) one full geometric turn about i, with
// differential e^{i theta} at i.
class Rotation {
 public:
  explicit Rotation(double theta);

  double theta() const { return theta_; }
  double a() const { return cos_half_; }
  double b() const { return sin_half_; }
  double c() const { return -sin_half_; }
  double d() const { return cos_half_; }

 private:
  double theta_;
  double cos_half_;
  double sin_half_;
};

// Reduces an angle into [0, 2pi).
double WrapAngle(double theta);

// Hyperbolic distance arccosh(1 + |a - b|^2 / (2 a.y b.y)).
double Dist(const HPoint& a, const HPoint& b);

// cosh of the hyperbolic distance; avoids the arccosh when only the
// Minkowski inner product is needed.
double CoshDist(const HPoint& a, const HPoint& b);

HPoint Rotate(const Rotation& k, const HPoint& z);

// Im(k(z)), computed without forming k(z).
double ImRotated(const Rotation& k, const HPoint& z);

// rotate(theta, i e^r); satisfies Dist(i, result) == r. theta = 0 points up
// the imaginary axis.
HPoint PolarToPoint(const PolarCoord& p);

// Tangent vector in geodesic polar form. Directions are transported from i
// by the affine isometry z -> base.y * z + base.x, so direction 0 is always
// "up".
struct TangentVector {
  double magnitude = 0.0;
  double direction = 0.0;
};

HPoint ExpMap(const HPoint& base, const TangentVector& v);

}  // namespace hypnet

#endif  // HYPNET_HGEOM_H_
