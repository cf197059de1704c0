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

#ifndef HYPNET_RNG_H_
#define HYPNET_RNG_H_

#include <cstdint>
#include <random>
#include <string_view>

namespace hypnet {

using Rng = std::mt19937_64;

// Derives an independent generator from a master seed, a stream name and an
// index. The same triple always yields the same stream, regardless of the
// order or thread in which streams are requested.
Rng DeriveStream(std::uint64_t master_seed, std::string_view name,
                 std::uint64_t index = 0);

// Uniform draw on [0, 1).
double Uniform01(Rng& rng);

// Uniform draw on [0, 2pi).
double UniformAngle(Rng& rng);

// Standard normal draw.
double StandardNormal(Rng& rng);

}  // namespace hypnet

#endif  // HYPNET_RNG_H_
