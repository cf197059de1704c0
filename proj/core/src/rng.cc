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

#include "hypnet/rng.h"

#include <array>
#include <cmath>
#include <numbers>

namespace hypnet {
namespace {

std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// FNV-1a; stream names are short compile-time literals.
std::uint64_t HashName(std::string_view name) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : name) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

Rng DeriveStream(std::uint64_t master_seed, std::string_view name,
                 std::uint64_t index) {
  std::uint64_t state = SplitMix64(master_seed);
  state = SplitMix64(state ^ HashName(name));
  state = SplitMix64(state ^ index);
  std::array<std::uint32_t, 8> words{};
  for (std::size_t i = 0; i < words.size(); i += 2) {
    state = SplitMix64(state);
    words[i] = static_cast<std::uint32_t>(state);
    words[i + 1] = static_cast<std::uint32_t>(state >> 32);
  }
  std::seed_seq seq(words.begin(), words.end());
  return Rng(seq);
}

double Uniform01(Rng& rng) {
  // 53 random bits; avoids implementation-defined distribution internals.
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double UniformAngle(Rng& rng) { return 2.0 * std::numbers::pi * Uniform01(rng); }

double StandardNormal(Rng& rng) {
  // Box-Muller on (0, 1]; one variate per call keeps streams position-stable.
  const double u1 = 1.0 - Uniform01(rng);
  const double u2 = Uniform01(rng);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace hypnet
