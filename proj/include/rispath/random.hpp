// SPDX-License-Identifier: Apache-2.0
//
// ris-pathid: RIS-assisted path identification toolkit
// Copyright (C) 2026 The ris-pathid authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <utility>

namespace rispath {

/// Philox4x32-10 block function (Salmon et al., "Parallel random numbers:
/// as easy as 1, 2, 3", SC'11).
struct Philox4x32 {
  using Counter = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  static constexpr Counter apply(Counter ctr, Key key) {
    for (int round = 0; round < 10; ++round) {
      if (round > 0) {
        key[0] += 0x9E3779B9u;
        key[1] += 0xBB67AE85u;
      }
      const std::uint64_t p0 = std::uint64_t{0xD2511F53u} * ctr[0];
      const std::uint64_t p1 = std::uint64_t{0xCD9E8D57u} * ctr[2];
      const auto hi0 = static_cast<std::uint32_t>(p0 >> 32), lo0 = static_cast<std::uint32_t>(p0);
      const auto hi1 = static_cast<std::uint32_t>(p1 >> 32), lo1 = static_cast<std::uint32_t>(p1);
      ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
    }
    return ctr;
  }
};

enum class Substream : std::uint32_t { phases = 0, noise = 1 };

/// Reproducible stream keyed by (seed, trial, substream). Streams with
/// different keys are statistically independent, so trials can be drawn in
/// any order or on any thread. Satisfies std::uniform_random_bit_generator.
class CounterRng {
 public:
  using result_type = std::uint64_t;

  constexpr CounterRng(std::uint64_t seed, std::uint64_t trial, Substream sub = Substream::phases)
      : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
        trial_(trial),
        sub_(static_cast<std::uint32_t>(sub)) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  constexpr result_type operator()() {
    if (pos_ == 2) refill();
    const std::size_t i = 2 * pos_++;
    return (std::uint64_t{block_[i + 1]} << 32) | block_[i];
  }

 private:
  constexpr void refill() {
    const Philox4x32::Counter ctr{block_index_++, sub_, static_cast<std::uint32_t>(trial_),
                                  static_cast<std::uint32_t>(trial_ >> 32)};
    block_ = Philox4x32::apply(ctr, key_);
    pos_ = 0;
  }

  Philox4x32::Key key_;
  std::uint64_t trial_;
  std::uint32_t sub_;
  std::uint32_t block_index_ = 0;
  Philox4x32::Counter block_{};
  std::size_t pos_ = 2;
};

/// SplitMix64 finalizer; used to derive independent seeds from a base seed.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) {
  return splitmix64(splitmix64(splitmix64(seed) ^ a) ^ b);
}

/// Uniform on [0, 1) with 53 random bits.
template <class Rng>
double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform on (0, 1].
template <class Rng>
double uniform_open01(Rng& rng) {
  return static_cast<double>((rng() >> 11) + 1) * 0x1.0p-53;
}

/// Uniform phase on [-pi, pi).
template <class Rng>
double uniform_phase(Rng& rng) {
  const double beta = -std::numbers::pi + 2.0 * std::numbers::pi * uniform01(rng);
  return beta >= std::numbers::pi ? -std::numbers::pi : beta;
}

/// Two independent standard normals (Box-Muller).
template <class Rng>
std::pair<double, double> standard_normal_pair(Rng& rng) {
  const double r = std::sqrt(-2.0 * std::log(uniform_open01(rng)));
  const double t = 2.0 * std::numbers::pi * uniform01(rng);
  return {r * std::cos(t), r * std::sin(t)};
}

}  // namespace rispath
