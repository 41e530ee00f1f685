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

#include <rispath/random.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <set>

using namespace rispath;

// Known-answer vectors for Philox4x32-10 (Random123 distribution), confirmed
// against the randomgen Python package.
TEST(Philox, KnownAnswers) {
  using C = Philox4x32::Counter;
  EXPECT_EQ(Philox4x32::apply({0, 0, 0, 0}, {0, 0}), (C{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8}));
  EXPECT_EQ(Philox4x32::apply({1, 0, 0, 0}, {0, 0}), (C{0xf8e4cca4, 0x5cb200db, 0xb1a574eb, 0x097eff67}));
  EXPECT_EQ(Philox4x32::apply({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, {0xa4093822, 0x299f31d0}),
            (C{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1}));
}

TEST(CounterRng, SatisfiesUrbgConcept) {
  static_assert(std::uniform_random_bit_generator<CounterRng>);
  CounterRng rng(1, 2);
  std::uniform_int_distribution<int> d(0, 9);
  EXPECT_LE(d(rng), 9);
}

TEST(CounterRng, StreamsAreReproducibleAndDistinct) {
  auto draw = [](std::uint64_t seed, std::uint64_t trial, Substream sub) {
    CounterRng r(seed, trial, sub);
    std::vector<std::uint64_t> v;
    for (int i = 0; i < 9; ++i) v.push_back(r());
    return v;
  };
  EXPECT_EQ(draw(5, 7, Substream::phases), draw(5, 7, Substream::phases));
  std::set<std::vector<std::uint64_t>> distinct{draw(5, 7, Substream::phases), draw(5, 7, Substream::noise),
                                                draw(5, 8, Substream::phases), draw(6, 7, Substream::phases),
                                                draw(5, 7ull << 33, Substream::phases)};
  EXPECT_EQ(distinct.size(), 5u);
}

TEST(Uniform, RangesAndMoments) {
  CounterRng rng(42, 0);
  constexpr int n = 1'000'000;
  double sc = 0, ss = 0, su = 0;
  for (int i = 0; i < n; ++i) {
    const double u = uniform01(rng);
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    su += u;
    const double b = uniform_phase(rng);
    ASSERT_GE(b, -std::numbers::pi);
    ASSERT_LT(b, std::numbers::pi);
    sc += std::cos(b);
    ss += std::sin(b);
    const double o = uniform_open01(rng);
    ASSERT_GT(o, 0.0);
    ASSERT_LE(o, 1.0);
  }
  // cos and sin of a uniform phase have variance 1/2.
  const double se = std::sqrt(0.5 / n);
  EXPECT_LT(std::abs(sc / n), 3 * se);
  EXPECT_LT(std::abs(ss / n), 3 * se);
  EXPECT_LT(std::abs(su / n - 0.5), 3 * std::sqrt(1.0 / 12 / n));
}

TEST(Normal, PairMoments) {
  constexpr int n = 500'000;
  double m1 = 0, m2 = 0, v1 = 0, v2 = 0, c = 0;
  for (int i = 0; i < n; ++i) {
    CounterRng rng(3, static_cast<std::uint64_t>(i), Substream::noise);
    const auto [a, b] = standard_normal_pair(rng);
    m1 += a;
    m2 += b;
    v1 += a * a;
    v2 += b * b;
    c += a * b;
  }
  const double se = 1.0 / std::sqrt(double(n));
  EXPECT_LT(std::abs(m1 / n), 3 * se);
  EXPECT_LT(std::abs(m2 / n), 3 * se);
  EXPECT_NEAR(v1 / n, 1.0, 3 * std::sqrt(2.0) * se);
  EXPECT_NEAR(v2 / n, 1.0, 3 * std::sqrt(2.0) * se);
  EXPECT_LT(std::abs(c / n), 3 * se);
}

TEST(DeriveSeed, Spreads) {
  std::set<std::uint64_t> s;
  for (std::uint64_t a = 0; a < 100; ++a)
    for (std::uint64_t b = 0; b < 3; ++b) s.insert(derive_seed(1, a, b));
  EXPECT_EQ(s.size(), 300u);
  EXPECT_EQ(derive_seed(9, 4, 2), derive_seed(9, 4, 2));
}
