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

#include <rispath/patterns.hpp>
#include <rispath/scene.hpp>

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <set>

using namespace rispath;

namespace {

void expect_valid(const RisPartition& p, std::size_t q) {
  std::vector<std::size_t> all;
  for (const auto* s : {&p.a1, &p.a2, &p.a3}) all.insert(all.end(), s->begin(), s->end());
  std::sort(all.begin(), all.end());
  ASSERT_EQ(all.size(), q);
  for (std::size_t i = 0; i < q; ++i) EXPECT_EQ(all[i], i);
}

CascadedChannel reference_channel() {
  const Scene s = reference_scene();
  return cascaded_channel(s, build_layout(s));
}

}  // namespace

TEST(Partition, DefaultSizes) {
  const auto p = make_partition(1000, 500, 400, 100);
  EXPECT_EQ(p.n(), 500u);
  EXPECT_EQ(p.m(), 400u);
  EXPECT_EQ(p.k(), 100u);
  expect_valid(p, 1000);
  EXPECT_EQ(p.a1.front(), 0u);
  EXPECT_EQ(p.a2.front(), 500u);
  EXPECT_EQ(p.a3.front(), 900u);
}

TEST(Partition, DynamicFirstBlockOrder) {
  const auto p = make_partition(10, 3, 3, 4, PartitionPolicy::dynamic_first());
  EXPECT_EQ(p.a3, (std::vector<std::size_t>{0, 1, 2, 3}));
  EXPECT_EQ(p.a1, (std::vector<std::size_t>{4, 5, 6}));
  EXPECT_EQ(p.a2, (std::vector<std::size_t>{7, 8, 9}));
}

TEST(Partition, EmptyDynamicArea) {
  const auto p = make_partition(10, 6, 4, 0);
  EXPECT_TRUE(p.a3.empty());
  expect_valid(p, 10);
}

TEST(Partition, InterleavedIsDeterministicAndValid) {
  const auto a = make_partition(10, 3, 3, 4, PartitionPolicy::interleaved(7));
  const auto b = make_partition(10, 3, 3, 4, PartitionPolicy::interleaved(7));
  EXPECT_EQ(a.a1, b.a1);
  EXPECT_EQ(a.a2, b.a2);
  EXPECT_EQ(a.a3, b.a3);
  expect_valid(a, 10);
  EXPECT_EQ(a.n(), 3u);
  EXPECT_EQ(a.k(), 4u);

  const auto big = make_partition(1000, 500, 400, 100, PartitionPolicy::interleaved(1));
  const auto other = make_partition(1000, 500, 400, 100, PartitionPolicy::interleaved(2));
  expect_valid(big, 1000);
  EXPECT_NE(big.a3, other.a3);
  // A shuffle scatters the dynamic area over the whole array.
  EXPECT_LT(big.a3.front(), 100u);
  EXPECT_GT(big.a3.back(), 900u);
}

TEST(Partition, Errors) {
  EXPECT_THROW(make_partition(10, 3, 3, 3), std::invalid_argument);
  EXPECT_THROW(make_partition(10, 0, 5, 5), std::invalid_argument);
}

TEST(Partition, PolicyNames) {
  for (const auto& p : {PartitionPolicy::contiguous(), PartitionPolicy::dynamic_first(), PartitionPolicy::interleaved(99)})
    EXPECT_EQ(parse_partition_policy(to_string(p)), p);
  EXPECT_THROW(parse_partition_policy("interleaved:"), std::invalid_argument);
  EXPECT_THROW(parse_partition_policy("interleaved:x"), std::invalid_argument);
  EXPECT_THROW(parse_partition_policy("random"), std::invalid_argument);
}

TEST(CoherentPhases, SimpleCases) {
  CascadedChannel ch;
  ch.per_element = {{2.0, 0.0}, {0.0, 3.0}, {-1.0, 0.0}};
  for (const auto& g : ch.per_element) ch.amplitudes.push_back(std::abs(g));
  const std::vector<std::size_t> idx{0, 1, 2};
  const auto ph = coherent_phases(ch, idx);
  EXPECT_EQ(ph[0].second, 0.0);
  EXPECT_DOUBLE_EQ(ph[1].second, -std::numbers::pi / 2);
  EXPECT_DOUBLE_EQ(ph[2].second, -std::numbers::pi);  // -arg(-1) = -pi, inside [-pi, pi)
}

TEST(CoherentPhases, PartialSumIsReal) {
  const auto ch = reference_channel();
  for (auto policy : {PartitionPolicy::contiguous(), PartitionPolicy::interleaved(3)}) {
    const auto p = make_partition(1000, 500, 400, 100, policy);
    for (const auto* set : {&p.a1, &p.a2, &p.a3}) {
      PhaseVector pv;
      pv.phases.assign(1000, 0.0);
      for (auto [q, b] : coherent_phases(ch, *set)) pv.phases[q] = b;
      const auto h = effective_channel(ch, pv, *set);
      const double sum = amplitude_sum(ch, *set);
      EXPECT_LT(std::abs(h.imag()), 1e-12 * sum);
      EXPECT_NEAR(h.real() / sum, 1.0, 1e-12);
    }
  }
}

TEST(RandomPhases, EmptyAndDeterministic) {
  CounterRng rng(1, 0);
  EXPECT_TRUE(random_phases(std::vector<std::size_t>{}, rng).empty());
  const std::vector<std::size_t> idx{4, 2, 9};
  CounterRng a(5, 1), b(5, 1);
  EXPECT_EQ(random_phases(idx, a), random_phases(idx, b));
  CounterRng c(5, 1);
  const auto r = random_phases(idx, c);
  EXPECT_EQ(r[0].first, 4u);
  EXPECT_EQ(r[2].first, 9u);
}

TEST(RandomPhases, MillionDrawMoments) {
  std::vector<std::size_t> idx(1000);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  double sc = 0, ss = 0;
  std::size_t n = 0;
  for (std::uint64_t t = 0; t < 1000; ++t) {
    CounterRng rng(77, t);
    for (auto [q, b] : random_phases(idx, rng)) {
      ASSERT_GE(b, -std::numbers::pi);
      ASSERT_LT(b, std::numbers::pi);
      sc += std::cos(b);
      ss += std::sin(b);
      ++n;
    }
  }
  const double se = std::sqrt(0.5 / static_cast<double>(n));
  EXPECT_LT(std::abs(sc / n), 3 * se);
  EXPECT_LT(std::abs(ss / n), 3 * se);
}

TEST(BuildPattern, DeterministicPartMatchesAreas) {
  const auto ch = reference_channel();
  const auto p = make_partition(1000, 500, 400, 100);
  // Average over draws: the random areas contribute zero mean.
  const std::size_t draws = 4000;
  std::complex<double> m1{}, m2{};
  for (std::size_t t = 0; t < draws; ++t) {
    CounterRng r1(9, t), r2(10, t);
    m1 += effective_channel(ch, build_pattern(ch, p, PatternId::pattern1, r1));
    m2 += effective_channel(ch, build_pattern(ch, p, PatternId::pattern2, r2));
  }
  m1 /= double(draws);
  m2 /= double(draws);
  const double det1 = amplitude_sum(ch, p.a1) + amplitude_sum(ch, p.a3);
  const double det2 = amplitude_sum(ch, p.a1);
  EXPECT_DOUBLE_EQ(coherent_amplitude(ch, p, PatternId::pattern1), det1);
  EXPECT_DOUBLE_EQ(coherent_amplitude(ch, p, PatternId::pattern2), det2);
  // Std of the random part per draw is sqrt(0.5 sum |g|^2) per component.
  const double sd = std::sqrt(0.5 * (power_sum(ch, p.a2) + power_sum(ch, p.a3)) / draws);
  EXPECT_NEAR(m1.real(), det1, 4 * sd);
  EXPECT_NEAR(m2.real(), det2, 4 * sd);
  EXPECT_NEAR(m1.imag(), 0.0, 4 * sd);
}

TEST(BuildPattern, EmptyDynamicAreaMakesPatternsIdentical) {
  const auto ch = reference_channel();
  const auto p = make_partition(1000, 600, 400, 0);
  for (std::uint64_t t = 0; t < 20; ++t) {
    CounterRng a(1, t), b(1, t);
    EXPECT_EQ(effective_channel(ch, build_pattern(ch, p, PatternId::pattern1, a)),
              effective_channel(ch, build_pattern(ch, p, PatternId::pattern2, b)));
  }
}

TEST(BuildPattern, PhasesInRangeAndCoherentAreasFixed) {
  const auto ch = reference_channel();
  const auto p = make_partition(1000, 500, 400, 100, PartitionPolicy::dynamic_first());
  CounterRng a(1, 0), b(1, 1);
  const auto pv1 = build_pattern(ch, p, PatternId::pattern1, a);
  const auto pv2 = build_pattern(ch, p, PatternId::pattern1, b);
  for (auto q : p.a1) EXPECT_EQ(pv1.phases[q], pv2.phases[q]);
  for (auto q : p.a3) EXPECT_EQ(pv1.phases[q], pv2.phases[q]);
  for (double beta : pv1.phases) {
    EXPECT_GE(beta, -std::numbers::pi);
    EXPECT_LT(beta, std::numbers::pi);
  }
  EXPECT_THROW(build_pattern(ch, make_partition(10, 5, 5, 0), PatternId::pattern1, a), std::invalid_argument);
}

TEST(BuildPattern, Pattern1CoherentAmplitudeDominates) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Scene s = test::random_scene(seed);
    const auto ch = cascaded_channel(s, build_layout(s));
    const std::size_t q = s.num_elements;
    for (std::size_t k : {std::size_t{0}, std::size_t{1}, q / 4}) {
      const std::size_t m = q / 3;
      const auto p = make_partition(q, q - m - k, m, k, PartitionPolicy::interleaved(seed));
      const double a1 = coherent_amplitude(ch, p, PatternId::pattern1);
      const double a2 = coherent_amplitude(ch, p, PatternId::pattern2);
      if (k == 0)
        EXPECT_EQ(a1, a2);
      else
        EXPECT_GT(a1, a2);
    }
  }
}

TEST(BuildPattern, PoliciesKeepAreaSizes) {
  for (auto policy : {PartitionPolicy::contiguous(), PartitionPolicy::dynamic_first(), PartitionPolicy::interleaved(4)}) {
    const auto p = make_partition(1000, 540, 400, 60, policy);
    EXPECT_EQ(p.n(), 540u);
    EXPECT_EQ(p.m(), 400u);
    EXPECT_EQ(p.k(), 60u);
  }
}
