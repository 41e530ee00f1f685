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

#include <rispath/channel.hpp>
#include <rispath/random.hpp>

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rispath {

/// Element index sets: a1 always coherent for the observed UE, a2 configured
/// for other UEs, a3 the dynamic part.
struct RisPartition {
  std::vector<std::size_t> a1;
  std::vector<std::size_t> a2;
  std::vector<std::size_t> a3;

  std::size_t n() const { return a1.size(); }
  std::size_t m() const { return a2.size(); }
  std::size_t k() const { return a3.size(); }
  std::size_t q() const { return a1.size() + a2.size() + a3.size(); }
};

enum class PatternId { pattern1, pattern2 };

inline std::string_view to_string(PatternId p) { return p == PatternId::pattern1 ? "pattern1" : "pattern2"; }

/// How element indices are assigned to the three areas.
///  - contiguous:    [A1 | A2 | A3] in element order
///  - dynamic_first: [A3 | A1 | A2] in element order
///  - interleaved:   seeded shuffle of all indices, then split N/M/K
struct PartitionPolicy {
  enum class Kind { contiguous, dynamic_first, interleaved };

  Kind kind = Kind::contiguous;
  std::uint64_t seed = 0;

  static PartitionPolicy contiguous() { return {Kind::contiguous, 0}; }
  static PartitionPolicy dynamic_first() { return {Kind::dynamic_first, 0}; }
  static PartitionPolicy interleaved(std::uint64_t seed) { return {Kind::interleaved, seed}; }

  friend bool operator==(const PartitionPolicy&, const PartitionPolicy&) = default;
};

inline std::string to_string(const PartitionPolicy& p) {
  switch (p.kind) {
    case PartitionPolicy::Kind::contiguous: return "contiguous";
    case PartitionPolicy::Kind::dynamic_first: return "dynamic-first";
    case PartitionPolicy::Kind::interleaved: return "interleaved:" + std::to_string(p.seed);
  }
  return {};
}

/// Inverse of to_string(); throws std::invalid_argument on anything else.
inline PartitionPolicy parse_partition_policy(std::string_view text) {
  if (text == "contiguous") return PartitionPolicy::contiguous();
  if (text == "dynamic-first") return PartitionPolicy::dynamic_first();
  constexpr std::string_view prefix = "interleaved:";
  if (text.starts_with(prefix)) {
    const auto digits = text.substr(prefix.size());
    std::uint64_t seed = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), seed);
    if (!digits.empty() && ec == std::errc{} && ptr == digits.data() + digits.size()) return PartitionPolicy::interleaved(seed);
  }
  throw std::invalid_argument("unknown partition layout '" + std::string(text) +
                              "' (expected contiguous, dynamic-first or interleaved:<seed>)");
}

inline RisPartition make_partition(std::size_t q, std::size_t n, std::size_t m, std::size_t k,
                                   PartitionPolicy policy = PartitionPolicy::contiguous()) {
  if (n + m + k != q)
    throw std::invalid_argument("make_partition: N + M + K = " + std::to_string(n + m + k) + " but Q = " + std::to_string(q));
  if (n < 1) throw std::invalid_argument("make_partition: area 1 must keep at least one element");

  std::vector<std::size_t> order(q);
  std::iota(order.begin(), order.end(), std::size_t{0});
  if (policy.kind == PartitionPolicy::Kind::interleaved) {
    // Fisher-Yates with a fixed stream; std::shuffle is implementation-defined.
    CounterRng rng(policy.seed, 0);
    for (std::size_t i = q; i > 1; --i) {
      const auto j = static_cast<std::size_t>(uniform01(rng) * static_cast<double>(i));
      std::swap(order[i - 1], order[std::min(j, i - 1)]);
    }
  }

  auto take = [&](std::size_t from, std::size_t count) {
    std::vector<std::size_t> out(order.begin() + static_cast<std::ptrdiff_t>(from),
                                 order.begin() + static_cast<std::ptrdiff_t>(from + count));
    std::sort(out.begin(), out.end());
    return out;
  };

  RisPartition p;
  if (policy.kind == PartitionPolicy::Kind::dynamic_first) {
    p.a3 = take(0, k);
    p.a1 = take(k, n);
    p.a2 = take(k + n, m);
  } else {
    p.a1 = take(0, n);
    p.a2 = take(n, m);
    p.a3 = take(n + m, k);
  }
  return p;
}

/// Phase assignment (element index, beta) for a subset of elements.
using PhaseAssignments = std::vector<std::pair<std::size_t, double>>;

/// beta_q = -arg(g_q): each contribution g_q exp(j beta_q) becomes |g_q|.
inline PhaseAssignments coherent_phases(const CascadedChannel& ch, std::span<const std::size_t> indices) {
  PhaseAssignments out;
  out.reserve(indices.size());
  for (auto q : indices) out.emplace_back(q, wrap_phase(-std::arg(ch.per_element.at(q))));
  return out;
}

/// i.i.d. U[-pi, pi) phases, drawn in the order of `indices`.
template <class Rng>
PhaseAssignments random_phases(std::span<const std::size_t> indices, Rng& rng) {
  PhaseAssignments out;
  out.reserve(indices.size());
  for (auto q : indices) out.emplace_back(q, uniform_phase(rng));
  return out;
}

/// Full RIS configuration as seen by the observed UE. Random phases are drawn
/// for a2 first, then (pattern 2 only) for a3.
template <class Rng>
PhaseVector build_pattern(const CascadedChannel& ch, const RisPartition& partition, PatternId pattern, Rng& rng) {
  if (partition.q() != ch.size()) throw std::invalid_argument("build_pattern: partition does not match channel size");
  PhaseVector pv;
  pv.phases.assign(ch.size(), 0.0);
  auto apply = [&](const PhaseAssignments& as) {
    for (const auto& [q, beta] : as) pv.phases.at(q) = beta;
  };
  apply(coherent_phases(ch, partition.a1));
  apply(random_phases(partition.a2, rng));
  if (pattern == PatternId::pattern1)
    apply(coherent_phases(ch, partition.a3));
  else
    apply(random_phases(partition.a3, rng));
  return pv;
}

/// Deterministic (coherent) amplitude of the effective channel under a pattern.
inline double coherent_amplitude(const CascadedChannel& ch, const RisPartition& partition, PatternId pattern) {
  double s = amplitude_sum(ch, partition.a1);
  if (pattern == PatternId::pattern1) s += amplitude_sum(ch, partition.a3);
  return s;
}

/// Indices whose phases are random under a pattern, in draw order.
inline std::vector<std::size_t> random_indices(const RisPartition& partition, PatternId pattern) {
  std::vector<std::size_t> out(partition.a2);
  if (pattern == PatternId::pattern2) out.insert(out.end(), partition.a3.begin(), partition.a3.end());
  return out;
}

}  // namespace rispath
