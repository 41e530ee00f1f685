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
#include <rispath/parallel.hpp>
#include <rispath/patterns.hpp>
#include <rispath/random.hpp>
#include <rispath/scene.hpp>
#include <rispath/stats.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace rispath {

/// Draws channel estimates h = coherent part + random-phase part + noise for
/// one pattern. Trial t uses the streams (seed, t, phases) and (seed, t, noise)
/// only, so a sample does not depend on which thread draws it or in what order.
class ChannelSampler {
 public:
  ChannelSampler(const CascadedChannel& ch, const RisPartition& partition, PatternId pattern, double noise_variance)
      : coherent_(coherent_amplitude(ch, partition, pattern)), noise_std_(std::sqrt(0.5 * noise_variance)) {
    if (partition.q() != ch.size()) throw std::invalid_argument("ChannelSampler: partition does not match channel size");
    if (!(noise_variance >= 0.0)) throw std::invalid_argument("ChannelSampler: noise variance must be >= 0");
    for (auto q : random_indices(partition, pattern)) random_coeffs_.push_back(ch.per_element[q]);
  }

  cplx operator()(std::uint64_t seed, std::uint64_t trial) const {
    CounterRng phases(seed, trial, Substream::phases);
    double re = coherent_, im = 0.0;
    for (const auto& g : random_coeffs_) {
      const double beta = uniform_phase(phases);
      const double c = std::cos(beta), s = std::sin(beta);
      re += g.real() * c - g.imag() * s;
      im += g.real() * s + g.imag() * c;
    }
    if (noise_std_ > 0.0) {
      CounterRng noise(seed, trial, Substream::noise);
      const auto [z1, z2] = standard_normal_pair(noise);
      re += noise_std_ * z1;
      im += noise_std_ * z2;
    }
    return {re, im};
  }

 private:
  double coherent_;
  double noise_std_;
  std::vector<cplx> random_coeffs_;
};

struct TrialBatch {
  PatternId pattern = PatternId::pattern1;
  std::vector<double> samples;  // |h|^2
  std::uint64_t seed = 0;
  std::size_t n_trials = 0;
};

/// Channel estimates for trials [0, n_trials).
inline std::vector<cplx> simulate_channels(const CascadedChannel& ch, const RisPartition& partition, PatternId pattern,
                                           double noise_variance, std::size_t n_trials, std::uint64_t seed,
                                           unsigned threads = 1) {
  if (n_trials < 1) throw std::invalid_argument("simulate: n_trials must be >= 1");
  const ChannelSampler sampler(ch, partition, pattern, noise_variance);
  std::vector<cplx> out(n_trials);
  constexpr std::size_t chunk = 4096;
  const std::size_t chunks = (n_trials + chunk - 1) / chunk;
  parallel_for(
      chunks,
      [&](std::size_t c) {
        const std::size_t end = std::min(n_trials, (c + 1) * chunk);
        for (std::size_t t = c * chunk; t < end; ++t) out[t] = sampler(seed, t);
      },
      threads);
  return out;
}

inline TrialBatch simulate_batch(const CascadedChannel& ch, const RisPartition& partition, PatternId pattern,
                                 double noise_variance, std::size_t n_trials, std::uint64_t seed, unsigned threads = 1) {
  const auto h = simulate_channels(ch, partition, pattern, noise_variance, n_trials, seed, threads);
  TrialBatch b{pattern, {}, seed, n_trials};
  b.samples.reserve(n_trials);
  for (const auto& v : h) b.samples.push_back(std::norm(v));
  return b;
}

inline TrialBatch simulate_batch(const Scene& scene, const RisPartition& partition, PatternId pattern,
                                 std::size_t n_trials, std::uint64_t seed, unsigned threads = 1) {
  const auto ch = cascaded_channel(scene, build_layout(scene));
  return simulate_batch(ch, partition, pattern, scene.normalized_noise_variance(), n_trials, seed, threads);
}

/// Right-continuous empirical distribution function.
class EmpiricalCdf {
 public:
  explicit EmpiricalCdf(std::vector<double> samples) : sorted_(std::move(samples)) {
    if (sorted_.empty()) throw std::invalid_argument("EmpiricalCdf: no samples");
    std::sort(sorted_.begin(), sorted_.end());
  }
  explicit EmpiricalCdf(const TrialBatch& batch) : EmpiricalCdf(batch.samples) {}

  /// Fraction of samples <= x.
  double operator()(double x) const {
    const auto it = std::upper_bound(sorted_.begin(), sorted_.end(), x);
    return static_cast<double>(it - sorted_.begin()) / static_cast<double>(sorted_.size());
  }

  /// Fraction of samples < x.
  double below(double x) const {
    const auto it = std::lower_bound(sorted_.begin(), sorted_.end(), x);
    return static_cast<double>(it - sorted_.begin()) / static_cast<double>(sorted_.size());
  }

  /// Smallest sample s with F(s) >= p, p in (0, 1].
  double quantile(double p) const {
    const auto n = static_cast<double>(sorted_.size());
    auto idx = static_cast<std::size_t>(std::ceil(p * n));
    idx = std::clamp<std::size_t>(idx, 1, sorted_.size());
    return sorted_[idx - 1];
  }

  std::span<const double> sorted() const { return sorted_; }
  std::size_t size() const { return sorted_.size(); }

 private:
  std::vector<double> sorted_;
};

inline double empirical_error(const EmpiricalCdf& h1, const EmpiricalCdf& h2, double gamma) {
  return 0.5 * h1.below(gamma) + 0.5 * (1.0 - h2(gamma));
}

/// 0.5 * (fraction of H1 samples below gamma) + 0.5 * (fraction of H2 samples above gamma).
inline double empirical_error(const TrialBatch& h1, const TrialBatch& h2, double gamma) {
  if (h1.samples.empty() || h2.samples.empty()) throw std::invalid_argument("empirical_error: empty batch");
  auto frac = [](const std::vector<double>& s, auto pred) {
    return static_cast<double>(std::count_if(s.begin(), s.end(), pred)) / static_cast<double>(s.size());
  };
  return 0.5 * frac(h1.samples, [&](double v) { return v < gamma; }) +
         0.5 * frac(h2.samples, [&](double v) { return v > gamma; });
}

/// sup_x |F_n(x) - F(x)| for a continuous model CDF.
template <class Cdf>
double ks_distance(const EmpiricalCdf& ecdf, Cdf&& model_cdf) {
  const auto s = ecdf.sorted();
  const auto n = static_cast<double>(s.size());
  double d = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double f = model_cdf(s[i]);
    d = std::max({d, static_cast<double>(i + 1) / n - f, f - static_cast<double>(i) / n});
  }
  return d;
}

inline double ks_distance(const EmpiricalCdf& ecdf, const PowerDistribution& dist) {
  return ks_distance(ecdf, [&](double x) { return power_cdf(x, dist); });
}

inline double ks_distance(const TrialBatch& batch, const PowerDistribution& dist) {
  if (batch.samples.empty()) throw std::invalid_argument("ks_distance: empty batch");
  return ks_distance(EmpiricalCdf(batch), dist);
}

inline double sample_mean(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

}  // namespace rispath
