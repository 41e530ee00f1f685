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
#include <rispath/ncx2.hpp>
#include <rispath/patterns.hpp>

#include <span>
#include <stdexcept>

namespace rispath {

/// Moments of a sum of g_q exp(j beta_q) with i.i.d. uniform phases.
struct RandomSumMoments {
  double mean_real = 0.0;
  double mean_imag = 0.0;
  double component_variance = 0.0;  // per real/imaginary component
  double covariance = 0.0;          // between real and imaginary parts
};

/// Zero mean, per-component variance 0.5 * sum |g_q|^2, uncorrelated parts.
inline RandomSumMoments dynamic_sum_moments(std::span<const double> amplitudes) {
  double power = 0.0;
  for (double a : amplitudes) power += a * a;
  return {0.0, 0.0, 0.5 * power, 0.0};
}

/// Circularly symmetric Gaussian model of the channel estimate under one
/// pattern: real mean = coherent amplitude, zero imaginary mean, equal
/// per-component variances.
struct GaussianChannelModel {
  double mean_real = 0.0;
  double mean_imag = 0.0;
  double component_variance = 0.0;
};

/// |h|^2 = scale * X with X ~ chi2(2, noncentrality).
struct PowerDistribution {
  double scale = 0.0;
  int dof = 2;
  double noncentrality = 0.0;

  double mean() const { return scale * ncx2_mean(noncentrality); }
  double variance() const { return scale * scale * ncx2_variance(noncentrality); }
};

/// Builds the Gaussian model for one pattern. noise_variance is the variance
/// of the normalized noise n = m/x (total, both components).
inline GaussianChannelModel channel_model(const CascadedChannel& ch, const RisPartition& partition, PatternId pattern,
                                          double noise_variance) {
  if (partition.q() != ch.size()) throw std::invalid_argument("channel_model: partition does not match channel size");
  if (!(noise_variance >= 0.0)) throw std::invalid_argument("channel_model: noise variance must be >= 0");
  GaussianChannelModel m;
  m.mean_real = coherent_amplitude(ch, partition, pattern);
  m.component_variance = 0.5 * noise_variance + 0.5 * power_sum(ch, partition.a2);
  if (pattern == PatternId::pattern2) m.component_variance += 0.5 * power_sum(ch, partition.a3);
  if (!(m.component_variance > 0.0))
    throw std::invalid_argument("channel_model: zero variance (noise-free with no random area) is not supported");
  return m;
}

inline PowerDistribution power_distribution(const GaussianChannelModel& model) {
  if (!(model.component_variance > 0.0)) throw std::invalid_argument("power_distribution: variance must be > 0");
  if (model.mean_imag != 0.0) throw std::invalid_argument("power_distribution: model mean must be real");
  PowerDistribution d;
  d.scale = model.component_variance;
  d.noncentrality = model.mean_real * model.mean_real / model.component_variance;
  return d;
}

/// P{|h|^2 <= gamma}.
inline double power_cdf(double gamma, const PowerDistribution& dist) {
  if (!(gamma >= 0.0)) throw std::invalid_argument("power_cdf: threshold must be >= 0");
  return ncx2_cdf(gamma / dist.scale, dist.noncentrality);
}

inline double power_pdf(double x, const PowerDistribution& dist) {
  return ncx2_pdf(x / dist.scale, dist.noncentrality) / dist.scale;
}

inline double power_quantile(double p, const PowerDistribution& dist) {
  return dist.scale * ncx2_quantile(p, dist.noncentrality);
}

/// Both hypotheses for one scene/partition.
struct PatternDistributions {
  PowerDistribution h1;
  PowerDistribution h2;
};

inline PatternDistributions pattern_distributions(const CascadedChannel& ch, const RisPartition& partition,
                                                  double noise_variance) {
  return {power_distribution(channel_model(ch, partition, PatternId::pattern1, noise_variance)),
          power_distribution(channel_model(ch, partition, PatternId::pattern2, noise_variance))};
}

}  // namespace rispath
