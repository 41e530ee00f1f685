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
#include <rispath/patterns.hpp>
#include <rispath/scene.hpp>
#include <rispath/stats.hpp>

#include <cmath>
#include <stdexcept>

namespace rispath {

/// Thrown when pattern 1 is not strictly stronger on average than pattern 2
/// (e.g. an empty dynamic area), so no threshold separates them.
class DegenerateSeparation : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct DetectionReport {
  double threshold = 0.0;  // gamma, channel-power units
  double p_error = 0.0;
  double r_ratio = 0.0;
  double g_d_db = 0.0;
  double mean_h1 = 0.0;
  double mean_h2 = 0.0;
};

namespace detail {

/// P{H1} P{|h|^2 < gamma | H1} + P{H2} P{|h|^2 > gamma | H2}.
inline double error_probability(double gamma, const PowerDistribution& h1, const PowerDistribution& h2, double prior_h1) {
  if (!(prior_h1 >= 0.0 && prior_h1 <= 1.0)) throw std::invalid_argument("error_probability: prior must be in [0, 1]");
  return prior_h1 * power_cdf(gamma, h1) + (1.0 - prior_h1) * (1.0 - power_cdf(gamma, h2));
}

}  // namespace detail

/// Equal-prior detection error probability at threshold gamma.
inline double error_probability(double gamma, const PowerDistribution& h1, const PowerDistribution& h2) {
  return detail::error_probability(gamma, h1, h2, 0.5);
}

struct ThresholdResult {
  double gamma = 0.0;
  double p_error = 0.0;
};

/// Minimizes error_probability over [mean(h2), mean(h1)] by golden-section
/// search; the bracket is shrunk below 1e-6 of its initial width.
inline ThresholdResult optimal_threshold(const PowerDistribution& h1, const PowerDistribution& h2) {
  const double mu1 = h1.mean();
  const double mu2 = h2.mean();
  if (!(mu1 > mu2)) throw DegenerateSeparation("degenerate separation: pattern 1 mean power does not exceed pattern 2");

  auto f = [&](double g) { return error_probability(g, h1, h2); };
  constexpr double inv_phi = 0.6180339887498949;  // (sqrt(5) - 1) / 2
  const double tol = 1e-6 * (mu1 - mu2);

  double a = mu2, b = mu1;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > tol) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }

  ThresholdResult best{fc <= fd ? c : d, std::min(fc, fd)};
  for (double edge : {mu2, mu1}) {
    const double pe = f(edge);
    if (pe < best.p_error) best = {edge, pe};
  }
  return best;
}

inline double random_part_ratio(const RisPartition& partition) {
  return static_cast<double>(partition.k()) / static_cast<double>(partition.q());
}

/// 10 log10(E{|h|^2 | H1} / E{|h|^2 | H2}).
inline double relative_power_difference(const PowerDistribution& h1, const PowerDistribution& h2) {
  return 10.0 * std::log10(h1.mean() / h2.mean());
}

inline DetectionReport evaluate_scenario(const CascadedChannel& ch, const RisPartition& partition, double noise_variance) {
  const auto dists = pattern_distributions(ch, partition, noise_variance);
  const auto opt = optimal_threshold(dists.h1, dists.h2);
  DetectionReport r;
  r.threshold = opt.gamma;
  r.p_error = opt.p_error;
  r.r_ratio = random_part_ratio(partition);
  r.g_d_db = relative_power_difference(dists.h1, dists.h2);
  r.mean_h1 = dists.h1.mean();
  r.mean_h2 = dists.h2.mean();
  return r;
}

inline DetectionReport evaluate_scenario(const Scene& scene, const RisPartition& partition) {
  const auto ch = cascaded_channel(scene, build_layout(scene));
  return evaluate_scenario(ch, partition, scene.normalized_noise_variance());
}

}  // namespace rispath
