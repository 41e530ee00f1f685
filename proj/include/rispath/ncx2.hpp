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

// Non-central chi-squared distribution with two degrees of freedom.
//
// The CDF is the Poisson mixture
//
//   F(x; lambda) = sum_j Pois(j; lambda/2) * P(chi2_{2j+2} <= x),
//
// i.e. 1 - Q_1(sqrt(lambda), sqrt(x)). For even degrees of freedom the
// central terms are Poisson tails, P(chi2_{2k} <= x) = Pr[Pois(x/2) >= k],
// so every quantity reduces to Poisson masses evaluated in log space.
// Summation starts at the mode of the mixing weights and walks outwards in
// both directions, which keeps the terms from underflowing for large lambda.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>

namespace rispath {

namespace ncx2_detail {

inline constexpr std::size_t max_terms = 200'000;
inline constexpr double weight_tail = 1e-16;  // bound on the neglected mixing mass

inline double log_poisson(double j, double mu) {
  if (mu == 0.0) return j == 0.0 ? 0.0 : -std::numeric_limits<double>::infinity();
  return j * std::log(mu) - mu - std::lgamma(j + 1.0);
}

[[noreturn]] inline void cap_hit(const char* what) {
  throw std::runtime_error(std::string(what) + ": series truncation cap reached");
}

/// Pr[Pois(y) >= k + 1] for integer k >= 0.
inline double poisson_upper_tail(std::size_t k, double y) {
  const double kd = static_cast<double>(k);
  if (y > kd + 1.0) {
    // 1 - sum_{i<=k} p_i, walking down from i = k where terms shrink.
    double lp = log_poisson(kd, y);
    double s = 0.0;
    for (std::size_t i = k + 1; i-- > 0;) {
      const double t = std::exp(lp);
      s += t;
      if (t < 1e-18 * s || i == 0) break;
      lp += std::log(static_cast<double>(i)) - std::log(y);
    }
    return std::max(0.0, 1.0 - s);
  }
  double lp = log_poisson(kd + 1.0, y);
  double s = 0.0;
  for (std::size_t i = k + 1, n = 0;; ++i, ++n) {
    if (n > max_terms) cap_hit("poisson_upper_tail");
    const double t = std::exp(lp);
    s += t;
    if (t < 1e-18 * s || t == 0.0) break;
    lp += std::log(y) - std::log(static_cast<double>(i + 1));
  }
  return std::min(1.0, s);
}

}  // namespace ncx2_detail

inline double ncx2_mean(double noncentrality) { return 2.0 + noncentrality; }
inline double ncx2_variance(double noncentrality) { return 4.0 + 4.0 * noncentrality; }

/// P{X <= x} for X ~ chi2(2, noncentrality). Absolute error ~1e-14.
inline double ncx2_cdf(double x, double noncentrality) {
  using namespace ncx2_detail;
  if (!(x >= 0.0)) throw std::invalid_argument("ncx2_cdf: x must be >= 0");
  if (!(noncentrality >= 0.0)) throw std::invalid_argument("ncx2_cdf: noncentrality must be >= 0");
  if (x == 0.0) return 0.0;
  if (std::isinf(x)) return 1.0;

  const double y = 0.5 * x;
  const double mu = 0.5 * noncentrality;
  if (mu == 0.0) return -std::expm1(-y);

  const auto mode = static_cast<std::size_t>(std::floor(mu));
  const double log_mu = std::log(mu);
  const double log_y = std::log(y);

  // Term j: w_j * G_j with w_j = Pois(j; mu), G_j = Pr[Pois(y) >= j + 1].
  const double g_mode = poisson_upper_tail(mode, y);
  const double lw_mode = log_poisson(static_cast<double>(mode), mu);
  const double lp_mode = log_poisson(static_cast<double>(mode), y);

  double sum = 0.0;
  std::size_t terms = 0;

  // Upwards: G_{j+1} = G_j - Pois(j+1; y).
  {
    double lw = lw_mode, lp = lp_mode, g = g_mode;
    for (std::size_t j = mode;; ++j) {
      if (++terms > max_terms) cap_hit("ncx2_cdf");
      sum += std::exp(lw) * g;
      const double jn = static_cast<double>(j + 1);
      lw += log_mu - std::log(jn);
      lp += log_y - std::log(jn);
      g = std::max(0.0, g - std::exp(lp));
      const double ratio = mu / (jn + 1.0);
      const double tail_bound = std::exp(lw) / (1.0 - ratio);
      if (ratio < 1.0 && (tail_bound < weight_tail || g * tail_bound < 1e-17)) break;
    }
  }
  // Downwards: G_{j-1} = G_j + Pois(j; y).
  {
    double lw = lw_mode, lp = lp_mode, g = g_mode;
    for (std::size_t j = mode; j > 0; --j) {
      if (++terms > max_terms) cap_hit("ncx2_cdf");
      const double jd = static_cast<double>(j);
      g = std::min(1.0, g + std::exp(lp));
      lw += std::log(jd) - log_mu;
      lp += std::log(jd) - log_y;
      const double w = std::exp(lw);
      sum += w * g;
      const double ratio = (jd - 1.0) / mu;
      if (ratio < 1.0 && w * ratio / (1.0 - ratio) < weight_tail) break;
    }
  }
  return std::clamp(sum, 0.0, 1.0);
}

/// P{X > x}.
inline double ncx2_sf(double x, double noncentrality) { return 1.0 - ncx2_cdf(x, noncentrality); }

/// Density of chi2(2, noncentrality): 0.5 * sum_j Pois(j; lambda/2) Pois(j; x/2).
inline double ncx2_pdf(double x, double noncentrality) {
  using namespace ncx2_detail;
  if (!(x >= 0.0)) throw std::invalid_argument("ncx2_pdf: x must be >= 0");
  if (!(noncentrality >= 0.0)) throw std::invalid_argument("ncx2_pdf: noncentrality must be >= 0");
  const double y = 0.5 * x;
  const double mu = 0.5 * noncentrality;
  if (mu == 0.0 || y == 0.0) return 0.5 * std::exp(-y - mu);

  // Product of the two masses peaks near sqrt(mu * y).
  const auto peak = static_cast<std::size_t>(std::floor(std::sqrt(mu * y)));
  const double l0 = log_poisson(static_cast<double>(peak), mu) + log_poisson(static_cast<double>(peak), y);
  const double lmy = std::log(mu) + std::log(y);
  double sum = 0.0;
  std::size_t terms = 0;
  double l = l0;
  for (std::size_t j = peak;; ++j) {
    if (++terms > max_terms) cap_hit("ncx2_pdf");
    const double t = std::exp(l);
    sum += t;
    const double jn = static_cast<double>(j + 1);
    l += lmy - 2.0 * std::log(jn);
    if (t < 1e-17 * sum && jn * jn > mu * y) break;
    if (t == 0.0 && jn * jn > mu * y) break;
  }
  l = l0;
  for (std::size_t j = peak; j > 0; --j) {
    if (++terms > max_terms) cap_hit("ncx2_pdf");
    const double jd = static_cast<double>(j);
    l += 2.0 * std::log(jd) - lmy;
    const double t = std::exp(l);
    sum += t;
    if (t < 1e-17 * sum) break;
  }
  return 0.5 * sum;
}

/// Smallest x with ncx2_cdf(x) >= p, to ~1e-12 relative accuracy.
inline double ncx2_quantile(double p, double noncentrality) {
  if (!(p >= 0.0 && p < 1.0)) throw std::invalid_argument("ncx2_quantile: p must be in [0, 1)");
  if (!(noncentrality >= 0.0)) throw std::invalid_argument("ncx2_quantile: noncentrality must be >= 0");
  if (p == 0.0) return 0.0;
  if (noncentrality == 0.0) return -2.0 * std::log1p(-p);

  double lo = 0.0;
  double hi = ncx2_mean(noncentrality) + 4.0 * std::sqrt(ncx2_variance(noncentrality));
  while (ncx2_cdf(hi, noncentrality) < p) {
    lo = hi;
    hi *= 2.0;
  }
  // Newton steps safeguarded by the bracket.
  double x = 0.5 * (lo + hi);
  for (int it = 0; it < 200 && hi - lo > 1e-13 * hi; ++it) {
    const double f = ncx2_cdf(x, noncentrality) - p;
    if (f < 0.0) lo = x; else hi = x;
    const double d = ncx2_pdf(x, noncentrality);
    double next = d > 0.0 ? x - f / d : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - x) < 1e-14 * x) { x = next; break; }
    x = next;
  }
  return x;
}

}  // namespace rispath
