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

// Test-only reference computations. Nothing here calls into the series
// implementation of the ncx2 CDF or the analytic moment formulas.

#include <rispath/random.hpp>
#include <rispath/scene.hpp>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace rispath::test {

/// chi2(2, lambda) density in closed Bessel form: 0.5 exp(-(x+lambda)/2) I0(sqrt(lambda x)).
inline double ncx2_pdf_bessel(double x, double lambda) {
  if (x <= 0.0) return 0.5 * std::exp(-0.5 * lambda);
  const double z = std::sqrt(lambda * x);
  return 0.5 * std::exp(-0.5 * (x + lambda)) * std::cyl_bessel_i(0.0, z);
}

/// CDF by adaptive Gauss-Kronrod quadrature of the Bessel-form density.
inline double ncx2_cdf_quadrature(double x, double lambda) {
  if (x <= 0.0) return 0.0;
  auto f = [lambda](double t) { return ncx2_pdf_bessel(t, lambda); };
  // Split at the mean so each panel sees a smooth, single-sided shape.
  const double mid = std::min(x, 2.0 + lambda);
  double v = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, 0.0, mid, 12, 1e-12);
  if (x > mid) v += boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, mid, x, 12, 1e-12);
  return v;
}

struct SampleMoments {
  double mean_re = 0.0, mean_im = 0.0;
  double var_re = 0.0, var_im = 0.0;
  double cov = 0.0;
  std::size_t n = 0;

  double stderr_mean_re() const { return std::sqrt(var_re / static_cast<double>(n)); }
  double stderr_mean_im() const { return std::sqrt(var_im / static_cast<double>(n)); }
  double corr() const { return cov / std::sqrt(var_re * var_im); }
  // Under independence the sample correlation has standard error ~ 1/sqrt(n).
  double stderr_corr() const { return 1.0 / std::sqrt(static_cast<double>(n)); }
};

inline SampleMoments moments(std::span<const std::complex<double>> v) {
  SampleMoments m;
  m.n = v.size();
  const double n = static_cast<double>(v.size());
  for (const auto& z : v) {
    m.mean_re += z.real();
    m.mean_im += z.imag();
  }
  m.mean_re /= n;
  m.mean_im /= n;
  for (const auto& z : v) {
    const double a = z.real() - m.mean_re, b = z.imag() - m.mean_im;
    m.var_re += a * a;
    m.var_im += b * b;
    m.cov += a * b;
  }
  m.var_re /= n - 1.0;
  m.var_im /= n - 1.0;
  m.cov /= n - 1.0;
  return m;
}

/// Randomized but valid geometry for property tests. Noise is set so that it
/// is comparable to the random-area power, keeping every term visible.
inline Scene random_scene(std::uint64_t seed, std::size_t max_elements = 64) {
  CounterRng rng(seed, 0);
  auto u = [&](double lo, double hi) { return lo + (hi - lo) * uniform01(rng); };
  Scene s;
  s.bs_position = {u(-50, 50), u(-50, 50)};
  s.ris_center = {u(60, 200), u(60, 200)};
  const double ang = u(-3.14159, 3.14159);
  s.ris_orientation = {std::cos(ang), std::sin(ang)};
  s.ue_position = {u(300, 3000), u(-500, 500)};
  s.num_elements = 8 + static_cast<std::size_t>(u(0, static_cast<double>(max_elements - 8)));
  s.carrier_frequency = u(1e9, 30e9);
  s.element_spacing = 0.5 * speed_of_light / s.carrier_frequency * u(0.5, 2.0);
  s.tx_power = 1.0;
  s.noise_power = 1.0;  // replaced by the caller once amplitudes are known
  return validate(s);
}

}  // namespace rispath::test
