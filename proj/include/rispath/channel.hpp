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

#include <rispath/scene.hpp>

#include <cmath>
#include <complex>
#include <numbers>
#include <span>
#include <stdexcept>
#include <vector>

namespace rispath {

using cplx = std::complex<double>;

/// Wraps an angle to [-pi, pi).
inline double wrap_phase(double angle) {
  constexpr double pi = std::numbers::pi;
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double w = std::fmod(angle + pi, two_pi);
  if (w < 0.0) w += two_pi;
  w -= pi;
  return w >= pi ? -pi : w;
}

/// Free-space coefficient lambda/(4 pi d) * exp(-j 2 pi d / lambda).
inline cplx freespace_coeff(double distance, double wavelength) {
  if (!(distance > 0.0)) throw std::invalid_argument("freespace_coeff: distance must be > 0");
  if (!(wavelength > 0.0)) throw std::invalid_argument("freespace_coeff: wavelength must be > 0");
  const double amplitude = wavelength / (4.0 * std::numbers::pi * distance);
  // Reduce the phase by whole wavelengths first; d/lambda is ~1e5 here.
  const double cycles = distance / wavelength;
  const double frac = cycles - std::floor(cycles);
  return std::polar(amplitude, wrap_phase(-2.0 * std::numbers::pi * frac));
}

/// Free-space pathloss in dB (positive number).
inline double pathloss_db(double distance, double wavelength) {
  return -20.0 * std::log10(std::abs(freespace_coeff(distance, wavelength)));
}

/// Per-element cascaded coefficients g_q = h_r,q * h_t,q for one UE.
struct CascadedChannel {
  std::vector<cplx> per_element;
  std::vector<double> amplitudes;

  std::size_t size() const { return per_element.size(); }
};

/// Phase shifts beta_q in [-pi, pi). The RIS response is diag(exp(j beta)).
struct PhaseVector {
  std::vector<double> phases;

  std::size_t size() const { return phases.size(); }
};

inline CascadedChannel cascaded_channel(const Scene& scene, const ElementLayout& layout) {
  const double wl = scene.wavelength();
  CascadedChannel ch;
  ch.per_element.reserve(layout.size());
  ch.amplitudes.reserve(layout.size());
  for (const auto& p : layout.positions) {
    const cplx g = freespace_coeff(distance(scene.bs_position, p), wl) * freespace_coeff(distance(p, scene.ue_position), wl);
    ch.per_element.push_back(g);
    ch.amplitudes.push_back(std::abs(g));
  }
  return ch;
}

/// sum_q g_q exp(j beta_q).
inline cplx effective_channel(const CascadedChannel& ch, const PhaseVector& pv) {
  if (ch.size() != pv.size()) throw std::invalid_argument("effective_channel: length mismatch");
  cplx acc{0.0, 0.0};
  for (std::size_t q = 0; q < ch.size(); ++q) acc += ch.per_element[q] * std::polar(1.0, pv.phases[q]);
  return acc;
}

/// Partial effective channel restricted to `indices`.
inline cplx effective_channel(const CascadedChannel& ch, const PhaseVector& pv, std::span<const std::size_t> indices) {
  if (ch.size() != pv.size()) throw std::invalid_argument("effective_channel: length mismatch");
  cplx acc{0.0, 0.0};
  for (auto q : indices) {
    if (q >= ch.size()) throw std::out_of_range("effective_channel: index out of range");
    acc += ch.per_element[q] * std::polar(1.0, pv.phases[q]);
  }
  return acc;
}

/// Sum of |g_q| over `indices` (the coherently combined amplitude).
inline double amplitude_sum(const CascadedChannel& ch, std::span<const std::size_t> indices) {
  double s = 0.0;
  for (auto q : indices) s += ch.amplitudes.at(q);
  return s;
}

/// Sum of |g_q|^2 over `indices`.
inline double power_sum(const CascadedChannel& ch, std::span<const std::size_t> indices) {
  double s = 0.0;
  for (auto q : indices) s += ch.amplitudes.at(q) * ch.amplitudes.at(q);
  return s;
}

}  // namespace rispath
