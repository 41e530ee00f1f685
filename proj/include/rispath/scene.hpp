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

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace rispath {

inline constexpr double speed_of_light = 299'792'458.0;  // m/s

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend constexpr Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Point2 operator*(double s, Point2 p) { return {s * p.x, s * p.y}; }
  friend constexpr bool operator==(Point2, Point2) = default;
};

inline double norm(Point2 p) { return std::hypot(p.x, p.y); }
inline double distance(Point2 a, Point2 b) { return norm(a - b); }

inline double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }
inline double watts_to_dbm(double watts) { return 10.0 * std::log10(watts) + 30.0; }

/// 2-D deployment: single-antenna BS and UE, ULA RIS, plus RF constants.
///
/// Construct through make_scene() (or load_scene() in scene_io.hpp) so the
/// invariants are checked once; afterwards the value is treated as immutable.
struct Scene {
  Point2 bs_position;
  Point2 ris_center;
  Point2 ris_orientation{0.0, 1.0};  // unit vector along the array axis
  Point2 ue_position;
  std::size_t num_elements = 1;
  double element_spacing = 0.0;    // m
  double carrier_frequency = 0.0;  // Hz
  double tx_power = 0.0;           // W
  double noise_power = 0.0;        // W

  double wavelength() const { return speed_of_light / carrier_frequency; }

  /// Variance of the noise on the normalized channel estimate y/x.
  double normalized_noise_variance() const { return noise_power / tx_power; }
};

/// Throws std::invalid_argument if any Scene invariant is violated.
/// The orientation is normalized to unit length.
inline Scene validate(Scene s) {
  if (s.num_elements < 1) throw std::invalid_argument("scene: number of RIS elements must be >= 1");
  if (!(s.element_spacing > 0.0)) throw std::invalid_argument("scene: element spacing must be > 0");
  if (!(s.carrier_frequency > 0.0)) throw std::invalid_argument("scene: carrier frequency must be > 0");
  if (!(s.tx_power > 0.0)) throw std::invalid_argument("scene: transmit power must be > 0");
  if (!(s.noise_power > 0.0)) throw std::invalid_argument("scene: noise power must be > 0");
  const double len = norm(s.ris_orientation);
  if (!(len > 0.0) || !std::isfinite(len)) throw std::invalid_argument("scene: RIS orientation must be a nonzero vector");
  s.ris_orientation = (1.0 / len) * s.ris_orientation;
  if (s.bs_position == s.ris_center || s.bs_position == s.ue_position || s.ris_center == s.ue_position)
    throw std::invalid_argument("scene: BS, RIS center and UE must be pairwise distinct");
  return s;
}

/// Simulation defaults: 5 GHz, 15 kHz bandwidth at -174 dBm/Hz, 30 dBm
/// transmit power, 1000 elements at half-wavelength spacing, BS at the origin
/// and RIS centered at (25, 25).
namespace reference {
inline constexpr double carrier_frequency = 5e9;
inline constexpr double bandwidth = 15e3;
inline constexpr double noise_density_dbm_hz = -174.0;
inline constexpr double tx_power_dbm = 30.0;
inline constexpr std::size_t num_elements = 1000;

inline double noise_power_dbm() { return noise_density_dbm_hz + 10.0 * std::log10(bandwidth); }
}  // namespace reference

inline Scene reference_scene(Point2 ue = {7000.0, 0.0}) {
  Scene s;
  s.bs_position = {0.0, 0.0};
  s.ris_center = {25.0, 25.0};
  s.ris_orientation = {0.0, 1.0};
  s.ue_position = ue;
  s.num_elements = reference::num_elements;
  s.carrier_frequency = reference::carrier_frequency;
  s.element_spacing = s.wavelength() / 2.0;
  s.tx_power = dbm_to_watts(reference::tx_power_dbm);
  s.noise_power = dbm_to_watts(reference::noise_power_dbm());
  return validate(s);
}

struct ElementLayout {
  std::vector<Point2> positions;

  std::size_t size() const { return positions.size(); }
};

/// Places Q elements evenly along the array axis, centered on the RIS center.
/// Element q sits at center + (q - (Q-1)/2) * spacing * orientation.
inline ElementLayout build_layout(const Scene& scene) {
  if (scene.num_elements == 0) throw std::invalid_argument("build_layout: Q must be >= 1");
  const double len = norm(scene.ris_orientation);
  if (!(len > 0.0)) throw std::invalid_argument("build_layout: zero orientation");
  const Point2 axis = (1.0 / len) * scene.ris_orientation;
  const double half = 0.5 * static_cast<double>(scene.num_elements - 1);

  ElementLayout layout;
  layout.positions.reserve(scene.num_elements);
  for (std::size_t q = 0; q < scene.num_elements; ++q) {
    const double offset = (static_cast<double>(q) - half) * scene.element_spacing;
    layout.positions.push_back(scene.ris_center + offset * axis);
  }
  return layout;
}

inline std::vector<double> distances(const ElementLayout& layout, Point2 point) {
  std::vector<double> out;
  out.reserve(layout.size());
  for (const auto& p : layout.positions) out.push_back(distance(p, point));
  return out;
}

}  // namespace rispath
