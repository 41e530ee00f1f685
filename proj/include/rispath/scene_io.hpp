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

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <istream>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rispath {

/// Parse failure in a scene configuration file. line() is 1-based, 0 when
/// the error is not tied to a single line (e.g. a failed invariant).
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::size_t line, const std::string& what)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  constexpr std::string_view ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

inline double parse_real(std::string_view text, std::size_t line, std::string_view key) {
  double v = 0.0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  if (!text.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last || !std::isfinite(v))
    throw ConfigError(line, "invalid number for '" + std::string(key) + "': '" + std::string(text) + "'");
  return v;
}

inline std::size_t parse_count(std::string_view text, std::size_t line, std::string_view key) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw ConfigError(line, "invalid integer for '" + std::string(key) + "': '" + std::string(text) + "'");
  return static_cast<std::size_t>(v);
}

}  // namespace detail

/// Reads `key = value` lines. Blank lines and `#` comments are ignored.
/// Keys not given keep the reference_scene() defaults; the noise and transmit
/// powers are given in dBm. `spacing_half_wavelength = n` sets the spacing to
/// n half wavelengths (`true` means 1).
inline Scene parse_scene(std::istream& in) {
  Scene s = reference_scene();
  std::optional<double> spacing_m;
  std::optional<double> spacing_halves;
  std::set<std::string, std::less<>> seen;

  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = detail::trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ConfigError(line_no, "expected 'key = value'");
    const auto key = detail::trim(line.substr(0, eq));
    const auto value = detail::trim(line.substr(eq + 1));
    if (key.empty()) throw ConfigError(line_no, "missing key");
    if (value.empty()) throw ConfigError(line_no, "missing value for '" + std::string(key) + "'");
    if (!seen.emplace(key).second) throw ConfigError(line_no, "duplicate key '" + std::string(key) + "'");

    auto real = [&] { return detail::parse_real(value, line_no, key); };
    if (key == "bs_x") s.bs_position.x = real();
    else if (key == "bs_y") s.bs_position.y = real();
    else if (key == "ris_x") s.ris_center.x = real();
    else if (key == "ris_y") s.ris_center.y = real();
    else if (key == "orient_x") s.ris_orientation.x = real();
    else if (key == "orient_y") s.ris_orientation.y = real();
    else if (key == "ue_x") s.ue_position.x = real();
    else if (key == "ue_y") s.ue_position.y = real();
    else if (key == "q") {
      s.num_elements = detail::parse_count(value, line_no, key);
      if (s.num_elements == 0) throw ConfigError(line_no, "q must be >= 1");
    } else if (key == "spacing_m") {
      spacing_m = real();
    } else if (key == "spacing_half_wavelength") {
      spacing_halves = (value == "true") ? 1.0 : real();
    } else if (key == "freq_hz") s.carrier_frequency = real();
    else if (key == "tx_dbm") s.tx_power = dbm_to_watts(real());
    else if (key == "noise_dbm") s.noise_power = dbm_to_watts(real());
    else throw ConfigError(line_no, "unknown key '" + std::string(key) + "'");
  }

  if (spacing_m && spacing_halves)
    throw ConfigError(0, "spacing_m and spacing_half_wavelength are mutually exclusive");
  // Spacing defaults to half a wavelength of the (possibly overridden) carrier.
  if (!(s.carrier_frequency > 0.0)) throw ConfigError(0, "freq_hz must be > 0");
  s.element_spacing = spacing_m ? *spacing_m : spacing_halves.value_or(1.0) * s.wavelength() / 2.0;

  try {
    return validate(s);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(0, e.what());
  }
}

inline Scene parse_scene(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_scene(in);
}

inline Scene load_scene(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(0, "cannot open scene file '" + path + "'");
  return parse_scene(in);
}

}  // namespace rispath
