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

// Experiment runners behind the ris-pathid CLI. Each runner returns the full
// CSV text; write_atomic() puts it on disk. Output depends only on the spec,
// never on thread count or timing.

#include <rispath/detector.hpp>
#include <rispath/montecarlo.hpp>
#include <rispath/ncx2.hpp>
#include <rispath/parallel.hpp>
#include <rispath/patterns.hpp>
#include <rispath/random.hpp>
#include <rispath/scene.hpp>
#include <rispath/stats.hpp>

#include <charconv>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

namespace rispath::experiments {

enum class Command { eval, cdf_compare, sweep_r, sweep_m };

inline std::string_view to_string(Command c) {
  switch (c) {
    case Command::eval: return "eval";
    case Command::cdf_compare: return "cdf-compare";
    case Command::sweep_r: return "sweep-r";
    case Command::sweep_m: return "sweep-m";
  }
  return {};
}

/// Inclusive arithmetic grid start:stop:step.
struct Grid {
  double start = 0.0;
  double stop = 0.0;
  double step = 0.0;

  std::vector<double> values() const {
    std::vector<double> out;
    const double n = std::floor((stop - start) / step + 1e-9);
    for (long i = 0; i <= static_cast<long>(n); ++i) out.push_back(start + static_cast<double>(i) * step);
    return out;
  }
};

inline Grid parse_grid(std::string_view text) {
  Grid g;
  double* fields[] = {&g.start, &g.stop, &g.step};
  std::size_t pos = 0;
  for (int f = 0; f < 3; ++f) {
    const auto colon = text.find(':', pos);
    if ((f < 2) == (colon == std::string_view::npos))
      throw std::invalid_argument("grid '" + std::string(text) + "' must have the form start:stop:step");
    const auto part = text.substr(pos, f < 2 ? colon - pos : std::string_view::npos);
    const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), *fields[f]);
    if (part.empty() || ec != std::errc{} || ptr != part.data() + part.size() || !std::isfinite(*fields[f]))
      throw std::invalid_argument("grid '" + std::string(text) + "': invalid number '" + std::string(part) + "'");
    pos = colon + 1;
  }
  if (!(g.step > 0.0)) throw std::invalid_argument("grid '" + std::string(text) + "': step must be > 0");
  if (!(g.stop >= g.start)) throw std::invalid_argument("grid '" + std::string(text) + "': stop must be >= start");
  return g;
}

struct ExperimentSpec {
  Command command = Command::eval;
  Scene scene = reference_scene();
  std::string scene_path;
  PartitionPolicy layout = PartitionPolicy::dynamic_first();
  std::optional<std::size_t> n, m, k;  // eval, cdf-compare; m also for sweep-r
  std::optional<Grid> r_grid;          // sweep-r
  std::optional<std::size_t> nk;       // sweep-r: N + K
  std::optional<Grid> m_grid;          // sweep-m
  std::optional<double> r;             // sweep-m
  std::size_t trials = 100'000;
  std::uint64_t seed = 1;
  unsigned threads = 1;
};

// --- formatting -------------------------------------------------------------

/// Shortest round-trip representation; identical on every run.
inline std::string fmt(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}
inline std::string fmt(std::size_t v) { return std::to_string(v); }

template <class... Ts>
std::string csv_row(const Ts&... fields) {
  std::string line;
  ((line += fmt(fields), line += ','), ...);
  line.back() = '\n';
  return line;
}

inline std::string header_comment(const ExperimentSpec& spec) {
  const Scene& s = spec.scene;
  const auto layout = build_layout(s);
  const double wl = s.wavelength();
  const Point2 center = s.ris_center;
  std::ostringstream h;
  h << "# ris-pathid " << to_string(spec.command) << '\n';
  if (!spec.scene_path.empty()) h << "# scene_file=" << spec.scene_path << '\n';
  h << "# bs=(" << fmt(s.bs_position.x) << ' ' << fmt(s.bs_position.y) << ") ris=(" << fmt(center.x) << ' '
    << fmt(center.y) << ") orient=(" << fmt(s.ris_orientation.x) << ' ' << fmt(s.ris_orientation.y) << ") ue=("
    << fmt(s.ue_position.x) << ' ' << fmt(s.ue_position.y) << ")\n";
  h << "# q=" << s.num_elements << " spacing_m=" << fmt(s.element_spacing) << " freq_hz=" << fmt(s.carrier_frequency)
    << " tx_dbm=" << fmt(watts_to_dbm(s.tx_power)) << " noise_dbm=" << fmt(watts_to_dbm(s.noise_power)) << '\n';
  h << "# pathloss_bs_ris_db=" << fmt(pathloss_db(distance(s.bs_position, center), wl))
    << " pathloss_ris_ue_db=" << fmt(pathloss_db(distance(center, s.ue_position), wl))
    << " array_length_m=" << fmt(distance(layout.positions.front(), layout.positions.back())) << '\n';
  h << "# layout=" << to_string(spec.layout);
  if (spec.n) h << " n=" << *spec.n;
  if (spec.m) h << " m=" << *spec.m;
  if (spec.k) h << " k=" << *spec.k;
  if (spec.nk) h << " nk=" << *spec.nk;
  if (spec.r) h << " r=" << fmt(*spec.r);
  if (spec.r_grid) h << " r_grid=" << fmt(spec.r_grid->start) << ':' << fmt(spec.r_grid->stop) << ':' << fmt(spec.r_grid->step);
  if (spec.m_grid) h << " m_grid=" << fmt(spec.m_grid->start) << ':' << fmt(spec.m_grid->stop) << ':' << fmt(spec.m_grid->step);
  h << " trials=" << spec.trials << " seed=" << spec.seed << '\n';
  return h.str();
}

// --- evaluation of one (N, M, K) point ----------------------------------------

struct PointResult {
  std::size_t n = 0, m = 0, k = 0;
  DetectionReport analytic;
  PatternDistributions dists;
  double p_error_empirical = 0.0;
  double g_d_empirical_db = 0.0;
  double ks_p1 = 0.0;
  double ks_p2 = 0.0;
};

/// Analytic report plus Monte Carlo counterparts. Pattern batches use seeds
/// derived from (seed, point_index, pattern) so the two hypotheses are
/// sampled independently.
inline PointResult evaluate_point(const CascadedChannel& ch, const RisPartition& partition, double noise_variance,
                                  std::size_t trials, std::uint64_t seed, std::uint64_t point_index, bool with_ks,
                                  unsigned threads = 1) {
  PointResult r;
  r.n = partition.n();
  r.m = partition.m();
  r.k = partition.k();
  r.analytic = evaluate_scenario(ch, partition, noise_variance);
  r.dists = pattern_distributions(ch, partition, noise_variance);

  const auto b1 = simulate_batch(ch, partition, PatternId::pattern1, noise_variance, trials,
                                 derive_seed(seed, point_index, 1), threads);
  const auto b2 = simulate_batch(ch, partition, PatternId::pattern2, noise_variance, trials,
                                 derive_seed(seed, point_index, 2), threads);
  r.p_error_empirical = empirical_error(b1, b2, r.analytic.threshold);
  r.g_d_empirical_db = 10.0 * std::log10(sample_mean(b1.samples) / sample_mean(b2.samples));
  if (with_ks) {
    r.ks_p1 = ks_distance(b1, r.dists.h1);
    r.ks_p2 = ks_distance(b2, r.dists.h2);
  }
  return r;
}

namespace detail {

inline std::size_t require(const std::optional<std::size_t>& v, const char* flag, Command c) {
  if (!v) throw std::invalid_argument(std::string(to_string(c)) + " requires " + flag);
  return *v;
}

/// K = R * Q, which must be (numerically) an integer.
inline std::size_t dynamic_size(double r, std::size_t q) {
  const double k = r * static_cast<double>(q);
  const double rounded = std::round(k);
  if (r < 0.0 || std::abs(k - rounded) > 1e-6)
    throw std::invalid_argument("R = " + fmt(r) + " does not give an integer K for Q = " + std::to_string(q));
  return static_cast<std::size_t>(rounded);
}

}  // namespace detail

// --- runners ----------------------------------------------------------------------

inline std::string run_eval(const ExperimentSpec& spec, PointResult* result = nullptr) {
  const auto n = detail::require(spec.n, "--n", spec.command);
  const auto m = detail::require(spec.m, "--m", spec.command);
  const auto k = detail::require(spec.k, "--k", spec.command);
  const Scene& s = spec.scene;
  const auto partition = make_partition(s.num_elements, n, m, k, spec.layout);
  const auto ch = cascaded_channel(s, build_layout(s));
  const auto r = evaluate_point(ch, partition, s.normalized_noise_variance(), spec.trials, spec.seed, 0, true, spec.threads);
  if (result) *result = r;

  std::string out = header_comment(spec);
  out += "n,m,k,r,gamma,p_error_analytic,p_error_empirical,g_d_analytic_db,g_d_empirical_db,mu1,mu2,ks_p1,ks_p2,"
         "scale1,lambda1,scale2,lambda2\n";
  out += csv_row(r.n, r.m, r.k, r.analytic.r_ratio, r.analytic.threshold, r.analytic.p_error, r.p_error_empirical,
                 r.analytic.g_d_db, r.g_d_empirical_db, r.analytic.mean_h1, r.analytic.mean_h2, r.ks_p1, r.ks_p2,
                 r.dists.h1.scale, r.dists.h1.noncentrality, r.dists.h2.scale, r.dists.h2.noncentrality);
  return out;
}

inline constexpr std::string_view sweep_columns =
    "p_error_analytic,p_error_empirical,g_d_analytic_db,g_d_empirical_db,gamma,mu1,mu2\n";

inline std::string sweep_tail(const PointResult& p) {
  return csv_row(p.analytic.p_error, p.p_error_empirical, p.analytic.g_d_db, p.g_d_empirical_db, p.analytic.threshold,
                 p.analytic.mean_h1, p.analytic.mean_h2);
}

/// Sweeps R = K/Q with N + K and M fixed.
inline std::string run_sweep_r(const ExperimentSpec& spec, std::vector<PointResult>* results = nullptr) {
  if (!spec.r_grid) throw std::invalid_argument("sweep-r requires --r-grid");
  const auto nk = detail::require(spec.nk, "--nk", spec.command);
  const auto m = detail::require(spec.m, "--m", spec.command);
  const Scene& s = spec.scene;
  const std::size_t q = s.num_elements;
  if (nk + m != q) throw std::invalid_argument("sweep-r: N + K + M = " + std::to_string(nk + m) + " but Q = " + std::to_string(q));

  const auto rs = spec.r_grid->values();
  std::vector<RisPartition> parts;
  for (double r : rs) {
    const auto k = detail::dynamic_size(r, q);
    if (k >= nk) throw std::invalid_argument("sweep-r: R = " + fmt(r) + " leaves no elements in area 1");
    parts.push_back(make_partition(q, nk - k, m, k, spec.layout));
  }
  const auto ch = cascaded_channel(s, build_layout(s));
  std::vector<PointResult> pts(parts.size());
  parallel_for(
      parts.size(),
      [&](std::size_t i) {
        pts[i] = evaluate_point(ch, parts[i], s.normalized_noise_variance(), spec.trials, spec.seed, i, false);
      },
      spec.threads);

  std::string out = header_comment(spec);
  out += "R,K,N,";
  out += sweep_columns;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    out += fmt(pts[i].analytic.r_ratio) + ',' + fmt(pts[i].k) + ',' + fmt(pts[i].n) + ',';
    out += sweep_tail(pts[i]);
  }
  if (results) *results = std::move(pts);
  return out;
}

/// Sweeps M with R (hence K) fixed and N = Q - M - K.
inline std::string run_sweep_m(const ExperimentSpec& spec, std::vector<PointResult>* results = nullptr) {
  if (!spec.m_grid) throw std::invalid_argument("sweep-m requires --m-grid");
  if (!spec.r) throw std::invalid_argument("sweep-m requires --r");
  const Scene& s = spec.scene;
  const std::size_t q = s.num_elements;
  const auto k = detail::dynamic_size(*spec.r, q);

  std::vector<RisPartition> parts;
  for (double mv : spec.m_grid->values()) {
    if (mv < 0.0 || std::abs(mv - std::round(mv)) > 1e-9) throw std::invalid_argument("sweep-m: M grid values must be integers");
    const auto m = static_cast<std::size_t>(std::round(mv));
    if (m + k >= q) throw std::invalid_argument("sweep-m: M = " + std::to_string(m) + " leaves no elements in area 1");
    parts.push_back(make_partition(q, q - m - k, m, k, spec.layout));
  }
  const auto ch = cascaded_channel(s, build_layout(s));
  std::vector<PointResult> pts(parts.size());
  parallel_for(
      parts.size(),
      [&](std::size_t i) {
        pts[i] = evaluate_point(ch, parts[i], s.normalized_noise_variance(), spec.trials, spec.seed, i, false);
      },
      spec.threads);

  std::string out = header_comment(spec);
  out += "M,R,K,N,";
  out += sweep_columns;
  for (const auto& p : pts) {
    out += fmt(p.m) + ',' + fmt(p.analytic.r_ratio) + ',' + fmt(p.k) + ',' + fmt(p.n) + ',';
    out += sweep_tail(p);
  }
  if (results) *results = std::move(pts);
  return out;
}

struct CdfComparison {
  std::vector<double> x;  // normalized power
  std::vector<double> analytic_p1, empirical_p1, analytic_p2, empirical_p2;
  double ks_p1 = 0.0;
  double ks_p2 = 0.0;
};

/// Normalized power CDFs |h_i|^2 / sigma_i^2 for both patterns on a 201-point
/// grid spanning [0, 99.9th percentile].
inline std::string run_cdf_compare(const ExperimentSpec& spec, CdfComparison* result = nullptr) {
  const auto n = detail::require(spec.n, "--n", spec.command);
  const auto m = detail::require(spec.m, "--m", spec.command);
  const auto k = detail::require(spec.k, "--k", spec.command);
  const Scene& s = spec.scene;
  const auto partition = make_partition(s.num_elements, n, m, k, spec.layout);
  const auto ch = cascaded_channel(s, build_layout(s));
  const double nv = s.normalized_noise_variance();
  const auto dists = pattern_distributions(ch, partition, nv);

  auto normalized = [&](PatternId p, const PowerDistribution& d, std::uint64_t tag) {
    auto b = simulate_batch(ch, partition, p, nv, spec.trials, derive_seed(spec.seed, 0, tag), spec.threads);
    for (auto& v : b.samples) v /= d.scale;
    return EmpiricalCdf(std::move(b.samples));
  };
  const auto e1 = normalized(PatternId::pattern1, dists.h1, 1);
  const auto e2 = normalized(PatternId::pattern2, dists.h2, 2);

  CdfComparison c;
  const double l1 = dists.h1.noncentrality, l2 = dists.h2.noncentrality;
  c.ks_p1 = ks_distance(e1, [&](double x) { return ncx2_cdf(x, l1); });
  c.ks_p2 = ks_distance(e2, [&](double x) { return ncx2_cdf(x, l2); });

  constexpr std::size_t points = 201;
  const double x_max = std::max(ncx2_quantile(0.999, l1), ncx2_quantile(0.999, l2));
  std::string out = header_comment(spec);
  out += "# scale1=" + fmt(dists.h1.scale) + " lambda1=" + fmt(l1) + " scale2=" + fmt(dists.h2.scale) +
         " lambda2=" + fmt(l2) + '\n';
  out += "x,cdf_analytic_p1,cdf_empirical_p1,cdf_analytic_p2,cdf_empirical_p2\n";
  for (std::size_t i = 0; i < points; ++i) {
    const double x = x_max * static_cast<double>(i) / static_cast<double>(points - 1);
    c.x.push_back(x);
    c.analytic_p1.push_back(ncx2_cdf(x, l1));
    c.empirical_p1.push_back(e1(x));
    c.analytic_p2.push_back(ncx2_cdf(x, l2));
    c.empirical_p2.push_back(e2(x));
    out += csv_row(x, c.analytic_p1.back(), c.empirical_p1.back(), c.analytic_p2.back(), c.empirical_p2.back());
  }
  out += "# summary,ks_p1=" + fmt(c.ks_p1) + ",ks_p2=" + fmt(c.ks_p2) + '\n';
  if (result) *result = std::move(c);
  return out;
}

inline std::string run(const ExperimentSpec& spec) {
  switch (spec.command) {
    case Command::eval: return run_eval(spec);
    case Command::cdf_compare: return run_cdf_compare(spec);
    case Command::sweep_r: return run_sweep_r(spec);
    case Command::sweep_m: return run_sweep_m(spec);
  }
  throw std::logic_error("unknown command");
}

/// Writes to a sibling temporary file and renames it over `path`, so a failed
/// run never leaves a truncated output behind.
inline void write_atomic(const std::filesystem::path& path, std::string_view content) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open '" + tmp.string() + "' for writing");
    f.write(content.data(), static_cast<std::streamsize>(content.size()));
    f.flush();
    if (!f) {
      f.close();
      std::filesystem::remove(tmp);
      throw std::runtime_error("failed writing '" + tmp.string() + "'");
    }
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace rispath::experiments
