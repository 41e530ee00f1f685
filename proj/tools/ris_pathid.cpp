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

#include <rispath/experiments.hpp>
#include <rispath/scene_io.hpp>

#include <CLI11.hpp>

#include <cstdint>
#include <exception>
#include <iostream>
#include <string>

namespace ex = rispath::experiments;

namespace {

void print_summary(const ex::ExperimentSpec& spec, const std::string& csv) {
  if (spec.command != ex::Command::eval) {
    std::size_t rows = 0;
    for (char c : csv) rows += (c == '\n');
    std::cout << ex::to_string(spec.command) << ": wrote " << rows << " lines\n";
    return;
  }
  // Echo the data row of an eval run under its header.
  const auto body = csv.rfind("\nn,");
  std::cout << csv.substr(body + 1);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"RIS-assisted path identification: analytic detector and Monte Carlo validation"};
  app.require_subcommand(1);

  ex::ExperimentSpec spec;
  std::string scene_path, out_path, layout = "dynamic-first", r_grid, m_grid;
  std::size_t n = 0, m = 0, k = 0, nk = 0;
  double r = 0.0;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--scene", scene_path, "scene configuration file (key = value)")->required()->check(CLI::ExistingFile);
    sub->add_option("--trials", spec.trials, "Monte Carlo trials per pattern")->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub->add_option("--seed", spec.seed, "base seed")->capture_default_str();
    sub->add_option("--out", out_path, "output CSV path")->required();
    sub->add_option("--layout", layout, "area layout: contiguous | dynamic-first | interleaved:<seed>")
        ->capture_default_str();
    sub->add_option("--threads", spec.threads, "worker threads (output does not depend on it)")
        ->default_val(rispath::default_thread_count());
  };

  auto* eval = app.add_subcommand("eval", "evaluate one (N, M, K) allocation");
  auto* cdf = app.add_subcommand("cdf-compare", "analytic vs empirical normalized power CDFs");
  for (auto* sub : {eval, cdf}) {
    common(sub);
    sub->add_option("--n", n, "elements in area 1")->required();
    sub->add_option("--m", m, "elements in area 2")->required();
    sub->add_option("--k", k, "elements in the dynamic area")->required();
  }
  auto* sweep_r = app.add_subcommand("sweep-r", "sweep the random part ratio R with N + K and M fixed");
  common(sweep_r);
  sweep_r->add_option("--r-grid", r_grid, "R grid start:stop:step")->required();
  sweep_r->add_option("--nk", nk, "N + K")->required();
  sweep_r->add_option("--m", m, "elements in area 2")->required();

  auto* sweep_m = app.add_subcommand("sweep-m", "sweep M with R fixed");
  common(sweep_m);
  sweep_m->add_option("--m-grid", m_grid, "M grid start:stop:step")->required();
  sweep_m->add_option("--r", r, "random part ratio K/Q")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    spec.layout = rispath::parse_partition_policy(layout);
    spec.scene_path = scene_path;
    spec.scene = rispath::load_scene(scene_path);
    if (eval->parsed() || cdf->parsed()) {
      spec.command = eval->parsed() ? ex::Command::eval : ex::Command::cdf_compare;
      spec.n = n;
      spec.m = m;
      spec.k = k;
    } else if (sweep_r->parsed()) {
      spec.command = ex::Command::sweep_r;
      spec.r_grid = ex::parse_grid(r_grid);
      spec.nk = nk;
      spec.m = m;
    } else {
      spec.command = ex::Command::sweep_m;
      spec.m_grid = ex::parse_grid(m_grid);
      spec.r = r;
    }

    const auto csv = ex::run(spec);
    ex::write_atomic(out_path, csv);
    print_summary(spec, csv);
    return 0;
  } catch (const rispath::ConfigError& e) {
    std::cerr << "error: " << scene_path << ": " << e.what() << '\n';
  } catch (const rispath::DegenerateSeparation& e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return 1;
}
