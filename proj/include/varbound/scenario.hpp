// Copyright 2026 The varbound Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Scenario and sweep files (JSON), the evaluation report, and the CSV
// tables produced by parameterized Bloch sweeps.
//
// Scenario:
//   {"state": {"bloch": [x, y, z]} | {"matrix": M} | {"pure": v},
//    "observables_a": [O, ...], "observables_b": [O, ...], "pati_c": O}
// where O is "sigma_x" | "sigma_y" | "sigma_z" (aliases sigma1..3), a
// matrix, or {"label": "...", "matrix": M}. Matrices are row-major nested
// arrays whose entries are numbers or [re, im] pairs.
//
// Sweep:
//   {"family": "fig1" | "fig2" | "fig3" | "bloch_circle",
//    "radius": r, "plane": "xy" | "yz" | "zx",        (bloch_circle only)
//    "observables_a": [...], "observables_b": [...],   (bloch_circle only)
//    "theta_start": 0, "theta_end": pi, "points": 181}

#ifndef VARBOUND_SCENARIO_HPP
#define VARBOUND_SCENARIO_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "varbound/bounds.hpp"

namespace varbound {

struct Scenario {
  QuantumState state;
  std::vector<Observable> observables_a;
  std::optional<std::vector<Observable>> observables_b;
  std::optional<Observable> pati_c;
};

// Throws ParseError with a field path (or line/column for malformed JSON);
// state and observable validation errors keep their own codes.
Scenario parse_scenario(std::string_view text);

struct EvalResult {
  std::string report_json;
  // "bound: ErrorName" for every bound that hit a degenerate configuration.
  std::vector<std::string> degenerate;
};

EvalResult evaluate(const Scenario& scenario);

enum class SweepFamily { kFig1, kFig2, kFig3, kBlochCircle };
enum class BlochPlane { kXY, kYZ, kZX };

struct SweepSpec {
  SweepFamily family = SweepFamily::kFig1;
  double radius = 1.0;
  BlochPlane plane = BlochPlane::kXY;
  std::vector<Observable> observables_a;
  std::vector<Observable> observables_b;  // empty: sum-form table
  double theta_start = 0.0;
  double theta_end = 0.0;
  int points = 181;

  bool product_form() const noexcept { return !observables_b.empty(); }
  // Uniform grid including both endpoints.
  std::vector<double> thetas() const;
  BlochVector bloch_at(double theta) const;
};

SweepSpec parse_sweep_spec(std::string_view text);

// fig1: radius sqrt(3)/2 in the xy plane with {sigma_x, sigma_z};
// fig2: r = (cos theta, 0, 0) with {sigma_x, sigma_y, sigma_z};
// fig3: radius 1/2 in the xy plane with A = {sigma_z}, B = {sigma_x, sigma_y}.
// All over [0, pi]. Throws InvalidArgument for other ids.
SweepSpec figure_spec(std::string_view id, int points = 181);

// Columns start with "theta". Sum form: lhs, thm1, maccone (n <= 2) or
// chen_fei (n >= 3), cor3, pairwise_rur, lambda_max, sigma_max. Product form:
// lhs, thm2, cor2, c22, sigma_max. Degenerate cells are empty.
struct SweepTable {
  std::vector<std::string> columns;
  std::vector<std::vector<std::optional<double>>> rows;

  std::size_t column(std::string_view name) const;
  double at(std::size_t row, std::string_view name) const;
};

SweepTable run_sweep(const SweepSpec& spec, int threads = 1);
std::string to_csv(const SweepTable& table);

}  // namespace varbound

#endif  // VARBOUND_SCENARIO_HPP
