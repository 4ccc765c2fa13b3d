// Copyright 2026 The riswap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "riswap/errors.hpp"
#include "riswap/experiments.hpp"

/// Line-oriented run configuration:
///
///   [system]      e_avg_ghz, delta_ez_ghz, j_max_mhz, j0_khz, lever_arm_per_volt,
///                 t2_echo_us, exchange_off (residual|zero)
///   [noise]       method, order, samples, seed, points, sigma_delta_mhz, sigma_j_mhz
///   [integrator]  mode (rwa|full), step_ps, substeps_per_fastest_period
///   [sweep]       experiment, preset, schemes (or scheme), axis1, axis2
///                 (name:min:max:points), decoherence, spot_check_full, omega_mhz,
///                 n, workers, amplitude_errors_on_local_z,
///                 conventional_voltage_domain, and fixed errors delta1_mhz,
///                 delta2_mhz, delta_j_mhz, eps1, eps2, eps_v, dtau1, dtau2
///   [output]      path
///
/// `#` and `;` start comments. Values are kept in the interface units named by
/// their keys; conversion to rad/s and seconds happens in to_sweep().
namespace riswap::config {

class ParseError : public ValidationError {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct RunConfig {
  // [system]; always resolved.
  double e_avg_ghz = 17.0;
  double delta_ez_ghz = 0.3;
  double j_max_mhz = 15.0;
  double j0_khz = 10.0;
  double lever_arm_per_volt = 10.0;
  double t2_echo_us = 20.0;
  std::optional<std::string> exchange_off;

  // [noise]
  std::optional<std::string> method;
  std::optional<int> order;
  std::optional<int> samples;
  std::optional<std::uint64_t> seed;
  std::optional<int> points;
  std::optional<double> sigma_delta_mhz;
  std::optional<double> sigma_j_mhz;

  // [integrator]
  std::optional<std::string> mode;
  std::optional<double> step_ps;
  std::optional<int> substeps_per_fastest_period;

  // [sweep]
  std::optional<std::string> experiment;
  experiments::Preset preset = experiments::Preset::desk;
  std::optional<std::vector<std::string>> schemes;
  std::optional<experiments::Axis> axis1;
  std::optional<experiments::Axis> axis2;
  std::optional<bool> decoherence;
  std::optional<bool> spot_check_full;
  std::optional<bool> amplitude_errors_on_local_z;
  std::optional<bool> conventional_voltage_domain;
  std::optional<double> omega_mhz;
  std::optional<int> n;
  std::optional<int> workers;
  std::optional<double> delta1_mhz;
  std::optional<double> delta2_mhz;
  std::optional<double> delta_j_mhz;
  std::optional<double> eps1;
  std::optional<double> eps2;
  std::optional<double> eps_v;
  std::optional<double> dtau1;
  std::optional<double> dtau2;

  // [output]
  std::optional<std::string> path;

  /// Non-fatal notes collected while parsing (e.g. duplicate keys).
  std::vector<std::string> warnings;

  /// Resolved sweep: the experiment's defaults at the preset, overlaid with
  /// every field set here. ValidationError if the experiment is unset or
  /// unknown.
  experiments::SweepSpec to_sweep() const;

  model::SystemParams system() const;

  bool operator==(const RunConfig& other) const;
};

RunConfig parse_config(const std::string& text);

std::string serialize(const RunConfig& config);

/// Applies `section.key=value`; ParseError (line 0) for unknown keys or bad values.
void apply_override(RunConfig& config, const std::string& assignment);

/// Every accepted `section.key`.
std::vector<std::string> known_keys();

}  // namespace riswap::config
