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

#include <optional>
#include <string>
#include <vector>

#include "riswap/dynamics.hpp"
#include "riswap/model.hpp"
#include "riswap/noise.hpp"
#include "riswap/result_grid.hpp"
#include "riswap/schemes.hpp"

/// Figure-reproduction sweeps.
///
/// Axis names (interface units in the name):
///   delta1_mhz, delta2_mhz, delta_j_mhz  fixed Zeeman / exchange offsets
///   eps (sets ε₁ = ε₂), eps1, eps2        relative drive-amplitude errors
///   eps_v                                 relative barrier-voltage error
///   dtau1, dtau2                          relative DCG timing errors
///   sigma_mhz, sigma_j_mhz                Gaussian noise widths
///   eps_omega                             Ω = Ω_ideal (1 − ε_Ω)
namespace riswap::experiments {

struct Axis {
  std::string name;
  double min = 0.0;
  double max = 0.0;
  int points = 0;

  std::vector<double> values() const;
  friend bool operator==(const Axis&, const Axis&) = default;
};

const std::vector<std::string>& axis_names();
bool is_axis_name(const std::string& name);

enum class Preset { desk, full };
std::string to_string(Preset preset);
Preset preset_from_string(const std::string& text);
int preset_points(Preset preset);  // 11 or 41

struct SweepSpec {
  std::string experiment;
  std::vector<std::string> schemes;
  std::vector<Axis> axes;  // one or two
  model::SystemParams system = model::SystemParams::defaults();
  model::ErrorRealization fixed;
  noise::NoiseAveragingConfig noise;
  bool raise_order_for_wide_noise = true;  // order 15 once σ/2π > 0.3 MHz
  dynamics::IntegratorConfig integrator;
  bool decoherence = true;
  bool spot_check_full = false;  // extra full-mode column on the δ₁ = δ₂ diagonal
  bool amplitude_errors_on_local_z = true;
  bool conventional_voltage_domain = false;
  std::optional<double> omega;  // drive for B and C; default (√15/4) J_max
  int direct_n = 2;
  schemes::ExchangeOff exchange_off = schemes::ExchangeOff::residual;
  int workers = 0;  // 0: $RISWAP_WORKERS or hardware concurrency

  void validate() const;
  friend bool operator==(const SweepSpec&, const SweepSpec&) = default;
};

struct ExperimentInfo {
  std::string id;
  std::string description;
};

const std::vector<ExperimentInfo>& registry();
bool is_registered(const std::string& id);

/// Default sweep for a registered experiment at the given resolution.
SweepSpec default_spec(const std::string& id, Preset preset);

ResultGrid run(const SweepSpec& spec);

// Building blocks ------------------------------------------------------------

/// Scheme named in a sweep, with the sweep's drive and exchange settings.
schemes::SchemeSpec scheme_for(const SweepSpec& spec, const std::string& name);

/// Noise-averaged fidelity of one scheme at one parameter point:
/// Σ_r w_r F(r) over the realizations of noise around fixed. With
/// decoherence on, F is evaluated on the Lindblad channel with γ = 1/T₂^echo.
double averaged_fidelity(const schemes::SchemeSpec& scheme, const model::SystemParams& system,
                         const model::ErrorRealization& fixed, const noise::NoiseAveragingConfig& noise,
                         const dynamics::IntegratorConfig& integrator, bool decoherence,
                         const schemes::InjectionOptions& injection = {});

/// Applies a named axis value to a point (scheme, fixed errors, noise).
void apply_axis(const std::string& name, double value, schemes::SchemeSpec& scheme,
                model::ErrorRealization& fixed, noise::NoiseAveragingConfig& noise);

/// Effective noise config: order raised to 15 once σ/2π > 0.3 MHz.
noise::NoiseAveragingConfig effective_noise(const noise::NoiseAveragingConfig& noise, bool raise_order);

}  // namespace riswap::experiments
