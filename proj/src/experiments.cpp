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

#include "riswap/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "riswap/errors.hpp"
#include "riswap/metrics.hpp"
#include "riswap/parallel.hpp"
#include "riswap/units.hpp"

namespace riswap::experiments {

namespace {

constexpr double kWideNoiseMhz = 0.3;
constexpr int kWideNoiseOrder = 15;

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? "," : "") + items[i];
  return out;
}

bool reports_infidelity(const std::string& experiment) { return experiment == "fig2" || experiment == "fig8"; }

std::string value_column(const std::string& base, const std::string& scheme, std::size_t scheme_count) {
  return scheme_count == 1 ? base : base + "_" + scheme;
}

struct Task {
  std::size_t point = 0;
  std::size_t scheme = 0;
  bool full_spot = false;
};

void add_metadata(ResultGrid& grid, const SweepSpec& spec) {
  const auto& s = spec.system;
  grid.set_meta("experiment", spec.experiment);
  grid.set_meta("code_version", RISWAP_VERSION);
  grid.set_meta("schemes", join(spec.schemes));
  for (std::size_t i = 0; i < spec.axes.size(); ++i) {
    const auto& a = spec.axes[i];
    grid.set_meta("axis" + std::to_string(i + 1),
                  a.name + ":" + format_number(a.min) + ":" + format_number(a.max) + ":" + std::to_string(a.points));
  }
  grid.set_meta("e_avg_ghz", format_number(units::to_ghz(s.e_avg())));
  grid.set_meta("delta_ez_ghz", format_number(units::to_ghz(s.delta_ez())));
  grid.set_meta("j_max_mhz", format_number(units::to_mhz(s.j_max)));
  grid.set_meta("j0_khz", format_number(units::to_khz(s.exchange_model.j0)));
  grid.set_meta("lever_arm_per_volt", format_number(s.exchange_model.alpha));
  grid.set_meta("t2_echo_us", format_number(units::to_us(s.t2_echo)));
  grid.set_meta("decoherence", spec.decoherence ? "true" : "false");
  grid.set_meta("integrator_mode", dynamics::to_string(spec.integrator.mode));
  if (spec.integrator.mode == dynamics::Mode::full_counter_rotating || spec.spot_check_full) {
    grid.set_meta("integrator_step_ps", format_number(units::to_ps(dynamics::resolve_step(
                                            {dynamics::Mode::full_counter_rotating, spec.integrator.step,
                                             spec.integrator.substeps_per_fastest_period},
                                            s))));
  }
  grid.set_meta("noise_method", noise::to_string(spec.noise.method));
  grid.set_meta("noise_order", std::to_string(spec.noise.order));
  grid.set_meta("noise_samples", std::to_string(spec.noise.samples));
  grid.set_meta("noise_points", std::to_string(spec.noise.points));
  grid.set_meta("seed", std::to_string(spec.noise.seed));
  grid.set_meta("sigma_delta_mhz", format_number(units::to_mhz(spec.noise.sigma_delta)));
  grid.set_meta("sigma_j_mhz", format_number(units::to_mhz(spec.noise.sigma_j)));
  grid.set_meta("fixed_delta1_mhz", format_number(units::to_mhz(spec.fixed.delta1)));
  grid.set_meta("fixed_delta2_mhz", format_number(units::to_mhz(spec.fixed.delta2)));
  grid.set_meta("fixed_delta_j_mhz", format_number(units::to_mhz(spec.fixed.delta_j)));
  grid.set_meta("fixed_eps1", format_number(spec.fixed.eps1));
  grid.set_meta("fixed_eps2", format_number(spec.fixed.eps2));
  grid.set_meta("fixed_eps_v", format_number(spec.fixed.eps_v));
  grid.set_meta("fixed_dtau1", format_number(spec.fixed.dtau1));
  grid.set_meta("fixed_dtau2", format_number(spec.fixed.dtau2));
  grid.set_meta("omega_mhz", format_number(units::to_mhz(
                                 spec.omega.value_or(schemes::drive_for_condition(2, s.j_max)))));
  grid.set_meta("direct_n", std::to_string(spec.direct_n));
  grid.set_meta("exchange_off", spec.exchange_off == schemes::ExchangeOff::residual ? "residual" : "zero");
  grid.set_meta("amplitude_errors_on_local_z", spec.amplitude_errors_on_local_z ? "true" : "false");
  grid.set_meta("conventional_voltage_domain", spec.conventional_voltage_domain ? "true" : "false");
  grid.set_meta("input_ensemble", "stabilizer_products_36");
}

}  // namespace

std::vector<double> Axis::values() const {
  if (points < 2) throw ValidationError("axis '" + name + "' needs at least two points");
  std::vector<double> out(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    out[static_cast<std::size_t>(i)] = i == points - 1 ? max : min + (max - min) * i / (points - 1);
  }
  return out;
}

const std::vector<std::string>& axis_names() {
  static const std::vector<std::string> names = {"delta1_mhz", "delta2_mhz", "delta_j_mhz", "eps",
                                                 "eps1",       "eps2",       "eps_v",       "dtau1",
                                                 "dtau2",      "sigma_mhz",  "sigma_j_mhz", "eps_omega"};
  return names;
}

bool is_axis_name(const std::string& name) {
  const auto& n = axis_names();
  return std::find(n.begin(), n.end(), name) != n.end();
}

std::string to_string(Preset preset) { return preset == Preset::desk ? "desk" : "full"; }

Preset preset_from_string(const std::string& text) {
  if (text == "desk") return Preset::desk;
  if (text == "full") return Preset::full;
  throw ValidationError("unknown preset '" + text + "' (expected desk or full)");
}

int preset_points(Preset preset) { return preset == Preset::desk ? 11 : 41; }

void SweepSpec::validate() const {
  if (schemes.empty()) throw ValidationError("sweep needs at least one scheme");
  for (const auto& s : schemes) (void)schemes::scheme_from_name(s, system);
  if (axes.empty() || axes.size() > 2) throw ValidationError("sweep needs one or two axes");
  for (const auto& a : axes) {
    if (!is_axis_name(a.name)) throw ValidationError("unknown axis '" + a.name + "'");
    if (a.points < 2) throw ValidationError("axis '" + a.name + "' needs at least two points");
    if (!(a.min <= a.max) || !std::isfinite(a.min) || !std::isfinite(a.max)) {
      throw ValidationError("axis '" + a.name + "' has an invalid range");
    }
    if ((a.name == "sigma_mhz" || a.name == "sigma_j_mhz") && a.min < 0.0) {
      throw ValidationError("noise axis '" + a.name + "' must be non-negative");
    }
  }
  if (axes.size() == 2 && axes[0].name == axes[1].name) throw ValidationError("axes must differ");
  (void)system.validate();
  fixed.validate();
  noise.validate();
  integrator.validate();
  if (direct_n < 1) throw ValidationError("direct_n must be >= 1");
  if (omega && (!(*omega > 0.0) || !std::isfinite(*omega))) throw ValidationError("omega must be positive");
}

const std::vector<ExperimentInfo>& registry() {
  static const std::vector<ExperimentInfo> r = {
      {"fig2", "conventional gate: barrier-voltage error vs max exchange error and infidelity"},
      {"fig4", "fidelity vs fixed Zeeman shifts (delta1, delta2) for all schemes"},
      {"fig5", "fidelity vs Gaussian noise width and symmetric drive-amplitude error"},
      {"fig6", "fidelity vs asymmetric drive-amplitude errors (eps1, eps2)"},
      {"fig7", "scheme C fidelity vs relative timing errors (dtau1, dtau2)"},
      {"fig8", "infidelity vs relative drive-strength deviation eps_omega"},
      {"fig9", "fidelity vs quasi-static exchange-noise width sigma_J"},
  };
  return r;
}

bool is_registered(const std::string& id) {
  const auto& r = registry();
  return std::any_of(r.begin(), r.end(), [&](const ExperimentInfo& e) { return e.id == id; });
}

SweepSpec default_spec(const std::string& id, Preset preset) {
  if (!is_registered(id)) throw ValidationError("unknown experiment '" + id + "'");
  const int n = preset_points(preset);
  SweepSpec s;
  s.experiment = id;
  const double sigma_default = units::mhz(0.1);
  if (id == "fig2") {
    s.schemes = {"conventional"};
    s.axes = {{"eps_v", 0.0, 0.02, n}};
    s.noise.sigma_delta = sigma_default;
    s.integrator.mode = dynamics::Mode::full_counter_rotating;
    s.conventional_voltage_domain = true;
  } else if (id == "fig4") {
    s.schemes = {"conventional", "A", "B", "C"};
    s.axes = {{"delta1_mhz", -0.5, 0.5, n}, {"delta2_mhz", -0.5, 0.5, n}};
    s.spot_check_full = true;
  } else if (id == "fig5") {
    s.schemes = {"A", "B", "C"};
    s.axes = {{"sigma_mhz", 0.0, 0.3, n}, {"eps", -0.05, 0.05, n}};
  } else if (id == "fig6") {
    s.schemes = {"A", "B", "C"};
    s.axes = {{"eps1", -0.05, 0.05, n}, {"eps2", -0.05, 0.05, n}};
    s.noise.sigma_delta = sigma_default;
  } else if (id == "fig7") {
    s.schemes = {"C"};
    s.axes = {{"dtau1", -0.02, 0.02, n}, {"dtau2", -0.02, 0.02, n}};
    s.integrator.mode = dynamics::Mode::full_counter_rotating;
    s.decoherence = false;
  } else if (id == "fig8") {
    s.schemes = {"A", "B", "C"};
    s.axes = {{"eps_omega", -0.1, 0.1, n}};
    s.integrator.mode = dynamics::Mode::full_counter_rotating;
    s.decoherence = false;
  } else if (id == "fig9") {
    s.schemes = {"A", "B", "C"};
    s.axes = {{"sigma_j_mhz", 0.0, 0.5, n}};
    s.integrator.mode = dynamics::Mode::full_counter_rotating;
    s.decoherence = false;
  }
  return s;
}

schemes::SchemeSpec scheme_for(const SweepSpec& spec, const std::string& name) {
  schemes::SchemeSpec scheme = schemes::scheme_from_name(name, spec.system);
  if (std::holds_alternative<schemes::DirectA>(scheme.variant)) {
    scheme = schemes::make_direct_a(spec.direct_n, spec.system.j_max);
  } else if (auto* c = std::get_if<schemes::Conventional>(&scheme.variant)) {
    c->voltage_domain = spec.conventional_voltage_domain;
  } else if (spec.omega) {
    scheme.omega = *spec.omega;
  }
  scheme.exchange_off = spec.exchange_off;
  return scheme;
}

void apply_axis(const std::string& name, double value, schemes::SchemeSpec& scheme,
                model::ErrorRealization& fixed, noise::NoiseAveragingConfig& noise) {
  if (name == "delta1_mhz") {
    fixed.delta1 = units::mhz(value);
  } else if (name == "delta2_mhz") {
    fixed.delta2 = units::mhz(value);
  } else if (name == "delta_j_mhz") {
    fixed.delta_j = units::mhz(value);
  } else if (name == "eps") {
    fixed.eps1 = fixed.eps2 = value;
  } else if (name == "eps1") {
    fixed.eps1 = value;
  } else if (name == "eps2") {
    fixed.eps2 = value;
  } else if (name == "eps_v") {
    fixed.eps_v = value;
  } else if (name == "dtau1") {
    fixed.dtau1 = value;
  } else if (name == "dtau2") {
    fixed.dtau2 = value;
  } else if (name == "sigma_mhz") {
    noise.sigma_delta = units::mhz(value);
  } else if (name == "sigma_j_mhz") {
    noise.sigma_j = units::mhz(value);
  } else if (name == "eps_omega") {
    if (auto* a = std::get_if<schemes::DirectA>(&scheme.variant)) {
      scheme.omega = schemes::drive_for_condition(a->n, scheme.j) * (1.0 - value);
      a->allow_detuned_drive = true;
    } else if (!std::holds_alternative<schemes::Conventional>(scheme.variant)) {
      scheme.omega = schemes::drive_for_condition(2, scheme.j) * (1.0 - value);
    }
  } else {
    throw ValidationError("unknown axis '" + name + "'");
  }
}

noise::NoiseAveragingConfig effective_noise(const noise::NoiseAveragingConfig& noise, bool raise_order) {
  noise::NoiseAveragingConfig out = noise;
  const double wide = units::mhz(kWideNoiseMhz) * (1.0 + 1e-12);
  if (raise_order && out.method == noise::Method::gauss_hermite &&
      (out.sigma_delta > wide || out.sigma_j > wide)) {
    out.order = std::max(out.order, kWideNoiseOrder);
  }
  return out;
}

double averaged_fidelity(const schemes::SchemeSpec& scheme, const model::SystemParams& system,
                         const model::ErrorRealization& fixed, const noise::NoiseAveragingConfig& noise,
                         const dynamics::IntegratorConfig& integrator, bool decoherence,
                         const schemes::InjectionOptions& injection) {
  const auto realizations = noise::sample_noise(noise, fixed);
  const schemes::PulseSequence base = schemes::compile(scheme, system);
  const qalg::ComplexMatrix target = schemes::ideal_target(scheme);
  const dynamics::DecoherenceParams dec =
      decoherence ? dynamics::DecoherenceParams::from_t2_echo(system.t2_echo) : dynamics::DecoherenceParams::none();

  double sum = 0.0;
  double total = 0.0;
  for (const auto& r : realizations) {
    const schemes::PulseSequence seq = schemes::inject_errors(base, r, injection);
    double f = 0.0;
    if (decoherence) {
      f = metrics::average_gate_fidelity_channel(dynamics::lindblad_channel(seq, system, r, dec, integrator), target);
    } else {
      f = metrics::average_gate_fidelity_unitary(dynamics::propagate(seq, system, r, integrator), target);
    }
    sum += r.weight * f;
    total += r.weight;
  }
  if (!(total > 0.0)) throw NumericalError("noise realizations carry no weight");
  return std::clamp(sum / total, 0.0, 1.0);
}

ResultGrid run(const SweepSpec& spec) {
  spec.validate();

  std::vector<std::vector<double>> points;
  const auto first = spec.axes[0].values();
  if (spec.axes.size() == 1) {
    for (double v : first) points.push_back({v});
  } else {
    const auto second = spec.axes[1].values();
    for (double a : first) {
      for (double b : second) points.push_back({a, b});
    }
  }

  const bool infid = reports_infidelity(spec.experiment);
  const bool spot = spec.spot_check_full && spec.axes.size() == 2 && spec.axes[0].points == spec.axes[1].points;
  const bool exchange_error_column = spec.experiment == "fig2";
  const std::size_t n_schemes = spec.schemes.size();
  const std::size_t n_second = spec.axes.size() == 2 ? static_cast<std::size_t>(spec.axes[1].points) : 1;

  std::vector<Task> tasks;
  for (std::size_t p = 0; p < points.size(); ++p) {
    for (std::size_t s = 0; s < n_schemes; ++s) tasks.push_back({p, s, false});
    if (spot && p / n_second == p % n_second) {
      for (std::size_t s = 0; s < n_schemes; ++s) tasks.push_back({p, s, true});
    }
  }

  const schemes::InjectionOptions injection{spec.amplitude_errors_on_local_z};
  dynamics::IntegratorConfig full_cfg = spec.integrator;
  full_cfg.mode = dynamics::Mode::full_counter_rotating;

  const auto results = parallel::map_indexed<double>(
      tasks.size(),
      [&](std::size_t i) {
        const Task& t = tasks[i];
        schemes::SchemeSpec scheme = scheme_for(spec, spec.schemes[t.scheme]);
        model::ErrorRealization fixed = spec.fixed;
        noise::NoiseAveragingConfig noise = spec.noise;
        for (std::size_t a = 0; a < spec.axes.size(); ++a) {
          apply_axis(spec.axes[a].name, points[t.point][a], scheme, fixed, noise);
        }
        return averaged_fidelity(scheme, spec.system, fixed, effective_noise(noise, spec.raise_order_for_wide_noise),
                                 t.full_spot ? full_cfg : spec.integrator, spec.decoherence, injection);
      },
      parallel::resolve_workers(spec.workers));

  ResultGrid grid;
  add_metadata(grid, spec);
  grid.axis_count = spec.axes.size();
  for (const auto& a : spec.axes) grid.columns.push_back(a.name);
  if (exchange_error_column) grid.columns.push_back("max_eps_j");
  for (const auto& s : spec.schemes) grid.columns.push_back(value_column(infid ? "infidelity" : "fidelity", s, n_schemes));
  if (spot) {
    for (const auto& s : spec.schemes) grid.columns.push_back(value_column("fidelity_full", s, n_schemes));
  }

  const double nan = std::numeric_limits<double>::quiet_NaN();
  std::vector<std::vector<double>> main(points.size(), std::vector<double>(n_schemes, nan));
  std::vector<std::vector<double>> full(points.size(), std::vector<double>(n_schemes, nan));
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    (tasks[i].full_spot ? full : main)[tasks[i].point][tasks[i].scheme] = results[i];
  }

  for (std::size_t p = 0; p < points.size(); ++p) {
    std::vector<double> row = points[p];
    if (exchange_error_column) {
      schemes::SchemeSpec scheme = scheme_for(spec, "conventional");
      model::ErrorRealization fixed = spec.fixed;
      noise::NoiseAveragingConfig noise = spec.noise;
      for (std::size_t a = 0; a < spec.axes.size(); ++a) apply_axis(spec.axes[a].name, points[p][a], scheme, fixed, noise);
      const auto& c = std::get<schemes::Conventional>(scheme.variant);
      const model::ConventionalWaveform w{c.j_dc, c.j_ac, std::abs(spec.system.delta_ez()), true, fixed.eps_v};
      row.push_back(model::max_relative_exchange_error(w, spec.system.exchange_model));
    }
    for (double f : main[p]) row.push_back(infid ? 1.0 - f : f);
    if (spot) {
      for (double f : full[p]) row.push_back(f);
    }
    grid.rows.push_back(std::move(row));
  }
  grid.validate();
  return grid;
}

}  // namespace riswap::experiments
