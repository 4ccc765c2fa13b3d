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

#include "riswap/schemes.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "riswap/errors.hpp"
#include "riswap/units.hpp"

namespace riswap::schemes {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kDriveConditionTolerance = 1e-9;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

double exchange_off_value(const SchemeSpec& spec, const model::SystemParams& params) {
  return spec.exchange_off == ExchangeOff::residual ? params.exchange_model.j0 : 0.0;
}

Segment two_qubit(double omega, double j, double duration, TimingSlot slot = TimingSlot::none) {
  return {SegmentKind::two_qubit, duration, omega, omega, model::ConstantExchange{j}, slot};
}

// Dressed-frame Z_{±π/2} on both qubits: the drive keeps running at ±Ω with
// the exchange off, which is an x rotation of angle π/2 in the rotating frame.
Segment local_z(double signed_omega, double j_off) {
  const double duration = (kPi / 2.0) / std::abs(signed_omega);
  return {SegmentKind::local_z, duration, signed_omega, signed_omega, model::ConstantExchange{j_off},
          TimingSlot::none};
}

}  // namespace

model::DriveSettings Segment::drives() const {
  model::DriveSettings d;
  d.omega1 = omega1;
  d.omega2 = omega2;
  return d;
}

double PulseSequence::total_duration() const {
  double t = 0.0;
  for (const auto& s : segments) t += s.duration;
  return t;
}

GateTiming PulseSequence::timing() const {
  GateTiming g;
  for (const auto& s : segments) {
    (s.kind == SegmentKind::local_z ? g.local_time : g.two_qubit_time) += s.duration;
  }
  g.total = g.two_qubit_time + g.local_time;
  return g;
}

void PulseSequence::validate() const {
  for (const auto& s : segments) {
    if (!(s.duration > 0.0) || !std::isfinite(s.duration)) {
      throw ValidationError("segment duration must be positive and finite");
    }
    if (!std::isfinite(s.omega1) || !std::isfinite(s.omega2)) {
      throw ValidationError("segment drive amplitudes must be finite");
    }
  }
}

std::string SchemeSpec::name() const {
  return std::visit(overloaded{[](const Conventional&) { return std::string("conventional"); },
                               [](const DirectA&) { return std::string("A"); },
                               [](const CompositeB&) { return std::string("B"); },
                               [](const DcgC&) { return std::string("C"); }},
                    variant);
}

void SchemeSpec::validate() const {
  std::visit(overloaded{[&](const Conventional& c) {
                          if (!(c.j_ac > 0.0) || c.j_dc < 0.0) {
                            throw ValidationError("conventional scheme needs j_ac > 0, j_dc >= 0");
                          }
                        },
                        [&](const DirectA& a) {
                          if (a.n < 1) throw ValidationError("scheme A needs n >= 1");
                          if (!(j > 0.0)) throw ValidationError("scheme A needs j > 0");
                          const double expected = drive_for_condition(a.n, j);
                          if (!a.allow_detuned_drive &&
                              std::abs(omega - expected) > kDriveConditionTolerance * expected) {
                            throw ConstraintViolation(
                                "scheme A drive violates the drive-exchange condition");
                          }
                          if (omega == 0.0) throw ValidationError("scheme A needs a drive");
                        },
                        [&](const CompositeB&) {
                          if (!(j > 0.0) || omega == 0.0) {
                            throw ValidationError("scheme B needs j > 0 and a non-zero drive");
                          }
                        },
                        [&](const DcgC&) {
                          if (!(j > 0.0) || omega == 0.0) {
                            throw ValidationError("scheme C needs j > 0 and a non-zero drive");
                          }
                        }},
             variant);
}

double drive_for_condition(int n, double j) {
  if (n < 1) throw DomainError("drive_for_condition: n must be >= 1");
  return j * std::sqrt(4.0 * n * n - 1.0) / 4.0;
}

SchemeSpec make_conventional(double j_dc, double j_ac, bool voltage_domain) {
  return {Conventional{j_dc, j_ac, voltage_domain}, j_ac, 0.0, ExchangeOff::residual};
}

SchemeSpec make_direct_a(int n, double j) {
  return {DirectA{n, false}, j, drive_for_condition(n, j), ExchangeOff::residual};
}

SchemeSpec make_composite_b(double j, double omega) {
  return {CompositeB{}, j, omega, ExchangeOff::residual};
}

SchemeSpec make_dcg_c(double j, double omega) { return {DcgC{}, j, omega, ExchangeOff::residual}; }

SchemeSpec scheme_from_name(const std::string& name, const model::SystemParams& params) {
  std::string key = name;
  std::transform(key.begin(), key.end(), key.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  const double j = params.j_max;
  const double omega = drive_for_condition(2, j);
  if (key == "conventional" || key == "conv") return make_conventional(0.5 * j, 0.5 * j);
  if (key == "a") return make_direct_a(2, j);
  if (key == "b") return make_composite_b(j, omega);
  if (key == "c") return make_dcg_c(j, omega);
  throw ValidationError("unknown scheme '" + name + "' (expected conventional, A, B or C)");
}

PulseSequence compile(const SchemeSpec& spec, const model::SystemParams& params) {
  spec.validate();
  const double j_off = exchange_off_value(spec, params);
  const double j = spec.j;
  const double om = spec.omega;
  PulseSequence seq;
  std::visit(
      overloaded{
          [&](const Conventional& c) {
            model::ConventionalWaveform w{c.j_dc, c.j_ac, std::abs(params.delta_ez()),
                                          c.voltage_domain, 0.0};
            seq.segments.push_back({SegmentKind::conventional_ac, units::kTwoPi / c.j_ac, 0.0, 0.0,
                                    w, TimingSlot::none});
          },
          [&](const DirectA&) { seq.segments.push_back(two_qubit(om, j, units::kTwoPi / j)); },
          [&](const CompositeB&) {
            seq.segments = {two_qubit(om, j, kPi / j), local_z(om, j_off),
                            two_qubit(-om, j, kPi / j), local_z(-om, j_off)};
          },
          [&](const DcgC&) {
            const double tau1 = kPi / (3.0 * j);
            const double tau2 = 2.0 * kPi / (3.0 * j);
            seq.segments = {two_qubit(om, j, tau1, TimingSlot::tau1),
                            two_qubit(-om, j, tau2, TimingSlot::tau2),
                            local_z(om, j_off),
                            two_qubit(om, j, tau2, TimingSlot::tau2),
                            two_qubit(-om, j, tau1, TimingSlot::tau1),
                            local_z(-om, j_off)};
          }},
      spec.variant);
  return seq;
}

PulseSequence inject_errors(const PulseSequence& seq, const model::ErrorRealization& err,
                            const InjectionOptions& options) {
  err.validate();
  PulseSequence out = seq;
  for (auto& s : out.segments) {
    const bool scale_amplitude =
        s.kind == SegmentKind::two_qubit ||
        (s.kind == SegmentKind::local_z && options.amplitude_errors_on_local_z);
    if (scale_amplitude) {
      s.omega1 *= 1.0 + err.eps1;
      s.omega2 *= 1.0 + err.eps2;
    }
    if (s.slot == TimingSlot::tau1) s.duration *= 1.0 + err.dtau1;
    if (s.slot == TimingSlot::tau2) s.duration *= 1.0 + err.dtau2;

    if (auto* w = std::get_if<model::ConventionalWaveform>(&s.exchange)) {
      if (err.eps_v != 0.0) {
        w->voltage_mode = true;
        w->eps_v = err.eps_v;
      }
    } else if (s.kind == SegmentKind::two_qubit && err.delta_j != 0.0) {
      std::get<model::ConstantExchange>(s.exchange).j += err.delta_j;
    }
  }
  out.validate();
  return out;
}

ComplexMatrix ideal_target_dressed(const SchemeSpec& spec) {
  const qalg::Complex mi = -qalg::kI;
  double parallel = 1.0;
  if (const auto* a = std::get_if<DirectA>(&spec.variant)) {
    parallel = a->n % 2 == 0 ? 1.0 : -1.0;
  } else if (std::holds_alternative<Conventional>(spec.variant)) {
    throw ModeError("the conventional scheme has no dressed-frame target");
  }
  return ComplexMatrix(4, {parallel, 0.0, 0.0, 0.0,  //
                           0.0, 0.0, mi, 0.0,        //
                           0.0, mi, 0.0, 0.0,        //
                           0.0, 0.0, 0.0, parallel});
}

ComplexMatrix ideal_target(const SchemeSpec& spec) {
  if (const auto* c = std::get_if<Conventional>(&spec.variant)) {
    return qalg::expm_hermitian_prop(model::h_conventional_rwa(c->j_dc, c->j_ac, {}),
                                     units::kTwoPi / c->j_ac);
  }
  return model::from_dressed_frame(ideal_target_dressed(spec));
}

double dcg_error_amplitude(double tau1, double tau2, double j) {
  if (!(tau1 > 0.0) || !(tau2 > 0.0)) throw DomainError("dcg_error_amplitude: durations must be positive");
  const double c = std::cos(j * (tau1 + tau2) / 4.0);
  return std::cos(j * tau2 / 2.0) - c * c;
}

std::string to_string(SegmentKind kind) {
  switch (kind) {
    case SegmentKind::two_qubit:
      return "two_qubit";
    case SegmentKind::local_z:
      return "local_z";
    case SegmentKind::conventional_ac:
      return "conventional_ac";
  }
  return "unknown";
}

void write_sequence_csv(const PulseSequence& seq, std::ostream& out) {
  out << "kind,duration_ns,omega1_MHz,omega2_MHz,exchange\n";
  char buf[512];
  for (const auto& s : seq.segments) {
    std::string exchange;
    if (const auto* c = std::get_if<model::ConstantExchange>(&s.exchange)) {
      std::snprintf(buf, sizeof buf, "J=%.12g MHz", units::to_mhz(c->j));
      exchange = buf;
    } else {
      const auto& w = std::get<model::ConventionalWaveform>(s.exchange);
      std::snprintf(buf, sizeof buf, "Jdc=%.12g MHz;Jac=%.12g MHz;w=%.12g MHz;voltage=%d;eps_v=%.12g",
                    units::to_mhz(w.j_dc), units::to_mhz(w.j_ac), units::to_mhz(w.omega_mod),
                    w.voltage_mode ? 1 : 0, w.eps_v);
      exchange = buf;
    }
    std::snprintf(buf, sizeof buf, "%s,%.12g,%.12g,%.12g,", to_string(s.kind).c_str(),
                  units::to_ns(s.duration), units::to_mhz(s.omega1), units::to_mhz(s.omega2));
    out << buf << exchange << '\n';
  }
}

}  // namespace riswap::schemes
