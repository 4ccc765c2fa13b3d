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

#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "riswap/model.hpp"

/// Gate protocols compiled into piecewise segment lists.
///
/// Conventional: ac-modulated exchange, J(t) = J_dc + J_ac cos(|ΔE_z| t).
/// DirectA:      symmetric drive Ω = J√(4n²−1)/4 for T = 2π/J.
/// CompositeB:   U(Ω,π/J), Z_{π/2} pair, U(−Ω,π/J), Z_{−π/2} pair; any Ω.
/// DcgC:         CompositeB with each half split into τ₁ = π/3J, τ₂ = 2π/3J
///               pieces, cancelling first-order drive-amplitude asymmetry.
namespace riswap::schemes {

using model::ComplexMatrix;

enum class SegmentKind { two_qubit, local_z, conventional_ac };

/// Which DCG duration a segment carries, so timing errors can find it.
enum class TimingSlot { none, tau1, tau2 };

struct Segment {
  SegmentKind kind = SegmentKind::two_qubit;
  double duration = 0.0;
  double omega1 = 0.0;
  double omega2 = 0.0;
  model::ExchangeProfile exchange = model::ConstantExchange{};
  TimingSlot slot = TimingSlot::none;

  model::DriveSettings drives() const;
  friend bool operator==(const Segment&, const Segment&) = default;
};

struct GateTiming {
  double two_qubit_time = 0.0;
  double local_time = 0.0;
  double total = 0.0;
};

/// Segments in evolution order (first applied first).
struct PulseSequence {
  std::vector<Segment> segments;

  double total_duration() const;
  GateTiming timing() const;
  void validate() const;
  friend bool operator==(const PulseSequence&, const PulseSequence&) = default;
};

struct Conventional {
  double j_dc = 0.0;
  double j_ac = 0.0;
  bool voltage_domain = false;
  friend bool operator==(const Conventional&, const Conventional&) = default;
};

struct DirectA {
  int n = 2;
  // Off-condition drives are rejected unless explicitly allowed; the
  // drive-ratio studies need them.
  bool allow_detuned_drive = false;
  friend bool operator==(const DirectA&, const DirectA&) = default;
};

struct CompositeB {
  friend bool operator==(const CompositeB&, const CompositeB&) = default;
};

struct DcgC {
  friend bool operator==(const DcgC&, const DcgC&) = default;
};

using SchemeVariant = std::variant<Conventional, DirectA, CompositeB, DcgC>;

/// Exchange value used while the exchange is switched off.
enum class ExchangeOff { residual, zero };

struct SchemeSpec {
  SchemeVariant variant;
  double j = 0.0;      // exchange while on
  double omega = 0.0;  // drive amplitude (unused by Conventional)
  ExchangeOff exchange_off = ExchangeOff::residual;

  std::string name() const;
  void validate() const;
  friend bool operator==(const SchemeSpec&, const SchemeSpec&) = default;
};

/// Ω satisfying the drive-exchange condition √(Ω² + J²/16)·2π/J = nπ.
double drive_for_condition(int n, double j);

SchemeSpec make_conventional(double j_dc, double j_ac, bool voltage_domain = false);
SchemeSpec make_direct_a(int n, double j);
SchemeSpec make_composite_b(double j, double omega);
SchemeSpec make_dcg_c(double j, double omega);

/// Scheme from a short name: "conventional", "A", "B", "C" (case-insensitive),
/// configured with the device defaults (J = j_max, Ω = √15/4 J_max, n = 2,
/// conventional J_dc = J_ac = j_max/2).
SchemeSpec scheme_from_name(const std::string& name, const model::SystemParams& params);

PulseSequence compile(const SchemeSpec& spec, const model::SystemParams& params);

struct InjectionOptions {
  bool amplitude_errors_on_local_z = true;
};

/// Applies ε_k to drive amplitudes, δ_τ to DCG durations, ε_v to conventional
/// waveforms (switching them to voltage mode) and δJ to switched-on constant
/// exchange. δ₁, δ₂ are left to the propagators.
PulseSequence inject_errors(const PulseSequence& seq, const model::ErrorRealization& err,
                            const InjectionOptions& options = {});

/// Dressed-frame target: iSWAP with (−1)^n on the parallel-spin entries for A
/// and +1 there for B and C.
/// Throws ModeError for Conventional, which has no dressed-frame target.
ComplexMatrix ideal_target_dressed(const SchemeSpec& spec);

/// Target in the rotating frame the propagators work in. For Conventional this
/// is the noiseless RWA propagator of the exchange Hamiltonian at T = 2π/J_ac.
ComplexMatrix ideal_target(const SchemeSpec& spec);

/// EA = cos(Jτ₂/2) − cos²(J(τ₁+τ₂)/4). For the S₂ block
/// H = [[εΩ, J/4], [J/4, −εΩ]] the DCG product has ∂U/∂ε at ε = 0 equal to
/// (8Ω/J)·EA·[[0, 1], [−1, 0]], so EA = 0 removes the first-order term.
double dcg_error_amplitude(double tau1, double tau2, double j);

/// One CSV row per segment: kind,duration_ns,omega1_MHz,omega2_MHz,exchange.
void write_sequence_csv(const PulseSequence& seq, std::ostream& out);

std::string to_string(SegmentKind kind);

}  // namespace riswap::schemes
