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

#include <numbers>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "riswap/qalg.hpp"

/// Device parameters and Hamiltonians of two exchange-coupled spin qubits.
///
/// Basis convention: {|↑↑⟩, |↓↑⟩, |↑↓⟩, |↓↓⟩}, i.e. qubit 1 is the least
/// significant index (index = q1 + 2·q2 with ↑ = 0, ↓ = 1). Spin operators are
/// σ/2. All frequencies are angular (rad/s), times in seconds.
namespace riswap::model {

using qalg::Complex;
using qalg::ComplexMatrix;

/// J(v) = j0 · exp(2 α v).
struct ExchangeVoltageModel {
  double j0 = 0.0;     // residual exchange, rad/s
  double alpha = 0.0;  // lever arm, 1/V

  void validate() const;
  friend bool operator==(const ExchangeVoltageModel&, const ExchangeVoltageModel&) = default;
};

struct SystemParams {
  double bz1 = 0.0;
  double bz2 = 0.0;
  double j_max = 0.0;
  double t2_echo = 0.0;  // s
  ExchangeVoltageModel exchange_model;

  double e_avg() const { return 0.5 * (bz1 + bz2); }
  double delta_ez() const { return bz1 - bz2; }

  /// Throws ValidationError on hard violations. Returns a warning message
  /// (empty if none) when j_max exceeds 0.2·|ΔE_z|, the weak-exchange regime.
  std::string validate() const;

  /// E_avg/2π = 17 GHz, ΔE_z/2π = 0.3 GHz, J_max/2π = 15 MHz, T₂echo = 20 μs,
  /// J₀/2π = 10 kHz. The lever arm cancels from every observable; 10 /V is used.
  static SystemParams defaults();

  friend bool operator==(const SystemParams&, const SystemParams&) = default;
};

inline constexpr double kDefaultDrivePhase = -std::numbers::pi / 2.0;

/// Microwave drives B_y^k(t) = 2 Ω_k cos(ω_k t + φ_k). Carrier frequencies
/// left unset mean resonant driving (ω_k = B_z^k).
struct DriveSettings {
  double omega1 = 0.0;
  double omega2 = 0.0;
  double phase1 = kDefaultDrivePhase;
  double phase2 = kDefaultDrivePhase;
  std::optional<double> freq1;
  std::optional<double> freq2;

  double omega_plus() const { return omega1 + omega2; }
  double omega_minus() const { return omega1 - omega2; }
  double carrier1(const SystemParams& p) const { return freq1.value_or(p.bz1); }
  double carrier2(const SystemParams& p) const { return freq2.value_or(p.bz2); }
  bool resonant(const SystemParams& p) const;
};

/// One draw of every quasi-static error the simulator knows about.
struct ErrorRealization {
  double delta1 = 0.0;   // Zeeman shift of qubit 1, rad/s
  double delta2 = 0.0;   // Zeeman shift of qubit 2, rad/s
  double delta_j = 0.0;  // exchange shift, rad/s
  double eps1 = 0.0;     // relative drive-amplitude error, qubit 1
  double eps2 = 0.0;     // relative drive-amplitude error, qubit 2
  double eps_v = 0.0;    // relative barrier-voltage error
  double dtau1 = 0.0;    // relative timing error of τ₁ segments
  double dtau2 = 0.0;    // relative timing error of τ₂ segments
  double weight = 1.0;

  void validate() const;
  /// Copy keeping only δ₁ and δ₂ (what the Hamiltonian builders see once the
  /// control errors have been compiled into a sequence).
  ErrorRealization zeeman_part() const;

  friend bool operator==(const ErrorRealization&, const ErrorRealization&) = default;
};

// Exchange profiles ----------------------------------------------------------

struct ConstantExchange {
  double j = 0.0;
  friend bool operator==(const ConstantExchange&, const ConstantExchange&) = default;
};

/// Target J(t) = j_dc + j_ac cos(omega_mod·t). In voltage mode the waveform is
/// produced through the exponential J(v) model: the ideal voltage is the
/// (clamped, v ≥ 0) inverse of the target and the applied voltage carries the
/// relative error eps_v.
struct ConventionalWaveform {
  double j_dc = 0.0;
  double j_ac = 0.0;
  double omega_mod = 0.0;
  bool voltage_mode = false;
  double eps_v = 0.0;
  friend bool operator==(const ConventionalWaveform&, const ConventionalWaveform&) = default;
};

using ExchangeProfile = std::variant<ConstantExchange, ConventionalWaveform>;

/// Ideal (target) exchange of a conventional waveform, clamped at j0.
double conventional_target(const ConventionalWaveform& w, const ExchangeVoltageModel& m, double t);

/// Exchange actually applied at absolute time t.
double exchange_at(const ExchangeProfile& profile, const ExchangeVoltageModel& m, double t);

/// max_t |J_applied(t)/J_target(t) − 1| over one modulation period.
double max_relative_exchange_error(const ConventionalWaveform& w, const ExchangeVoltageModel& m,
                                   int samples = 4096);

// Operators ------------------------------------------------------------------

/// Embed a single-qubit operator on qubit 1 or 2.
ComplexMatrix on_qubit(const ComplexMatrix& op, int qubit);
/// op1 on qubit 1 times op2 on qubit 2.
ComplexMatrix two_qubit_product(const ComplexMatrix& op1, const ComplexMatrix& op2);

ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();
ComplexMatrix spin_x(int qubit);
ComplexMatrix spin_y(int qubit);
ComplexMatrix spin_z(int qubit);
ComplexMatrix spin_minus(int qubit);  // |↓⟩⟨↑|
ComplexMatrix spin_plus(int qubit);

// Hamiltonians -----------------------------------------------------------------

/// Σ_k δ_k S_z^k + (1+ε_k)Ω_k (−sin φ_k S_x^k + cos φ_k S_y^k) + (J+δJ) S_z¹S_z².
/// For the default phases the drive term is Ω_k S_x^k.
ComplexMatrix h_rwa_total(const SystemParams& params, const DriveSettings& drives, double j,
                          const ErrorRealization& err);

/// Σ_k δ_k S_z^k + (j_dc+δJ) S_z¹S_z² + (j_ac/2)(S_x¹S_x² + S_y¹S_y²).
ComplexMatrix h_conventional_rwa(double j_dc, double j_ac, const ErrorRealization& err);

/// S = exp[−iπ(S_y¹ + S_y²)/2]; H_dressed = S† H S.
ComplexMatrix dressed_transform();
ComplexMatrix to_dressed_frame(const ComplexMatrix& op);
ComplexMatrix from_dressed_frame(const ComplexMatrix& op);

/// Indices of the dressed-frame subspaces inside the 4×4 matrix.
inline constexpr std::size_t kS1Indices[2] = {0, 3};
inline constexpr std::size_t kS2Indices[2] = {1, 2};

/// 2×2 block of a 4×4 matrix on the given index pair.
ComplexMatrix subspace_block(const ComplexMatrix& m, const std::size_t (&indices)[2]);

struct DressedBlocks {
  ComplexMatrix s1;  // [[Ω, ±J/4], [±J/4, −Ω]]
  ComplexMatrix s2;  // [[0, J/4], [J/4, 0]]
};

/// Ideal dressed-frame Hamiltonian for symmetric driving. With z_rotated the
/// S₁ coupling changes sign, as produced by conjugation with Z_{∓π/2} pairs.
DressedBlocks h_dressed_ideal(double omega, double j, bool z_rotated = false);

/// Direct sum of the two blocks back into the 4×4 dressed-frame layout.
ComplexMatrix assemble_dressed(const DressedBlocks& blocks);

/// Interaction-picture Hamiltonian (with respect to Σ B_z^k S_z^k) retaining
/// all counter-rotating terms:
///   Σ δ_k S_z^k + J(t) S_z¹S_z² + [ (J(t)/2) e^{−iΔE_z t} S_-¹S_+²
///     + Σ_k c_k(t) S_-^k + h.c. ],
///   c_k(t) = (iΩ_k/2) [ e^{i((ω_k−B_k)t+φ_k)} + e^{−i((ω_k+B_k)t−φ_k)} ].
/// For resonant carriers and φ_k = −π/2 the co-rotating part reduces to Ω_k S_x^k
/// and the counter-rotating partner oscillates at 2B_z^k.
ComplexMatrix h_interaction_full(double t, const SystemParams& params, const DriveSettings& drives,
                                 const ExchangeProfile& exchange, const ErrorRealization& err);

/// Same as h_interaction_full, writing into a preallocated 4×4 matrix.
void h_interaction_full_into(double t, const SystemParams& params, const DriveSettings& drives,
                             const ExchangeProfile& exchange, const ErrorRealization& err,
                             ComplexMatrix& out);

// Exchange-voltage relation -------------------------------------------------

double exchange_from_voltage(const ExchangeVoltageModel& m, double v);

/// Inverse of exchange_from_voltage. Values 0 < j < j0 clamp to v = 0;
/// j ≤ 0 raises DomainError.
double voltage_for_exchange(const ExchangeVoltageModel& m, double j);

/// Modified Bessel function of the first kind, integer order k ≥ 0, |x| ≤ 30.
double bessel_i(int k, double x);

struct HarmonicCoefficient {
  int k = 0;
  double coefficient = 0.0;  // rad/s
};

/// Fourier coefficients of J(t) for v(t) = v0 + v1 cos(ωt):
/// J(t) = J₀ e^{2αv₀} Σ_k I_k(2αv₁) e^{ikωt}, for k = −k_max … k_max.
std::vector<HarmonicCoefficient> harmonic_decomposition(const ExchangeVoltageModel& m, double v0,
                                                        double v1, int k_max);

}  // namespace riswap::model
