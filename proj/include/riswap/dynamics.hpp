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

#include <cstddef>
#include <optional>
#include <string>

#include "riswap/model.hpp"
#include "riswap/schemes.hpp"

/// Propagation of compiled pulse sequences.
///
/// Superoperators act on row-major vectorized density matrices:
/// vec(ρ)[4i + j] = ρ(i, j).
namespace riswap::dynamics {

using model::ComplexMatrix;

enum class Mode { rwa, full_counter_rotating };

struct IntegratorConfig {
  Mode mode = Mode::rwa;
  std::optional<double> step;  // s; overrides substeps_per_fastest_period
  int substeps_per_fastest_period = 40;

  void validate() const;
  friend bool operator==(const IntegratorConfig&, const IntegratorConfig&) = default;
};

std::string to_string(Mode mode);
Mode mode_from_string(const std::string& text);

/// Fastest frequency retained by the interaction-picture Hamiltonian, in Hz:
/// max(2B_z¹, 2B_z², 2|ΔE_z|)/2π.
double fastest_frequency(const model::SystemParams& params);

/// Step actually used in full mode; ConfigurationError if it exceeds
/// 1/(20·f_max).
double resolve_step(const IntegratorConfig& cfg, const model::SystemParams& params);

struct DecoherenceParams {
  double gamma1 = 0.0;
  double gamma2 = 0.0;

  /// γ₁ = γ₂ = 1/T₂^echo.
  static DecoherenceParams from_t2_echo(double t2_echo);
  static DecoherenceParams none() { return {}; }
  bool active() const { return gamma1 > 0.0 || gamma2 > 0.0; }
  void validate() const;
  friend bool operator==(const DecoherenceParams&, const DecoherenceParams&) = default;
};

/// Constant RWA Hamiltonian of one segment. Only δ₁ and δ₂ are read from err.
ComplexMatrix segment_hamiltonian_rwa(const schemes::Segment& segment, const model::ErrorRealization& err);

/// Product of exact segment exponentials. ModeError for voltage-mode
/// conventional segments, whose exchange is time dependent.
ComplexMatrix propagate_rwa(const schemes::PulseSequence& seq, const model::ErrorRealization& err);

struct FullPropagation {
  ComplexMatrix unitary;
  std::size_t steps = 0;
  int reunitarizations = 0;  // polar projections applied at segment boundaries
  double max_drift = 0.0;    // largest ‖U†U − I‖_F seen at a boundary
};

/// Fixed-step RK4 of the interaction-picture Schrödinger equation with all
/// counter-rotating terms. Drift above 1e-8 at a segment boundary is removed
/// by polar projection (counted); drift above 1e-3 raises NumericalError.
FullPropagation propagate_full_detailed(const schemes::PulseSequence& seq, const model::SystemParams& params,
                                        const model::ErrorRealization& err, const IntegratorConfig& cfg);

ComplexMatrix propagate_full(const schemes::PulseSequence& seq, const model::SystemParams& params,
                             const model::ErrorRealization& err, const IntegratorConfig& cfg);

/// Dispatch on cfg.mode.
ComplexMatrix propagate(const schemes::PulseSequence& seq, const model::SystemParams& params,
                        const model::ErrorRealization& err, const IntegratorConfig& cfg);

/// Dephasing part of the generator: D(X)(i,j) = −rate(i,j)·X(i,j).
double dephasing_rate(const DecoherenceParams& dec, std::size_t i, std::size_t j);

/// 16×16 generator −i(H⊗I − I⊗Hᵀ) + D for a constant Hamiltonian.
ComplexMatrix lindblad_generator(const ComplexMatrix& h, const DecoherenceParams& dec);

/// Superoperator of the whole sequence.
///
/// rwa: per segment the degree-4 Taylor polynomial of hL (h‖L‖_F ≤ 0.01,
/// at least 64 steps) raised to 2^k by squaring.
/// full: RK4 unitary micro-steps with Strang-split dephasing every ≤ 50 ps.
ComplexMatrix lindblad_channel(const schemes::PulseSequence& seq, const model::SystemParams& params,
                               const model::ErrorRealization& err, const DecoherenceParams& dec,
                               const IntegratorConfig& cfg);

/// U ⊗ conj(U): the superoperator of ρ ↦ UρU†.
ComplexMatrix unitary_superoperator(const ComplexMatrix& u);

ComplexMatrix apply_channel(const ComplexMatrix& channel, const ComplexMatrix& rho);

/// rho0 must be a valid density matrix (ValidationError otherwise).
ComplexMatrix lindblad_propagate(const schemes::PulseSequence& seq, const model::SystemParams& params,
                                 const model::ErrorRealization& err, const DecoherenceParams& dec,
                                 const ComplexMatrix& rho0, const IntegratorConfig& cfg);

}  // namespace riswap::dynamics
