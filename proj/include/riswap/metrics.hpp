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

#include <functional>
#include <optional>
#include <vector>

#include "riswap/qalg.hpp"

/// Uhlmann fidelity, ensemble-averaged gate fidelity and infidelity.
namespace riswap::metrics {

using qalg::Complex;
using qalg::ComplexMatrix;
using Ket = std::vector<Complex>;

/// Equal-weight set of input states. Pure inputs keep their kets so that
/// fidelities against pure ideal outputs reduce to overlaps.
class InputEnsemble {
 public:
  static InputEnsemble from_kets(std::vector<Ket> kets);
  static InputEnsemble from_density_matrices(std::vector<ComplexMatrix> states);

  /// The 36 products of the single-qubit stabilizer states
  /// {|0⟩, |1⟩, |+⟩, |−⟩, |+i⟩, |−i⟩}.
  static const InputEnsemble& stabilizer_products();

  std::size_t size() const { return states_.size(); }
  const std::vector<ComplexMatrix>& states() const { return states_; }
  const std::optional<std::vector<Ket>>& kets() const { return kets_; }

 private:
  std::vector<ComplexMatrix> states_;
  std::optional<std::vector<Ket>> kets_;
};

/// F(ρ, σ) = tr √(√ρ σ √ρ), clamped to [0, 1]. Both arguments must be valid
/// density matrices (ValidationError otherwise).
double state_fidelity(const ComplexMatrix& rho, const ComplexMatrix& sigma);

/// F(ρ, |φ⟩⟨φ|) = √⟨φ|ρ|φ⟩ for a normalized |φ⟩.
double pure_state_fidelity(const ComplexMatrix& rho, const Ket& phi);

using ChannelEvaluator = std::function<ComplexMatrix(const ComplexMatrix&)>;

/// Mean of F(apply(ρ₀), Tρ₀T†) over the ensemble.
double average_gate_fidelity(const ChannelEvaluator& apply, const ComplexMatrix& target,
                             const InputEnsemble& ensemble = InputEnsemble::stabilizer_products());

/// Same quantity for a unitary implementation U: mean of |⟨ψ|T†U|ψ⟩| on pure
/// inputs.
double average_gate_fidelity_unitary(const ComplexMatrix& u, const ComplexMatrix& target,
                                     const InputEnsemble& ensemble = InputEnsemble::stabilizer_products());

/// Same quantity for a 16×16 superoperator.
double average_gate_fidelity_channel(const ComplexMatrix& channel, const ComplexMatrix& target,
                                     const InputEnsemble& ensemble = InputEnsemble::stabilizer_products());

/// 1 − f; DomainError outside [0, 1].
double infidelity(double f);

}  // namespace riswap::metrics
