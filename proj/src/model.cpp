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

#include "riswap/model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "riswap/errors.hpp"
#include "riswap/units.hpp"

namespace riswap::model {

namespace {

constexpr double kBesselMaxArgument = 30.0;

bool finite(double x) { return std::isfinite(x); }

// +1 for ↑, −1 for ↓ of the given qubit at basis index i.
constexpr double spin_sign(std::size_t index, int qubit) {
  const std::size_t bit = qubit == 1 ? (index & 1u) : ((index >> 1) & 1u);
  return bit == 0 ? 1.0 : -1.0;
}

void check_qubit(int qubit) {
  if (qubit != 1 && qubit != 2) throw DomainError("qubit index must be 1 or 2");
}

// Fills the shared structure of all two-qubit Hamiltonians used here:
// Zeeman and ZZ diagonal, a flip-flop amplitude g on S_-¹S_+², and single-spin
// lowering amplitudes c1, c2, each with its Hermitian conjugate.
void fill_hamiltonian(ComplexMatrix& h, double delta1, double delta2, double zz, Complex g,
                      Complex c1, Complex c2) {
  if (h.dim() != 4) h = ComplexMatrix(4);
  auto d = h.data();
  std::fill(d.begin(), d.end(), Complex{});
  for (std::size_t i = 0; i < 4; ++i) {
    const double s1 = spin_sign(i, 1);
    const double s2 = spin_sign(i, 2);
    h(i, i) = 0.5 * delta1 * s1 + 0.5 * delta2 * s2 + 0.25 * zz * s1 * s2;
  }
  h(1, 2) += g;
  h(2, 1) += std::conj(g);

  h(1, 0) += c1;
  h(3, 2) += c1;
  h(0, 1) += std::conj(c1);
  h(2, 3) += std::conj(c1);

  h(2, 0) += c2;
  h(3, 1) += c2;
  h(0, 2) += std::conj(c2);
  h(1, 3) += std::conj(c2);
}

}  // namespace

void ExchangeVoltageModel::validate() const {
  if (!(j0 > 0.0) || !finite(j0)) throw ValidationError("exchange model: j0 must be positive");
  if (!(alpha > 0.0) || !finite(alpha)) throw ValidationError("exchange model: alpha must be positive");
}

std::string SystemParams::validate() const {
  for (double x : {bz1, bz2, j_max, t2_echo}) {
    if (!finite(x)) throw ValidationError("system parameters must be finite");
  }
  if (delta_ez() == 0.0) throw ValidationError("system parameters: bz1 and bz2 must differ");
  if (!(t2_echo > 0.0)) throw ValidationError("system parameters: t2_echo must be positive");
  if (j_max < 0.0) throw ValidationError("system parameters: j_max must be non-negative");
  exchange_model.validate();
  if (j_max > 0.2 * std::abs(delta_ez())) {
    return "j_max exceeds 0.2·|ΔE_z|; the rotating-wave picture may be inaccurate";
  }
  return {};
}

SystemParams SystemParams::defaults() {
  using namespace units;
  SystemParams p;
  const double e_avg = ghz(17.0);
  const double delta = ghz(0.3);
  p.bz1 = e_avg + 0.5 * delta;
  p.bz2 = e_avg - 0.5 * delta;
  p.j_max = mhz(15.0);
  p.t2_echo = us(20.0);
  p.exchange_model = {khz(10.0), 10.0};
  return p;
}

bool DriveSettings::resonant(const SystemParams& p) const {
  return carrier1(p) == p.bz1 && carrier2(p) == p.bz2;
}

void ErrorRealization::validate() const {
  for (double x : {delta1, delta2, delta_j, eps1, eps2, eps_v, dtau1, dtau2, weight}) {
    if (!finite(x)) throw ValidationError("error realization fields must be finite");
  }
  if (weight < 0.0) throw ValidationError("error realization weight must be non-negative");
}

ErrorRealization ErrorRealization::zeeman_part() const {
  ErrorRealization out;
  out.delta1 = delta1;
  out.delta2 = delta2;
  out.weight = weight;
  return out;
}

double conventional_target(const ConventionalWaveform& w, const ExchangeVoltageModel& m, double t) {
  const double j = w.j_dc + w.j_ac * std::cos(w.omega_mod * t);
  return w.voltage_mode ? std::max(j, m.j0) : j;
}

double exchange_at(const ExchangeProfile& profile, const ExchangeVoltageModel& m, double t) {
  if (const auto* c = std::get_if<ConstantExchange>(&profile)) return c->j;
  const auto& w = std::get<ConventionalWaveform>(profile);
  const double target = conventional_target(w, m, t);
  if (!w.voltage_mode) return target;
  const double v = voltage_for_exchange(m, target);
  return exchange_from_voltage(m, (1.0 + w.eps_v) * v);
}

double max_relative_exchange_error(const ConventionalWaveform& w, const ExchangeVoltageModel& m,
                                   int samples) {
  if (w.omega_mod <= 0.0 || samples < 2) throw DomainError("max_relative_exchange_error: bad period");
  const double period = units::kTwoPi / w.omega_mod;
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double t = period * i / samples;
    const double target = conventional_target(w, m, t);
    if (target <= 0.0) continue;
    worst = std::max(worst, std::abs(exchange_at(w, m, t) / target - 1.0));
  }
  return worst;
}

ComplexMatrix pauli_x() { return ComplexMatrix(2, {0.0, 1.0, 1.0, 0.0}); }
ComplexMatrix pauli_y() { return ComplexMatrix(2, {0.0, -qalg::kI, qalg::kI, 0.0}); }
ComplexMatrix pauli_z() { return ComplexMatrix(2, {1.0, 0.0, 0.0, -1.0}); }

ComplexMatrix on_qubit(const ComplexMatrix& op, int qubit) {
  check_qubit(qubit);
  if (op.dim() != 2) throw DimensionError("on_qubit: single-qubit operator must be 2x2");
  const auto id = ComplexMatrix::identity(2);
  // Qubit 1 is the least significant index.
  return qubit == 1 ? qalg::kron(id, op) : qalg::kron(op, id);
}

ComplexMatrix two_qubit_product(const ComplexMatrix& op1, const ComplexMatrix& op2) {
  return qalg::kron(op2, op1);
}

ComplexMatrix spin_x(int qubit) { return on_qubit(0.5 * pauli_x(), qubit); }
ComplexMatrix spin_y(int qubit) { return on_qubit(0.5 * pauli_y(), qubit); }
ComplexMatrix spin_z(int qubit) { return on_qubit(0.5 * pauli_z(), qubit); }
ComplexMatrix spin_minus(int qubit) { return on_qubit(ComplexMatrix(2, {0.0, 0.0, 1.0, 0.0}), qubit); }
ComplexMatrix spin_plus(int qubit) { return on_qubit(ComplexMatrix(2, {0.0, 1.0, 0.0, 0.0}), qubit); }

ComplexMatrix h_rwa_total(const SystemParams& params, const DriveSettings& drives, double j,
                          const ErrorRealization& err) {
  (void)params;
  const double om1 = (1.0 + err.eps1) * drives.omega1;
  const double om2 = (1.0 + err.eps2) * drives.omega2;
  const Complex c1 = 0.5 * qalg::kI * om1 * std::polar(1.0, drives.phase1);
  const Complex c2 = 0.5 * qalg::kI * om2 * std::polar(1.0, drives.phase2);
  ComplexMatrix h(4);
  fill_hamiltonian(h, err.delta1, err.delta2, j + err.delta_j, 0.0, c1, c2);
  return h;
}

ComplexMatrix h_conventional_rwa(double j_dc, double j_ac, const ErrorRealization& err) {
  if (j_dc < 0.0 || j_ac < 0.0) throw DomainError("h_conventional_rwa: exchange must be non-negative");
  ComplexMatrix h(4);
  fill_hamiltonian(h, err.delta1, err.delta2, j_dc + err.delta_j, 0.25 * j_ac, 0.0, 0.0);
  return h;
}

ComplexMatrix dressed_transform() {
  static const ComplexMatrix s =
      qalg::expm_hermitian_prop(spin_y(1) + spin_y(2), std::numbers::pi / 2.0);
  return s;
}

ComplexMatrix to_dressed_frame(const ComplexMatrix& op) {
  const ComplexMatrix s = dressed_transform();
  return s.adjoint() * op * s;
}

ComplexMatrix from_dressed_frame(const ComplexMatrix& op) {
  const ComplexMatrix s = dressed_transform();
  return s * op * s.adjoint();
}

ComplexMatrix subspace_block(const ComplexMatrix& m, const std::size_t (&indices)[2]) {
  if (m.dim() != 4) throw DimensionError("subspace_block: expected a 4x4 matrix");
  ComplexMatrix b(2);
  for (std::size_t r = 0; r < 2; ++r) {
    for (std::size_t c = 0; c < 2; ++c) b(r, c) = m(indices[r], indices[c]);
  }
  return b;
}

DressedBlocks h_dressed_ideal(double omega, double j, bool z_rotated) {
  const double coupling = z_rotated ? -0.25 * j : 0.25 * j;
  return {ComplexMatrix(2, {omega, coupling, coupling, -omega}),
          ComplexMatrix(2, {0.0, 0.25 * j, 0.25 * j, 0.0})};
}

ComplexMatrix assemble_dressed(const DressedBlocks& blocks) {
  ComplexMatrix m(4);
  for (std::size_t r = 0; r < 2; ++r) {
    for (std::size_t c = 0; c < 2; ++c) {
      m(kS1Indices[r], kS1Indices[c]) = blocks.s1(r, c);
      m(kS2Indices[r], kS2Indices[c]) = blocks.s2(r, c);
    }
  }
  return m;
}

void h_interaction_full_into(double t, const SystemParams& params, const DriveSettings& drives,
                             const ExchangeProfile& exchange, const ErrorRealization& err,
                             ComplexMatrix& out) {
  const double j = exchange_at(exchange, params.exchange_model, t) + err.delta_j;
  const Complex g = 0.5 * j * std::polar(1.0, -params.delta_ez() * t);

  auto drive_amplitude = [&](double omega, double phase, double carrier, double bz) -> Complex {
    if (omega == 0.0) return 0.0;
    const Complex co = std::polar(1.0, (carrier - bz) * t + phase);
    const Complex counter = std::polar(1.0, -((carrier + bz) * t - phase));
    return 0.5 * qalg::kI * omega * (co + counter);
  };
  const Complex c1 = drive_amplitude((1.0 + err.eps1) * drives.omega1, drives.phase1,
                                     drives.carrier1(params), params.bz1);
  const Complex c2 = drive_amplitude((1.0 + err.eps2) * drives.omega2, drives.phase2,
                                     drives.carrier2(params), params.bz2);
  fill_hamiltonian(out, err.delta1, err.delta2, j, g, c1, c2);
}

ComplexMatrix h_interaction_full(double t, const SystemParams& params, const DriveSettings& drives,
                                 const ExchangeProfile& exchange, const ErrorRealization& err) {
  if (t < 0.0) throw DomainError("h_interaction_full: negative time");
  ComplexMatrix h(4);
  h_interaction_full_into(t, params, drives, exchange, err, h);
  return h;
}

double exchange_from_voltage(const ExchangeVoltageModel& m, double v) {
  return m.j0 * std::exp(2.0 * m.alpha * v);
}

double voltage_for_exchange(const ExchangeVoltageModel& m, double j) {
  if (!(j > 0.0)) throw DomainError("voltage_for_exchange: exchange must be positive");
  return std::log(std::max(j, m.j0) / m.j0) / (2.0 * m.alpha);
}

double bessel_i(int k, double x) {
  if (k < 0) throw DomainError("bessel_i: order must be non-negative");
  if (!(std::abs(x) <= kBesselMaxArgument)) throw DomainError("bessel_i: |x| must be <= 30");
  const double value = std::cyl_bessel_i(static_cast<double>(k), std::abs(x));
  return (x < 0.0 && k % 2 == 1) ? -value : value;
}

std::vector<HarmonicCoefficient> harmonic_decomposition(const ExchangeVoltageModel& m, double v0,
                                                        double v1, int k_max) {
  if (k_max < 0) throw DomainError("harmonic_decomposition: k_max must be non-negative");
  const double prefactor = exchange_from_voltage(m, v0);
  const double x = 2.0 * m.alpha * v1;
  std::vector<HarmonicCoefficient> out;
  out.reserve(2 * static_cast<std::size_t>(k_max) + 1);
  for (int k = -k_max; k <= k_max; ++k) {
    out.push_back({k, prefactor * bessel_i(std::abs(k), x)});
  }
  return out;
}

}  // namespace riswap::model
