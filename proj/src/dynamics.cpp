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

#include "riswap/dynamics.hpp"

#include <array>
#include <cmath>
#include <string>

#include "riswap/errors.hpp"
#include "riswap/units.hpp"

namespace riswap::dynamics {

namespace {

using qalg::Complex;
using Mat4 = std::array<Complex, 16>;

constexpr double kMinSubsteps = 20.0;
constexpr double kDriftReproject = 1e-8;
constexpr double kDriftFatal = 1e-3;
constexpr double kTaylorStepNorm = 0.01;
constexpr int kMinSquarings = 6;
constexpr double kDephasingSplitInterval = 50e-12;

// +1 for ↑, −1 for ↓.
double spin_sign(std::size_t index, int qubit) {
  const std::size_t bit = qubit == 1 ? (index & 1u) : ((index >> 1) & 1u);
  return bit == 0 ? 1.0 : -1.0;
}

inline void mul4(const Complex* a, const Complex* b, Complex* out) {
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      out[4 * r + c] = a[4 * r] * b[c] + a[4 * r + 1] * b[4 + c] + a[4 * r + 2] * b[8 + c] +
                       a[4 * r + 3] * b[12 + c];
    }
  }
}

Mat4 identity4() {
  Mat4 m{};
  for (int i = 0; i < 4; ++i) m[5 * i] = 1.0;
  return m;
}

ComplexMatrix to_matrix(const Mat4& m) { return ComplexMatrix(4, std::vector<Complex>(m.begin(), m.end())); }

Mat4 to_mat4(const ComplexMatrix& m) {
  Mat4 out;
  std::copy(m.data().begin(), m.data().end(), out.begin());
  return out;
}

// Fixed-step RK4 for dU/dt = −iH(t)U over [t0, t0 + n·h], updating u in place.
class UnitaryStepper {
 public:
  UnitaryStepper(const model::SystemParams& params, const schemes::Segment& segment,
                 const model::ErrorRealization& zeeman)
      : params_(params), drives_(segment.drives()), exchange_(segment.exchange), err_(zeeman), h_(4) {}

  void advance(double t0, double h, std::size_t n, Mat4& u) {
    Mat4 h0 = hamiltonian(t0);
    for (std::size_t s = 0; s < n; ++s) {
      const double t = t0 + static_cast<double>(s) * h;
      const Mat4 hm = hamiltonian(t + 0.5 * h);
      const Mat4 h1 = hamiltonian(t + h);
      Mat4 k1, k2, k3, k4, tmp;
      mul4(h0.data(), u.data(), k1.data());
      scale_minus_i(k1);
      for (int i = 0; i < 16; ++i) tmp[i] = u[i] + 0.5 * h * k1[i];
      mul4(hm.data(), tmp.data(), k2.data());
      scale_minus_i(k2);
      for (int i = 0; i < 16; ++i) tmp[i] = u[i] + 0.5 * h * k2[i];
      mul4(hm.data(), tmp.data(), k3.data());
      scale_minus_i(k3);
      for (int i = 0; i < 16; ++i) tmp[i] = u[i] + h * k3[i];
      mul4(h1.data(), tmp.data(), k4.data());
      scale_minus_i(k4);
      for (int i = 0; i < 16; ++i) u[i] += (h / 6.0) * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
      h0 = h1;
    }
  }

 private:
  static void scale_minus_i(Mat4& m) {
    for (auto& z : m) z = Complex(z.imag(), -z.real());
  }

  Mat4 hamiltonian(double t) {
    model::h_interaction_full_into(t, params_, drives_, exchange_, err_, h_);
    return to_mat4(h_);
  }

  const model::SystemParams& params_;
  model::DriveSettings drives_;
  model::ExchangeProfile exchange_;
  model::ErrorRealization err_;
  ComplexMatrix h_;
};

double unitarity_defect4(const Mat4& u) {
  return qalg::unitarity_defect(to_matrix(u));
}

std::size_t step_count(double duration, double step) {
  return static_cast<std::size_t>(std::max(1.0, std::ceil(duration / step - 1e-9)));
}

// out = a * b for 16×16 matrices stored densely; out must not alias.
void mul16(const ComplexMatrix& a, const ComplexMatrix& b, ComplexMatrix& out) { qalg::multiply_into(a, b, out); }

ComplexMatrix segment_superoperator_rwa(const ComplexMatrix& generator, double duration) {
  const double norm = generator.frobenius_norm();
  int k = kMinSquarings;
  while (duration / std::ldexp(1.0, k) * norm > kTaylorStepNorm && k < 60) ++k;
  const double h = duration / std::ldexp(1.0, k);

  const ComplexMatrix a = Complex(h) * generator;
  const ComplexMatrix id = ComplexMatrix::identity(16);
  // Horner form of I + A + A²/2 + A³/6 + A⁴/24.
  ComplexMatrix p = id + Complex(0.25) * a;
  ComplexMatrix tmp(16);
  for (double div : {3.0, 2.0, 1.0}) {
    mul16(a, p, tmp);
    p = id + Complex(1.0 / div) * tmp;
  }
  for (int i = 0; i < k; ++i) {
    mul16(p, p, tmp);
    std::swap(p, tmp);
  }
  return p;
}

void require_density_matrix(const ComplexMatrix& rho) {
  if (rho.dim() != 4) throw DimensionError("density matrix must be 4x4");
  qalg::validate_density_matrix(rho);
}

}  // namespace

void IntegratorConfig::validate() const {
  if (step && (!(*step > 0.0) || !std::isfinite(*step))) {
    throw ConfigurationError("integrator step must be positive");
  }
  if (substeps_per_fastest_period < static_cast<int>(kMinSubsteps)) {
    throw ConfigurationError("substeps_per_fastest_period must be at least 20");
  }
}

std::string to_string(Mode mode) { return mode == Mode::rwa ? "rwa" : "full_counter_rotating"; }

Mode mode_from_string(const std::string& text) {
  if (text == "rwa") return Mode::rwa;
  if (text == "full" || text == "full_counter_rotating") return Mode::full_counter_rotating;
  throw ValidationError("unknown integrator mode '" + text + "'");
}

double fastest_frequency(const model::SystemParams& params) {
  const double w = std::max({2.0 * std::abs(params.bz1), 2.0 * std::abs(params.bz2),
                             2.0 * std::abs(params.delta_ez())});
  return w / units::kTwoPi;
}

double resolve_step(const IntegratorConfig& cfg, const model::SystemParams& params) {
  cfg.validate();
  const double f_max = fastest_frequency(params);
  if (!(f_max > 0.0)) throw ConfigurationError("fastest frequency must be positive");
  const double step = cfg.step.value_or(1.0 / (cfg.substeps_per_fastest_period * f_max));
  if (step > 1.0 / (kMinSubsteps * f_max) * (1.0 + 1e-12)) {
    throw ConfigurationError("integrator step exceeds 1/(20 f_max)");
  }
  return step;
}

DecoherenceParams DecoherenceParams::from_t2_echo(double t2_echo) {
  if (!(t2_echo > 0.0)) throw ValidationError("t2_echo must be positive");
  return {1.0 / t2_echo, 1.0 / t2_echo};
}

void DecoherenceParams::validate() const {
  if (!(gamma1 >= 0.0) || !(gamma2 >= 0.0) || !std::isfinite(gamma1) || !std::isfinite(gamma2)) {
    throw ValidationError("dephasing rates must be finite and non-negative");
  }
}

ComplexMatrix segment_hamiltonian_rwa(const schemes::Segment& segment, const model::ErrorRealization& err) {
  const model::ErrorRealization zeeman = err.zeeman_part();
  if (const auto* c = std::get_if<model::ConstantExchange>(&segment.exchange)) {
    return model::h_rwa_total(model::SystemParams{}, segment.drives(), c->j, zeeman);
  }
  const auto& w = std::get<model::ConventionalWaveform>(segment.exchange);
  if (w.voltage_mode) {
    throw ModeError("voltage-mode conventional segments need full-mode propagation");
  }
  if (segment.omega1 != 0.0 || segment.omega2 != 0.0) {
    throw ModeError("conventional segments with drives are not supported in RWA mode");
  }
  return model::h_conventional_rwa(w.j_dc, w.j_ac, zeeman);
}

ComplexMatrix propagate_rwa(const schemes::PulseSequence& seq, const model::ErrorRealization& err) {
  seq.validate();
  ComplexMatrix u = ComplexMatrix::identity(4);
  for (const auto& s : seq.segments) {
    u = qalg::expm_hermitian_prop(segment_hamiltonian_rwa(s, err), s.duration) * u;
  }
  return u;
}

FullPropagation propagate_full_detailed(const schemes::PulseSequence& seq, const model::SystemParams& params,
                                        const model::ErrorRealization& err, const IntegratorConfig& cfg) {
  if (cfg.mode != Mode::full_counter_rotating) throw ModeError("propagate_full needs full mode");
  seq.validate();
  const double step = resolve_step(cfg, params);
  const model::ErrorRealization zeeman = err.zeeman_part();

  FullPropagation out;
  Mat4 u = identity4();
  double t = 0.0;
  for (const auto& s : seq.segments) {
    const std::size_t n = step_count(s.duration, step);
    const double h = s.duration / static_cast<double>(n);
    UnitaryStepper stepper(params, s, zeeman);
    stepper.advance(t, h, n, u);
    t += s.duration;
    out.steps += n;

    const double drift = unitarity_defect4(u);
    if (!std::isfinite(drift) || drift > kDriftFatal) {
      throw NumericalError("full propagation lost unitarity (drift " + std::to_string(drift) + ")");
    }
    out.max_drift = std::max(out.max_drift, drift);
    if (drift > kDriftReproject) {
      u = to_mat4(qalg::polar_unitary(to_matrix(u)));
      ++out.reunitarizations;
    }
  }
  out.unitary = to_matrix(u);
  return out;
}

ComplexMatrix propagate_full(const schemes::PulseSequence& seq, const model::SystemParams& params,
                             const model::ErrorRealization& err, const IntegratorConfig& cfg) {
  return propagate_full_detailed(seq, params, err, cfg).unitary;
}

ComplexMatrix propagate(const schemes::PulseSequence& seq, const model::SystemParams& params,
                        const model::ErrorRealization& err, const IntegratorConfig& cfg) {
  return cfg.mode == Mode::rwa ? propagate_rwa(seq, err) : propagate_full(seq, params, err, cfg);
}

double dephasing_rate(const DecoherenceParams& dec, std::size_t i, std::size_t j) {
  double rate = 0.0;
  if (spin_sign(i, 1) != spin_sign(j, 1)) rate += dec.gamma1;
  if (spin_sign(i, 2) != spin_sign(j, 2)) rate += dec.gamma2;
  return rate;
}

ComplexMatrix lindblad_generator(const ComplexMatrix& h, const DecoherenceParams& dec) {
  if (h.dim() != 4) throw DimensionError("lindblad_generator: expected a 4x4 Hamiltonian");
  dec.validate();
  ComplexMatrix l(16);
  const Complex mi = -qalg::kI;
  // vec(Hρ)[4i+j] = Σ_k H(i,k) ρ(k,j); vec(ρH)[4i+j] = Σ_k ρ(i,k) H(k,j).
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      const std::size_t row = 4 * i + j;
      for (std::size_t k = 0; k < 4; ++k) {
        l(row, 4 * k + j) += mi * h(i, k);
        l(row, 4 * i + k) -= mi * h(k, j);
      }
      l(row, row) -= dephasing_rate(dec, i, j);
    }
  }
  return l;
}

ComplexMatrix unitary_superoperator(const ComplexMatrix& u) {
  if (u.dim() != 4) throw DimensionError("unitary_superoperator: expected a 4x4 matrix");
  ComplexMatrix conj_u(4);
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 4; ++c) conj_u(r, c) = std::conj(u(r, c));
  }
  return qalg::kron(u, conj_u);
}

ComplexMatrix lindblad_channel(const schemes::PulseSequence& seq, const model::SystemParams& params,
                               const model::ErrorRealization& err, const DecoherenceParams& dec,
                               const IntegratorConfig& cfg) {
  seq.validate();
  dec.validate();
  ComplexMatrix channel = ComplexMatrix::identity(16);
  ComplexMatrix tmp(16);

  if (cfg.mode == Mode::rwa) {
    for (const auto& s : seq.segments) {
      const ComplexMatrix l = lindblad_generator(segment_hamiltonian_rwa(s, err), dec);
      qalg::multiply_into(segment_superoperator_rwa(l, s.duration), channel, tmp);
      std::swap(channel, tmp);
    }
    return channel;
  }

  const double step = resolve_step(cfg, params);
  const model::ErrorRealization zeeman = err.zeeman_part();
  const std::size_t chunk = static_cast<std::size_t>(std::max(1.0, std::floor(kDephasingSplitInterval / step)));
  double t = 0.0;
  for (const auto& s : seq.segments) {
    const std::size_t n = step_count(s.duration, step);
    const double h = s.duration / static_cast<double>(n);
    UnitaryStepper stepper(params, s, zeeman);
    for (std::size_t done = 0; done < n;) {
      const std::size_t m = std::min(chunk, n - done);
      Mat4 u = identity4();
      stepper.advance(t + static_cast<double>(done) * h, h, m, u);
      const double drift = unitarity_defect4(u);
      if (!std::isfinite(drift) || drift > kDriftFatal) {
        throw NumericalError("full Lindblad propagation lost unitarity");
      }
      const double dt = static_cast<double>(m) * h;
      ComplexMatrix sup = unitary_superoperator(to_matrix(u));
      if (dec.active()) {
        std::array<double, 16> half{};
        for (std::size_t a = 0; a < 16; ++a) half[a] = std::exp(-0.5 * dt * dephasing_rate(dec, a / 4, a % 4));
        for (std::size_t a = 0; a < 16; ++a) {
          for (std::size_t b = 0; b < 16; ++b) sup(a, b) *= half[a] * half[b];
        }
      }
      qalg::multiply_into(sup, channel, tmp);
      std::swap(channel, tmp);
      done += m;
    }
    t += s.duration;
  }
  if (!channel.is_finite()) throw NumericalError("Lindblad channel is not finite");
  return channel;
}

ComplexMatrix apply_channel(const ComplexMatrix& channel, const ComplexMatrix& rho) {
  if (channel.dim() != 16 || rho.dim() != 4) throw DimensionError("apply_channel: expected 16x16 and 4x4");
  const std::vector<Complex> out = qalg::apply(channel, rho.data());
  return ComplexMatrix(4, out);
}

ComplexMatrix lindblad_propagate(const schemes::PulseSequence& seq, const model::SystemParams& params,
                                 const model::ErrorRealization& err, const DecoherenceParams& dec,
                                 const ComplexMatrix& rho0, const IntegratorConfig& cfg) {
  require_density_matrix(rho0);
  return apply_channel(lindblad_channel(seq, params, err, dec, cfg), rho0);
}

}  // namespace riswap::dynamics
