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

#include "riswap/metrics.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "riswap/errors.hpp"

namespace riswap::metrics {

namespace {

constexpr double kUnitaryTolerance = 1e-8;

double clamp_unit(double f) { return std::clamp(f, 0.0, 1.0); }

void require_unitary(const ComplexMatrix& u, const char* what) {
  if (u.dim() == 0 || qalg::unitarity_defect(u) > kUnitaryTolerance * std::sqrt(static_cast<double>(u.dim()))) {
    throw ValidationError(std::string(what) + " must be unitary");
  }
}

double ket_norm(const Ket& k) { return std::sqrt(std::abs(qalg::inner(k, k))); }

}  // namespace

InputEnsemble InputEnsemble::from_kets(std::vector<Ket> kets) {
  if (kets.empty()) throw ValidationError("input ensemble is empty");
  InputEnsemble e;
  for (auto& k : kets) {
    const double n = ket_norm(k);
    if (!(n > 0.0)) throw ValidationError("input ket has zero norm");
    for (auto& z : k) z /= n;
    e.states_.push_back(ComplexMatrix::outer(k));
  }
  e.kets_ = std::move(kets);
  return e;
}

InputEnsemble InputEnsemble::from_density_matrices(std::vector<ComplexMatrix> states) {
  if (states.empty()) throw ValidationError("input ensemble is empty");
  for (const auto& s : states) qalg::validate_density_matrix(s);
  InputEnsemble e;
  e.states_ = std::move(states);
  return e;
}

const InputEnsemble& InputEnsemble::stabilizer_products() {
  static const InputEnsemble ensemble = [] {
    const double r = 1.0 / std::sqrt(2.0);
    const std::vector<std::array<Complex, 2>> single = {
        {1.0, 0.0}, {0.0, 1.0}, {r, r}, {r, -r}, {r, Complex(0.0, r)}, {r, Complex(0.0, -r)}};
    std::vector<Ket> kets;
    for (const auto& q2 : single) {
      for (const auto& q1 : single) {
        // index = q1 + 2·q2
        kets.push_back({q1[0] * q2[0], q1[1] * q2[0], q1[0] * q2[1], q1[1] * q2[1]});
      }
    }
    return from_kets(std::move(kets));
  }();
  return ensemble;
}

double state_fidelity(const ComplexMatrix& rho, const ComplexMatrix& sigma) {
  if (rho.dim() != sigma.dim()) throw DimensionError("state_fidelity: dimension mismatch");
  qalg::validate_density_matrix(rho);
  qalg::validate_density_matrix(sigma);
  const ComplexMatrix root = qalg::psd_sqrt(qalg::symmetrize(rho));
  const ComplexMatrix inner = qalg::symmetrize(root * sigma * root);
  const qalg::HermitianEig eig = qalg::eigh(inner);
  double top = 0.0;
  for (double lambda : eig.eigenvalues) top = std::max(top, std::abs(lambda));
  double f = 0.0;
  for (double lambda : eig.eigenvalues) {
    if (lambda > 1e-12 * top) f += std::sqrt(lambda);
  }
  return clamp_unit(f);
}

double pure_state_fidelity(const ComplexMatrix& rho, const Ket& phi) {
  if (rho.dim() != phi.size()) throw DimensionError("pure_state_fidelity: dimension mismatch");
  const std::vector<Complex> rp = qalg::apply(rho, phi);
  return clamp_unit(std::sqrt(std::max(0.0, qalg::inner(phi, rp).real())));
}

double average_gate_fidelity(const ChannelEvaluator& apply, const ComplexMatrix& target,
                             const InputEnsemble& ensemble) {
  require_unitary(target, "target");
  const ComplexMatrix target_dag = target.adjoint();
  double sum = 0.0;
  for (std::size_t i = 0; i < ensemble.size(); ++i) {
    const ComplexMatrix out = apply(ensemble.states()[i]);
    if (ensemble.kets()) {
      sum += pure_state_fidelity(out, qalg::apply(target, (*ensemble.kets())[i]));
    } else {
      sum += state_fidelity(out, target * ensemble.states()[i] * target_dag);
    }
  }
  return sum / static_cast<double>(ensemble.size());
}

double average_gate_fidelity_unitary(const ComplexMatrix& u, const ComplexMatrix& target,
                                     const InputEnsemble& ensemble) {
  require_unitary(target, "target");
  if (u.dim() != target.dim()) throw DimensionError("average_gate_fidelity_unitary: dimension mismatch");
  if (!ensemble.kets()) {
    const ComplexMatrix u_dag = u.adjoint();
    return average_gate_fidelity([&](const ComplexMatrix& rho) { return u * rho * u_dag; }, target, ensemble);
  }
  const ComplexMatrix v = target.adjoint() * u;
  double sum = 0.0;
  for (const auto& k : *ensemble.kets()) {
    sum += std::abs(qalg::inner(k, qalg::apply(v, k)));
  }
  return clamp_unit(sum / static_cast<double>(ensemble.size()));
}

double average_gate_fidelity_channel(const ComplexMatrix& channel, const ComplexMatrix& target,
                                     const InputEnsemble& ensemble) {
  const std::size_t d = target.dim();
  if (channel.dim() != d * d) throw DimensionError("average_gate_fidelity_channel: dimension mismatch");
  return average_gate_fidelity(
      [&](const ComplexMatrix& rho) { return ComplexMatrix(d, qalg::apply(channel, rho.data())); }, target,
      ensemble);
}

double infidelity(double f) {
  if (!(f >= 0.0 && f <= 1.0)) throw DomainError("infidelity: fidelity must lie in [0, 1]");
  return 1.0 - f;
}

}  // namespace riswap::metrics
