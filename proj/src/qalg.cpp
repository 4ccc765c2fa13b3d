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

#include "riswap/qalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "riswap/errors.hpp"

namespace riswap::qalg {

namespace {

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
  if (a.dim() != b.dim()) {
    throw DimensionError(std::string(what) + ": dimension mismatch (" + std::to_string(a.dim()) +
                         " vs " + std::to_string(b.dim()) + ")");
  }
}

constexpr double kJacobiTolerance = 1e-13;
constexpr int kJacobiMaxSweeps = 100;
constexpr double kPsdTolerance = 1e-10;
constexpr double kRoundoffFloor = 1e-12;

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::initializer_list<Complex> entries)
    : ComplexMatrix(dim, std::vector<Complex>(entries)) {}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), data_(std::move(entries)) {
  if (data_.size() != dim * dim) {
    throw DimensionError("ComplexMatrix: expected " + std::to_string(dim * dim) + " entries, got " +
                         std::to_string(data_.size()));
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
  ComplexMatrix m(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> values) {
  ComplexMatrix m(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

ComplexMatrix ComplexMatrix::outer(std::span<const Complex> ket) {
  ComplexMatrix m(ket.size());
  for (std::size_t i = 0; i < ket.size(); ++i) {
    for (std::size_t j = 0; j < ket.size(); ++j) m(i, j) = ket[i] * std::conj(ket[j]);
  }
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix m(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) m(j, i) = std::conj((*this)(i, j));
  }
  return m;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix m(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) m(j, i) = (*this)(i, j);
  }
  return m;
}

Complex ComplexMatrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& z : data_) s += std::norm(z);
  return std::sqrt(s);
}

bool ComplexMatrix::is_finite() const {
  return std::all_of(data_.begin(), data_.end(), [](const Complex& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
  });
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require_same_dim(*this, other, "operator+=");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require_same_dim(*this, other, "operator-=");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
  for (auto& z : data_) z *= scale;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.dim());
  multiply_into(a, b, out);
  return out;
}

void multiply_into(const ComplexMatrix& a, const ComplexMatrix& b, ComplexMatrix& out) {
  require_same_dim(a, b, "multiply");
  const std::size_t n = a.dim();
  if (out.dim() != n) out = ComplexMatrix(n);
  auto o = out.data();
  std::fill(o.begin(), o.end(), Complex{});
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < n; ++j) o[i * n + j] += aik * b(k, j);
    }
  }
}

std::vector<Complex> apply(const ComplexMatrix& m, std::span<const Complex> v) {
  if (v.size() != m.dim()) throw DimensionError("apply: vector length does not match matrix");
  std::vector<Complex> out(v.size());
  for (std::size_t i = 0; i < m.dim(); ++i) {
    Complex s = 0.0;
    for (std::size_t j = 0; j < m.dim(); ++j) s += m(i, j) * v[j];
    out[i] = s;
  }
  return out;
}

Complex inner(std::span<const Complex> a, std::span<const Complex> b) {
  if (a.size() != b.size()) throw DimensionError("inner: length mismatch");
  Complex s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.empty() || b.empty()) throw DimensionError("kron: empty operand");
  const std::size_t na = a.dim();
  const std::size_t nb = b.dim();
  ComplexMatrix out(na * nb);
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < na; ++j) {
      const Complex aij = a(i, j);
      for (std::size_t k = 0; k < nb; ++k) {
        for (std::size_t l = 0; l < nb; ++l) out(i * nb + k, j * nb + l) = aij * b(k, l);
      }
    }
  }
  return out;
}

double hermiticity_defect(const ComplexMatrix& h) {
  const double norm = h.frobenius_norm();
  if (norm == 0.0) return 0.0;
  return (h - h.adjoint()).frobenius_norm() / norm;
}

ComplexMatrix symmetrize(const ComplexMatrix& h) {
  ComplexMatrix out = h + h.adjoint();
  out *= 0.5;
  return out;
}

double unitarity_defect(const ComplexMatrix& u) {
  return (u.adjoint() * u - ComplexMatrix::identity(u.dim())).frobenius_norm();
}

double phase_aligned_distance(const ComplexMatrix& u, const ComplexMatrix& v) {
  require_same_dim(u, v, "phase_aligned_distance");
  // ‖u − e^{iφ}v‖² = ‖u‖² + ‖v‖² − 2 Re(e^{−iφ} tr(v†u)), minimized at φ = arg tr(v†u).
  Complex overlap = 0.0;
  for (std::size_t i = 0; i < u.data().size(); ++i) overlap += std::conj(v.data()[i]) * u.data()[i];
  const Complex phase = std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : Complex(1.0);
  double sum = 0.0;
  for (std::size_t i = 0; i < u.data().size(); ++i) sum += std::norm(u.data()[i] - phase * v.data()[i]);
  return std::sqrt(sum);
}

HermitianEig eigh(const ComplexMatrix& h) {
  if (h.empty()) throw DimensionError("eigh: empty matrix");
  if (hermiticity_defect(h) > kHermitianTolerance) {
    throw ValidationError("eigh: matrix is not Hermitian");
  }
  const std::size_t n = h.dim();
  ComplexMatrix a = symmetrize(h);
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double scale = std::max(a.frobenius_norm(), 1e-300);
  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j) s += std::norm(a(i, j));
      }
    }
    return std::sqrt(s);
  };

  for (int sweep = 0; sweep < kJacobiMaxSweeps && off_norm() > kJacobiTolerance * scale; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double r = std::abs(apq);
        if (r <= 1e-300) continue;
        // Phase e^{iθ} makes the (p,q) pair real; then a real Givens rotation
        // annihilates it. Rotation J: J_pp = c, J_pq = s, J_qp = −s e^{−iθ},
        // J_qq = c e^{−iθ}; update a ← J† a J and v ← v J.
        const Complex phase = apq / r;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double tau = (aqq - app) / (2.0 * r);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const Complex phase_c = std::conj(phase);

        for (std::size_t k = 0; k < n; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = c * akp - s * phase_c * akq;
          a(k, q) = s * akp + c * phase_c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = c * apk - s * phase * aqk;
          a(q, k) = s * apk + c * phase * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();

        for (std::size_t k = 0; k < n; ++k) {
          const Complex vkp = v(k, p);
          const Complex vkq = v(k, q);
          v(k, p) = c * vkp - s * phase_c * vkq;
          v(k, q) = s * vkp + c * phase_c * vkq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

  HermitianEig result{std::vector<double>(n), ComplexMatrix(n)};
  for (std::size_t col = 0; col < n; ++col) {
    result.eigenvalues[col] = a(order[col], order[col]).real();
    for (std::size_t row = 0; row < n; ++row) result.eigenvectors(row, col) = v(row, order[col]);
  }
  return result;
}

namespace {

// v diag(f) v†
ComplexMatrix spectral_map(const HermitianEig& eig, std::span<const Complex> f) {
  const std::size_t n = eig.eigenvalues.size();
  const ComplexMatrix& v = eig.eigenvectors;
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Complex s = 0.0;
      for (std::size_t k = 0; k < n; ++k) s += v(i, k) * f[k] * std::conj(v(j, k));
      out(i, j) = s;
    }
  }
  return out;
}

}  // namespace

ComplexMatrix expm_hermitian_prop(const ComplexMatrix& h, double t) {
  if (!std::isfinite(t)) throw DomainError("expm_hermitian_prop: non-finite time");
  if (h.frobenius_norm() == 0.0) return ComplexMatrix::identity(h.dim());
  const HermitianEig eig = eigh(h);
  std::vector<Complex> phases(eig.eigenvalues.size());
  for (std::size_t k = 0; k < phases.size(); ++k) {
    phases[k] = std::polar(1.0, -eig.eigenvalues[k] * t);
  }
  return spectral_map(eig, phases);
}

ComplexMatrix psd_sqrt(const ComplexMatrix& m) {
  const HermitianEig eig = eigh(m);
  std::vector<Complex> roots(eig.eigenvalues.size());
  double top = 0.0;
  for (double lambda : eig.eigenvalues) top = std::max(top, std::abs(lambda));
  for (std::size_t k = 0; k < roots.size(); ++k) {
    const double lambda = eig.eigenvalues[k];
    if (lambda < -kPsdTolerance) {
      throw NotPsdError("psd_sqrt: eigenvalue " + std::to_string(lambda) + " below tolerance");
    }
    // Roundoff-level eigenvalues are zero; their square roots would not be.
    roots[k] = lambda <= kRoundoffFloor * top ? 0.0 : std::sqrt(lambda);
  }
  return spectral_map(eig, roots);
}

ComplexMatrix polar_unitary(const ComplexMatrix& m) {
  const HermitianEig eig = eigh(m.adjoint() * m);
  std::vector<Complex> inv_roots(eig.eigenvalues.size());
  for (std::size_t k = 0; k < inv_roots.size(); ++k) {
    if (eig.eigenvalues[k] <= 0.0) throw NumericalError("polar_unitary: singular matrix");
    inv_roots[k] = 1.0 / std::sqrt(eig.eigenvalues[k]);
  }
  return m * spectral_map(eig, inv_roots);
}

void validate_density_matrix(const ComplexMatrix& rho, double tolerance) {
  if (rho.empty()) throw ValidationError("density matrix is empty");
  if (!rho.is_finite()) throw ValidationError("density matrix has non-finite entries");
  const double scale = std::max(1.0, rho.frobenius_norm());
  if ((rho - rho.adjoint()).frobenius_norm() > tolerance * scale) {
    throw ValidationError("density matrix is not Hermitian");
  }
  const Complex tr = rho.trace();
  if (std::abs(tr - 1.0) > tolerance) throw ValidationError("density matrix trace is not 1");
  const HermitianEig eig = eigh(symmetrize(rho));
  if (eig.eigenvalues.front() < -tolerance) {
    throw ValidationError("density matrix has a negative eigenvalue");
  }
}

}  // namespace riswap::qalg
