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

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

/// Dense complex linear algebra for the small matrices (d <= 16) that show up
/// in two-qubit dynamics: Hamiltonians, propagators, density matrices and
/// vectorized superoperators all share the same representation.
namespace riswap::qalg {

using Complex = std::complex<double>;

inline constexpr Complex kI{0.0, 1.0};

/// Square matrix with row-major storage.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;

  /// Zero matrix of the given dimension.
  explicit ComplexMatrix(std::size_t dim);

  /// Row-major entries; throws DimensionError unless entries.size() == dim².
  ComplexMatrix(std::size_t dim, std::initializer_list<Complex> entries);
  ComplexMatrix(std::size_t dim, std::vector<Complex> entries);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(std::span<const double> values);
  static ComplexMatrix diagonal(std::span<const Complex> values);
  /// |ψ⟩⟨ψ| for a (not necessarily normalized) vector.
  static ComplexMatrix outer(std::span<const Complex> ket);

  std::size_t dim() const { return dim_; }
  bool empty() const { return dim_ == 0; }

  Complex& operator()(std::size_t row, std::size_t col) { return data_[row * dim_ + col]; }
  const Complex& operator()(std::size_t row, std::size_t col) const {
    return data_[row * dim_ + col];
  }

  std::span<Complex> data() { return data_; }
  std::span<const Complex> data() const { return data_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  Complex trace() const;
  double frobenius_norm() const;
  bool is_finite() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scale);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex s, ComplexMatrix a);
ComplexMatrix operator*(ComplexMatrix a, Complex s);

/// out = a * b without allocating when out already has the right size.
/// out must not alias a or b.
void multiply_into(const ComplexMatrix& a, const ComplexMatrix& b, ComplexMatrix& out);

/// Matrix-vector product.
std::vector<Complex> apply(const ComplexMatrix& m, std::span<const Complex> v);

/// ⟨a|b⟩ with the first argument conjugated.
Complex inner(std::span<const Complex> a, std::span<const Complex> b);

/// Kronecker product a ⊗ b; the row index of a is the most significant.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// ‖h − h†‖_F / ‖h‖_F (0 for the zero matrix).
double hermiticity_defect(const ComplexMatrix& h);

/// (h + h†)/2.
ComplexMatrix symmetrize(const ComplexMatrix& h);

/// ‖u†u − I‖_F.
double unitarity_defect(const ComplexMatrix& u);

/// min over φ of ‖u − e^{iφ} v‖_F.
double phase_aligned_distance(const ComplexMatrix& u, const ComplexMatrix& v);

/// Relative tolerance used to accept a matrix as Hermitian.
inline constexpr double kHermitianTolerance = 1e-10;

struct HermitianEig {
  std::vector<double> eigenvalues;  // ascending
  ComplexMatrix eigenvectors;       // columns, unitary
};

/// Cyclic Jacobi eigensolver. Input must be Hermitian to kHermitianTolerance
/// (ValidationError otherwise); it is symmetrized before the sweeps.
HermitianEig eigh(const ComplexMatrix& h);

/// exp(−i h t) for Hermitian h, via the eigendecomposition.
ComplexMatrix expm_hermitian_prop(const ComplexMatrix& h, double t);

/// Principal square root of a Hermitian PSD matrix. Eigenvalues down to
/// −1e-10 are clamped to zero; anything more negative raises NotPsdError.
ComplexMatrix psd_sqrt(const ComplexMatrix& m);

/// Closest unitary in Frobenius norm: m (m†m)^{-1/2}.
ComplexMatrix polar_unitary(const ComplexMatrix& m);

/// Throws ValidationError unless rho is Hermitian, has unit trace and no
/// eigenvalue below −tolerance (trace and Hermiticity checked to tolerance).
void validate_density_matrix(const ComplexMatrix& rho, double tolerance = 1e-10);

}  // namespace riswap::qalg
