// Copyright 2026 The dissipctl Authors
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

#ifndef DISSIPCTL_OPERATOR_HPP
#define DISSIPCTL_OPERATOR_HPP

#include <complex>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "dissipctl/tolerances.hpp"

namespace dissipctl {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Dense operator on a finite tensor-product space. `dims` lists the local
/// dimensions with the leftmost tensor factor first; for qubit registers the
/// leftmost factor is qubit 1 and owns the most significant bit of the
/// computational-basis index.
struct Operator {
  std::vector<int> dims;
  Matrix mat;

  Operator() = default;
  Operator(std::vector<int> dims_, Matrix mat_);

  /// Total Hilbert-space dimension (product of `dims`).
  int dim() const { return static_cast<int>(mat.rows()); }

  static Operator identity(std::vector<int> dims);
  static Operator zero(std::vector<int> dims);

  Operator adjoint() const;

  double hermiticity_defect() const;  // max-norm of A - A^dagger
  double unitarity_defect() const;    // max-norm of A^dagger A - I

  bool is_hermitian(double tol = tol::hermitian) const;
  bool is_unitary(double tol = tol::unitary) const;
};

Operator operator+(const Operator& a, const Operator& b);
Operator operator-(const Operator& a, const Operator& b);
Operator operator*(const Operator& a, const Operator& b);
Operator operator*(Complex scalar, const Operator& a);
Operator operator*(double scalar, const Operator& a);

/// Max-norm of the entrywise difference. Requires matching dims.
double max_abs_difference(const Operator& a, const Operator& b);

/// Multi-qubit Pauli operator from a string over {I, X, Y, Z}; the first
/// character acts on qubit 1 (leftmost tensor factor).
Operator pauli_string(std::string_view spec);

/// Kronecker product; dims concatenate.
Operator kron(const Operator& a, const Operator& b);

/// [A, B] = AB - BA. Requires matching dims.
Operator commutator(const Operator& a, const Operator& b);

/// Eigensystem of a Hermitian operator, eigenvalues ascending, eigenvectors
/// orthonormal in the columns.
struct Spectrum {
  Eigen::VectorXd eigenvalues;
  Matrix eigenvectors;
};

/// Requires hermiticity within tol::hermitian; throws std::invalid_argument
/// with the measured defect otherwise.
Spectrum spectral_decompose(const Operator& a);

/// Certificate for A <= 0 up to `tol` on the worst eigenvalue.
struct SemidefiniteCertificate {
  bool verdict = false;
  double worst_eigenvalue = 0.0;
  Vector witness;
};

/// Hermitian negative-semidefiniteness test. Throws std::invalid_argument if
/// the input is not Hermitian within tol::hermitian.
SemidefiniteCertificate is_negative_semidefinite(const Operator& a,
                                                 double tol = tol::semidefinite);

}  // namespace dissipctl

#endif  // DISSIPCTL_OPERATOR_HPP
