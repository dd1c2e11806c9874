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

#include "dissipctl/operator.hpp"

#include <numeric>
#include <stdexcept>

#include <unsupported/Eigen/KroneckerProduct>

namespace dissipctl {

namespace {

int product_of(const std::vector<int>& dims) {
  int n = 1;
  for (int d : dims) {
    if (d < 1) throw std::invalid_argument("operator dims must be positive");
    n *= d;
  }
  return n;
}

void require_same_dims(const Operator& a, const Operator& b, const char* what) {
  if (a.dims != b.dims) {
    throw std::invalid_argument(std::string(what) + ": operator dims mismatch");
  }
}

}  // namespace

Operator::Operator(std::vector<int> dims_, Matrix mat_)
    : dims(std::move(dims_)), mat(std::move(mat_)) {
  const int n = product_of(dims);
  if (mat.rows() != n || mat.cols() != n) {
    throw std::invalid_argument("operator matrix shape does not match dims");
  }
}

Operator Operator::identity(std::vector<int> dims) {
  const int n = product_of(dims);
  return Operator(std::move(dims), Matrix::Identity(n, n));
}

Operator Operator::zero(std::vector<int> dims) {
  const int n = product_of(dims);
  return Operator(std::move(dims), Matrix::Zero(n, n));
}

Operator Operator::adjoint() const { return Operator(dims, mat.adjoint()); }

double Operator::hermiticity_defect() const {
  return (mat - mat.adjoint()).cwiseAbs().maxCoeff();
}

double Operator::unitarity_defect() const {
  const int n = dim();
  return (mat.adjoint() * mat - Matrix::Identity(n, n)).cwiseAbs().maxCoeff();
}

bool Operator::is_hermitian(double tol) const { return hermiticity_defect() <= tol; }

bool Operator::is_unitary(double tol) const { return unitarity_defect() <= tol; }

Operator operator+(const Operator& a, const Operator& b) {
  require_same_dims(a, b, "operator+");
  return Operator(a.dims, a.mat + b.mat);
}

Operator operator-(const Operator& a, const Operator& b) {
  require_same_dims(a, b, "operator-");
  return Operator(a.dims, a.mat - b.mat);
}

Operator operator*(const Operator& a, const Operator& b) {
  require_same_dims(a, b, "operator*");
  return Operator(a.dims, a.mat * b.mat);
}

Operator operator*(Complex scalar, const Operator& a) {
  return Operator(a.dims, scalar * a.mat);
}

Operator operator*(double scalar, const Operator& a) {
  return Operator(a.dims, scalar * a.mat);
}

double max_abs_difference(const Operator& a, const Operator& b) {
  require_same_dims(a, b, "max_abs_difference");
  return (a.mat - b.mat).cwiseAbs().maxCoeff();
}

Operator pauli_string(std::string_view spec) {
  if (spec.empty()) throw std::invalid_argument("pauli_string: empty spec");
  Matrix out = Matrix::Ones(1, 1);
  Matrix factor(2, 2);
  for (char c : spec) {
    switch (c) {
      case 'I':
        factor << 1, 0, 0, 1;
        break;
      case 'X':
        factor << 0, 1, 1, 0;
        break;
      case 'Y':
        factor << 0, Complex(0, -1), Complex(0, 1), 0;
        break;
      case 'Z':
        factor << 1, 0, 0, -1;
        break;
      default:
        throw std::invalid_argument(std::string("pauli_string: invalid character '") +
                                    c + "' (expected I, X, Y, or Z)");
    }
    out = Eigen::kroneckerProduct(out, factor).eval();
  }
  return Operator(std::vector<int>(spec.size(), 2), std::move(out));
}

Operator kron(const Operator& a, const Operator& b) {
  std::vector<int> dims = a.dims;
  dims.insert(dims.end(), b.dims.begin(), b.dims.end());
  return Operator(std::move(dims), Eigen::kroneckerProduct(a.mat, b.mat).eval());
}

Operator commutator(const Operator& a, const Operator& b) {
  require_same_dims(a, b, "commutator");
  return Operator(a.dims, a.mat * b.mat - b.mat * a.mat);
}

Spectrum spectral_decompose(const Operator& a) {
  const double defect = a.hermiticity_defect();
  if (defect > tol::hermitian) {
    throw std::invalid_argument("spectral_decompose: operator not Hermitian (defect " +
                                std::to_string(defect) + ")");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(a.mat);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("spectral_decompose: eigensolver failed to converge");
  }
  return Spectrum{solver.eigenvalues(), solver.eigenvectors()};
}

SemidefiniteCertificate is_negative_semidefinite(const Operator& a, double tol) {
  const Spectrum s = spectral_decompose(a);
  const Eigen::Index last = s.eigenvalues.size() - 1;
  SemidefiniteCertificate cert;
  cert.worst_eigenvalue = s.eigenvalues(last);
  cert.witness = s.eigenvectors.col(last);
  cert.verdict = cert.worst_eigenvalue <= tol;
  return cert;
}

}  // namespace dissipctl
