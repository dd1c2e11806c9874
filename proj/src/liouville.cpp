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

#include "dissipctl/liouville.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

#include <Eigen/SVD>
#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>

#include "dissipctl/tolerances.hpp"

namespace dissipctl {

Vector vectorize(const Matrix& m) {
  return Eigen::Map<const Vector>(m.data(), m.size());
}

Matrix unvectorize(const Vector& v, int n) {
  if (v.size() != static_cast<Eigen::Index>(n) * n) {
    throw std::invalid_argument("unvectorize: length is not n^2");
  }
  return Eigen::Map<const Matrix>(v.data(), n, n);
}

Liouvillian build_liouvillian(const Operator& h, const std::vector<Channel>& channels) {
  const int n = h.dim();
  if (h.hermiticity_defect() > tol::hermitian) {
    throw std::invalid_argument("build_liouvillian: Hamiltonian is not Hermitian");
  }
  const Matrix id = Matrix::Identity(n, n);
  Matrix a = Complex(0.0, -1.0) *
             (Eigen::kroneckerProduct(id, h.mat) -
              Eigen::kroneckerProduct(h.mat.transpose(), id));
  for (const auto& ch : channels) {
    if (ch.op.dim() != n) {
      throw std::invalid_argument("build_liouvillian: channel dimension mismatch");
    }
    if (ch.strength < 0.0) {
      throw std::invalid_argument("build_liouvillian: negative channel strength");
    }
    const Matrix& l = ch.op.mat;
    const Matrix ldl = l.adjoint() * l;
    a += ch.strength *
         (Eigen::kroneckerProduct(l.conjugate(), l).eval() -
          0.5 * Eigen::kroneckerProduct(id, ldl) -
          0.5 * Eigen::kroneckerProduct(ldl.transpose(), id));
  }
  Liouvillian out;
  out.dim = n;
  out.a = std::move(a);
  out.hamiltonian = h;
  out.channels = channels;
  return out;
}

namespace {

void require_state(const Operator& rho) {
  if (rho.hermiticity_defect() > tol::state_trace) {
    throw std::invalid_argument("state is not Hermitian");
  }
  if (std::abs(rho.mat.trace().real() - 1.0) > tol::state_trace ||
      std::abs(rho.mat.trace().imag()) > tol::state_trace) {
    throw std::invalid_argument("state trace is not 1");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(
      Matrix(0.5 * (rho.mat + rho.mat.adjoint())), Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -tol::state_psd) {
    throw std::invalid_argument("state has a negative eigenvalue");
  }
}

Matrix hermitize(const Matrix& m) { return 0.5 * (m + m.adjoint()); }

}  // namespace

Trajectory evolve(const Liouvillian& l, const Operator& rho0,
                  const std::vector<double>& times,
                  const std::optional<Vector>& target) {
  const int n = l.dim;
  if (rho0.dim() != n) {
    throw std::invalid_argument("evolve: state dimension mismatch");
  }
  require_state(rho0);
  if (times.empty()) {
    throw std::invalid_argument("evolve: empty time grid");
  }
  for (std::size_t k = 0; k < times.size(); ++k) {
    if (times[k] < 0.0 || (k > 0 && times[k] <= times[k - 1])) {
      throw std::invalid_argument("evolve: times must be non-negative and ascending");
    }
  }
  if (target && std::abs(target->norm() - 1.0) > tol::state_trace) {
    throw std::invalid_argument("evolve: target vector is not normalized");
  }

  Trajectory tr;
  tr.times = times;
  tr.states.reserve(times.size());
  tr.fidelity.reserve(times.size());
  tr.trace_re.reserve(times.size());
  tr.purity.reserve(times.size());

  // Steps repeat on uniform grids; exponentials are keyed by dt.
  std::map<double, Matrix> props;
  auto propagator = [&](double dt) -> const Matrix& {
    auto it = props.find(dt);
    if (it == props.end()) {
      it = props.emplace(dt, Matrix((l.a * dt).exp())).first;
    }
    return it->second;
  };

  Vector v = vectorize(rho0.mat);
  double t_prev = 0.0;
  for (double t : times) {
    if (t > t_prev) {
      v = propagator(t - t_prev) * v;
      t_prev = t;
    }
    Matrix rho = hermitize(unvectorize(v, n));
    double fid;
    if (target) {
      fid = (target->adjoint() * rho * (*target)).value().real();
    } else {
      fid = (rho0.mat * rho).trace().real();
    }
    tr.fidelity.push_back(fid);
    tr.trace_re.push_back(rho.trace().real());
    tr.purity.push_back((rho * rho).trace().real());
    tr.states.push_back(std::move(rho));
  }
  return tr;
}

SteadyStateResult steady_state(const Liouvillian& l) {
  Eigen::JacobiSVD<Matrix> svd(l.a, Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  const double thresh = sv.size() > 0 ? sv(0) * tol::kernel_rel : 0.0;
  int kdim = 0;
  for (Eigen::Index k = 0; k < sv.size(); ++k) {
    if (sv(k) <= thresh) ++kdim;
  }
  if (kdim == 0) {
    throw std::runtime_error("steady_state: generator has an empty kernel");
  }

  SteadyStateResult out;
  out.kernel_dimension = kdim;
  for (Eigen::Index k = sv.size() - kdim; k < sv.size(); ++k) {
    out.kernel_basis.push_back(unvectorize(svd.matrixV().col(k), l.dim));
  }
  if (kdim == 1) {
    Matrix rho = hermitize(out.kernel_basis.front());
    const double trace = rho.trace().real();
    if (std::abs(trace) > tol::kernel_rel) {
      rho /= trace;
      Eigen::SelfAdjointEigenSolver<Matrix> es(rho, Eigen::EigenvaluesOnly);
      if (es.eigenvalues().minCoeff() >= -tol::state_psd) {
        out.unique = true;
        std::vector<int> dims{l.dim};
        out.state = Operator(dims, rho);
      }
    }
  }
  return out;
}

Matrix asymptotic_state(const Liouvillian& l, const Operator& rho0) {
  require_state(rho0);
  if (rho0.dim() != l.dim) {
    throw std::invalid_argument("asymptotic_state: state dimension mismatch");
  }
  // The limit of e^{At} is the spectral projector onto ker(A) along range(A):
  // with right kernel basis K and left kernel basis W it reads K(W^H K)^{-1}W^H.
  // Rotating peripheral modes sit inside range(A) and are projected out, so a
  // non-decaying oscillation yields the time-averaged state.
  Eigen::JacobiSVD<Matrix> svd(l.a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) < 1e-300) {
    return hermitize(rho0.mat);
  }
  const double thresh = sv(0) * tol::kernel_rel;
  Eigen::Index kdim = 0;
  for (Eigen::Index k = 0; k < sv.size(); ++k) {
    if (sv(k) <= thresh) ++kdim;
  }
  if (kdim == 0) {
    throw std::runtime_error("asymptotic_state: generator has an empty kernel");
  }
  const Matrix k_basis = svd.matrixV().rightCols(kdim);
  const Matrix w_basis = svd.matrixU().rightCols(kdim);
  Eigen::FullPivLU<Matrix> lu(w_basis.adjoint() * k_basis);
  if (lu.rank() < kdim) {
    throw std::runtime_error("asymptotic_state: zero eigenvalue of the generator is defective");
  }
  const Vector v = k_basis * lu.solve(w_basis.adjoint() * vectorize(rho0.mat));
  const double residual = (l.a * v).cwiseAbs().maxCoeff();
  if (residual > tol::decay_residual) {
    throw std::runtime_error("asymptotic_state: projected limit is not a fixed point");
  }
  return hermitize(unvectorize(v, l.dim));
}

}  // namespace dissipctl
