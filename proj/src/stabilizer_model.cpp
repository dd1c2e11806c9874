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

#include "dissipctl/stabilizer_model.hpp"

#include <stdexcept>

namespace dissipctl {

StabilizerModel build_model(int n_qubits, const std::vector<std::string>& specs) {
  if (n_qubits < 1) throw std::invalid_argument("build_model: n_qubits must be >= 1");

  StabilizerModel m;
  m.n_qubits = n_qubits;
  m.stabilizer_specs = specs;

  const std::vector<int> dims(static_cast<std::size_t>(n_qubits), 2);
  const Operator id = Operator::identity(dims);

  for (const std::string& spec : specs) {
    if (static_cast<int>(spec.size()) != n_qubits) {
      throw std::invalid_argument("build_model: spec '" + spec + "' has length " +
                                  std::to_string(spec.size()) + ", expected " +
                                  std::to_string(n_qubits));
    }
    Operator s = pauli_string(spec);
    if (!s.is_hermitian()) {
      throw std::invalid_argument("build_model: spec '" + spec + "' is not Hermitian");
    }
    const double involution_defect = max_abs_difference(s * s, id);
    if (involution_defect > tol::eigen) {
      throw std::invalid_argument("build_model: spec '" + spec +
                                  "' is not an involution (defect " +
                                  std::to_string(involution_defect) + ")");
    }
    m.stabilizers.push_back(s);
    m.penalties.push_back(0.5 * (id - s));
  }

  for (std::size_t i = 0; i < m.stabilizers.size(); ++i) {
    for (std::size_t j = i + 1; j < m.stabilizers.size(); ++j) {
      const double defect =
          commutator(m.stabilizers[i], m.stabilizers[j]).mat.cwiseAbs().maxCoeff();
      if (defect > tol::commutation) {
        throw std::invalid_argument(
            "build_model: stabilizers " + std::to_string(i + 1) + " and " +
            std::to_string(j + 1) + " do not commute (defect " +
            std::to_string(defect) + ")");
      }
    }
  }

  m.total_penalty = Operator::zero(dims);
  m.hamiltonian = Operator::zero(dims);
  for (const Operator& v : m.penalties) {
    m.total_penalty = m.total_penalty + v;
    const Spectrum s = spectral_decompose(v);
    const double g = -s.eigenvalues(0);
    m.offsets.push_back(g);
    m.hamiltonian = m.hamiltonian + (v - g * id);
  }
  if (m.penalties.empty()) {
    // Degenerate but legal: V = 0 and the whole space is ground.
    m.ground_basis = Matrix::Identity(id.dim(), id.dim());
    return m;
  }

  m.ground_basis = ground_space(m.total_penalty);
  return m;
}

AssumptionReport verify_assumptions(const StabilizerModel& model) {
  AssumptionReport report;

  {
    AssumptionClause c;
    c.name = "penalties are projectors";
    c.residual = 0.0;
    c.pass = true;
    for (std::size_t i = 0; i < model.penalties.size(); ++i) {
      const Operator& v = model.penalties[i];
      const double r = max_abs_difference(v * v, v);
      if (r > c.residual) {
        c.residual = r;
        c.detail = "worst index " + std::to_string(i + 1);
      }
    }
    c.pass = c.residual <= tol::eigen;
    report.clauses.push_back(std::move(c));
  }

  {
    AssumptionClause c;
    c.name = "penalties commute pairwise";
    c.residual = 0.0;
    c.pass = true;
    for (std::size_t i = 0; i < model.penalties.size(); ++i) {
      for (std::size_t j = i + 1; j < model.penalties.size(); ++j) {
        const double r =
            commutator(model.penalties[i], model.penalties[j]).mat.cwiseAbs().maxCoeff();
        if (r > c.residual) {
          c.residual = r;
          c.detail = "worst pair (" + std::to_string(i + 1) + ", " +
                     std::to_string(j + 1) + ")";
        }
      }
    }
    c.pass = c.residual <= tol::commutation;
    report.clauses.push_back(std::move(c));
  }

  {
    AssumptionClause c;
    c.name = "hamiltonian matches penalty decomposition";
    if (model.penalties.empty()) {
      c.residual = 0.0;
      c.pass = true;
    } else {
      Operator expected = Operator::zero(model.hamiltonian.dims);
      const Operator id = Operator::identity(model.hamiltonian.dims);
      for (std::size_t i = 0; i < model.penalties.size(); ++i) {
        expected = expected + (model.penalties[i] - model.offsets[i] * id);
      }
      c.residual = max_abs_difference(model.hamiltonian, expected);
      c.pass = c.residual <= tol::eigen;
    }
    report.clauses.push_back(std::move(c));
  }

  {
    AssumptionClause c;
    c.name = "ground basis annihilated by total penalty";
    if (model.ground_basis.cols() == 0) {
      c.pass = false;
      c.detail = "ground basis is empty";
    } else {
      c.residual =
          (model.total_penalty.mat * model.ground_basis).cwiseAbs().maxCoeff();
      c.pass = c.residual <= tol::ground;
    }
    report.clauses.push_back(std::move(c));
  }

  report.pass = true;
  for (const AssumptionClause& c : report.clauses) report.pass = report.pass && c.pass;
  return report;
}

Matrix ground_space(const Operator& v, double tol) {
  const Spectrum s = spectral_decompose(v);
  if (s.eigenvalues(0) < -tol) {
    throw std::invalid_argument("ground_space: operator is not PSD (min eigenvalue " +
                                std::to_string(s.eigenvalues(0)) + ")");
  }
  Eigen::Index count = 0;
  while (count < s.eigenvalues.size() && s.eigenvalues(count) <= tol) ++count;
  if (count == 0) {
    throw std::invalid_argument("ground_space: empty kernel (min eigenvalue " +
                                std::to_string(s.eigenvalues(0)) + ")");
  }
  // Columns of a SelfAdjointEigenSolver are already orthonormal.
  return s.eigenvectors.leftCols(count);
}

}  // namespace dissipctl
