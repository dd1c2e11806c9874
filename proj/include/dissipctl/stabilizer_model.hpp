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

#ifndef DISSIPCTL_STABILIZER_MODEL_HPP
#define DISSIPCTL_STABILIZER_MODEL_HPP

#include <string>
#include <vector>

#include "dissipctl/operator.hpp"

namespace dissipctl {

/// Frustration-free penalty model generated by a commuting set of Pauli
/// involutions. Each stabilizer S_i contributes the projector
/// V_i = (I - S_i)/2 onto its -1 eigenspace; the total penalty V = sum V_i
/// vanishes exactly on the joint +1 eigenspace (the ground space).
struct StabilizerModel {
  int n_qubits = 0;
  std::vector<std::string> stabilizer_specs;
  std::vector<Operator> stabilizers;  // S_i
  std::vector<Operator> penalties;    // V_i = (I - S_i)/2
  std::vector<double> offsets;        // g_i = -min eigenvalue of V_i
  Operator total_penalty;             // V = sum V_i
  Operator hamiltonian;               // H = sum (V_i - g_i I)
  Matrix ground_basis;                // orthonormal columns spanning ker(V)
};

/// Builds the model from Pauli strings. Throws std::invalid_argument when a
/// spec is not a Hermitian involution, when two stabilizers fail to commute
/// (the offending pair is named), or when the joint ground space is empty.
StabilizerModel build_model(int n_qubits, const std::vector<std::string>& specs);

struct AssumptionClause {
  std::string name;
  bool pass = false;
  double residual = 0.0;
  std::string detail;
};

struct AssumptionReport {
  std::vector<AssumptionClause> clauses;
  bool pass = false;
};

/// Re-derives the structural assumptions from the stored operators: each V_i
/// is a projector, all penalties commute pairwise, and the Hamiltonian matches
/// the penalty decomposition. An empty model passes vacuously.
AssumptionReport verify_assumptions(const StabilizerModel& model);

/// Orthonormal basis of the near-kernel of a Hermitian PSD operator
/// (eigenvalues <= tol). Throws std::invalid_argument when the operator has an
/// eigenvalue below -tol or when the kernel is empty.
Matrix ground_space(const Operator& v, double tol = tol::ground);

}  // namespace dissipctl

#endif  // DISSIPCTL_STABILIZER_MODEL_HPP
