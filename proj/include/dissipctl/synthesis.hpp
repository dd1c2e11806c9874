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

#ifndef DISSIPCTL_SYNTHESIS_HPP
#define DISSIPCTL_SYNTHESIS_HPP

#include <optional>
#include <string>
#include <vector>

#include "dissipctl/operator.hpp"
#include "dissipctl/stabilizer_model.hpp"

namespace dissipctl {

// Which inequality a certificate speaks for.
enum class StabilityCondition {
  local,               // single-penalty stabilization rate
  strong_scalability,  // cross terms do not lift other penalties
  extended_local,      // sandwiched product contraction per displaced factor
  lambda_bound,        // sum of dissipative products dominates a multiple of V
  global,              // total penalty contracts under the full generator
};

const char* to_string(StabilityCondition c);

/// Outcome of one semidefinite/rate check. `rate` carries the extracted decay
/// constant for rate-style conditions (local, lambda_bound, global) and is 0
/// for plain semidefiniteness checks. `worst_eigenvalue` is the deciding
/// eigenvalue and `witness` the vector attaining it.
struct StabilityCertificate {
  StabilityCondition condition = StabilityCondition::local;
  bool verdict = false;
  double rate = 0.0;
  double worst_eigenvalue = 0.0;
  Vector witness;
};

/// One engineered coupling channel. The coupling operator folds the strength
/// in: L = sqrt(strength) * unitary * dissipative_product.
struct ControlChannel {
  int index = 0;  // 0-based position of the penalty this channel protects
  Operator unitary;
  Operator dissipative_product;
  Operator coupling;
  double strength = 1.0;
};

struct ControlSet {
  std::vector<ControlChannel> channels;
};

/// Adjoint-channel dissipation term: L^dag X L - (L^dag L X + X L^dag L)/2.
Operator adjoint_dissipator(const Operator& x, const Operator& coupling);

/// Full adjoint generator: -i[X, H] plus the dissipation terms of every
/// coupling. Hermitian inputs give a Hermitian result.
Operator heisenberg_generator(const Operator& x, const Operator& h,
                              const std::vector<Operator>& couplings);

/// Generator of one penalty under a single coupling, Hamiltonian included.
Operator single_control_generator(const Operator& v_i, const Operator& h,
                                  const Operator& coupling);

/// Largest c such that sum_j (V U_j^dag V U_j V - V) <= -cV. The left-hand
/// side vanishes on ker(V), so c is the negated top eigenvalue of the
/// restriction to range(V). Verdict requires c > tol. Throws when V is not a
/// projector, a U_j is not unitary, or V = 0.
StabilityCertificate check_local_stabilization(const Operator& v_i,
                                               const std::vector<Operator>& unitaries,
                                               double tol = tol::semidefinite);

/// Swap-style Hermitian unitaries pairing one ground vector of a projector
/// with each excited eigenvector: U_j = |j><0| + |0><j| + sum_{n != j,0} |n><n|.
/// Jointly they stabilize the projector at unit rate. `ground_index` selects
/// which kernel vector plays |0>.
std::vector<Operator> construct_stabilizing_unitaries(const Operator& v_i,
                                                      int ground_index = 0);

/// Naive one-penalty-per-channel construction L_i = sqrt(kappa) U_i V_i.
ControlSet build_naive_controls(const StabilizerModel& model,
                                const std::vector<Operator>& unitaries,
                                double kappa = 1.0);

/// Per-protected-index cross-term audit: the summed action of every other
/// channel on V_i must be negative semidefinite.
struct ScalabilityEntry {
  int index = 0;
  Operator cross_term_sum;
  StabilityCertificate certificate;
};

std::vector<ScalabilityEntry> check_strong_scalability(const StabilizerModel& model,
                                                       const ControlSet& controls,
                                                       double tol = tol::semidefinite);

/// How one unitary splits the penalty set: factors it commutes with stay out
/// of the dissipative product, the rest are folded in.
struct PartitionEntry {
  int index = 0;                 // i, the protected penalty
  std::vector<int> commuting;    // j with [V_j, U_i] = 0
  std::vector<int> displaced;    // j with [V_j, U_i] != 0
  StabilityCertificate local_certificate;
  std::vector<StabilityCertificate> product_checks;  // one per displaced j
  std::vector<int> product_check_indices;            // the j each check covers
  bool self_commuting = false;   // V_i unexpectedly commutes with U_i
};

struct ControlConstruction {
  ControlSet controls;
  std::vector<PartitionEntry> partitions;
  StabilityCertificate lambda_certificate;
  double lambda = 0.0;
  double c_min = 0.0;
  bool verdict = false;
  std::vector<std::string> warnings;
};

/// Builds the scalable control set L_i = sqrt(kappa) U_i prod_d V_d^(i) and
/// certifies the construction: every displaced factor must contract under its
/// unitary, and the summed products must dominate lambda V on range(V) with
/// lambda > tol. Condition failures are reported through the verdict and
/// certificates; structural misuse (size mismatch, non-unitary U_i) throws.
ControlConstruction partition_and_build_controls(const StabilizerModel& model,
                                                 const std::vector<Operator>& unitaries,
                                                 double kappa = 1.0,
                                                 double commutation_tol = tol::commutation);

struct GlobalStabilityReport {
  StabilityCertificate certificate;
  double rate = 0.0;                    // directly computed c
  std::optional<double> analytic_bound; // c_min * lambda * kappa, if supplied
};

/// Largest c with G(V) <= -cV (generalized eigenproblem on range(V)), then a
/// full-space semidefiniteness validation of G(V) + cV. Verdict requires
/// c > tol and the validation to pass.
GlobalStabilityReport certify_global_stability(const StabilizerModel& model,
                                               const ControlSet& controls,
                                               std::optional<double> analytic_bound = std::nullopt,
                                               double tol = tol::semidefinite);

}  // namespace dissipctl

#endif  // DISSIPCTL_SYNTHESIS_HPP
