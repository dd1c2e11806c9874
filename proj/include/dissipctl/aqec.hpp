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

#ifndef DISSIPCTL_AQEC_HPP
#define DISSIPCTL_AQEC_HPP

#include <string>
#include <vector>

#include "dissipctl/liouville.hpp"
#include "dissipctl/operator.hpp"
#include "dissipctl/stabilizer_model.hpp"
#include "dissipctl/synthesis.hpp"

namespace dissipctl {

struct ErrorOp {
  std::string label;
  Operator op;
};

struct ErrorSet {
  std::vector<ErrorOp> errors;
};

/// One ground-basis pair (p, q) left fixed by the control generator.
struct InvarianceRecord {
  int p = 0;
  int q = 0;
  double residual = 0.0;
  bool pass = false;
};

/// Least-squares fit of the relaxation rate for one (error, p, q) triple. The
/// corrupted dyad must decay back onto the code dyad at a single positive
/// rate; `residual` is what remains after subtracting the fitted mode.
struct DecayRecord {
  std::string error_label;
  int p = 0;
  int q = 0;
  double kappa = 0.0;
  double residual = 0.0;
  bool pass = false;
};

/// Projector bookkeeping for one matched (error, ground vector) pair: the
/// matched channel's projector must fix the corrupted vector and every other
/// channel's projector must kill it.
struct SyndromeRecord {
  std::string error_label;
  int control_index = 0;  // 0-based channel index the error matched
  int p = 0;
  double projection_residual = 0.0;
  double annihilation_residual = 0.0;
  bool pass = false;
};

struct AqecReport {
  std::vector<InvarianceRecord> invariance;
  std::vector<DecayRecord> decay;
  std::vector<SyndromeRecord> syndromes;
  std::vector<std::string> unmatched_errors;
  bool verdict = false;  // every produced record passes
};

/// Dissipation-only generator for a control set (no coherent term).
Liouvillian control_liouvillian(const StabilizerModel& model, const ControlSet& controls);

/// Control channels plus one bit-flip style noise channel per error operator,
/// each at strength gamma.
Liouvillian control_noise_liouvillian(const StabilizerModel& model,
                                      const ControlSet& controls,
                                      const ErrorSet& noise, double gamma);

/// Syndrome check. Errors are paired to channels by operator distance to the
/// channel unitary's adjoint (exact match within tol::match required); errors
/// with no partner are listed in `unmatched_errors` and produce no records.
/// Channel couplings must factor as unitary times projector.
AqecReport check_syndrome_conditions(const StabilizerModel& model,
                                     const ControlSet& controls,
                                     const ErrorSet& errors);

/// Invariance and decay check against a generator built from the candidate
/// controls alone. `ground_basis` columns are an orthonormal code basis.
AqecReport check_decay_conditions(const Liouvillian& liouvillian,
                                  const Matrix& ground_basis,
                                  const ErrorSet& errors);

struct CorrectionExperiment {
  Trajectory trajectory;  // fidelity column is against the pre-error state
  double initial_fidelity = 0.0;
  double final_fidelity = 0.0;
  bool renormalized_error = false;
};

/// Corrupts rho0 with the error, evolves under the control generator, and
/// reports fidelity to the original rho0. rho0 must lie in the code space
/// within tol::ground_membership. Non-unitary errors are renormalized and
/// flagged.
CorrectionExperiment run_error_correction_experiment(const StabilizerModel& model,
                                                     const Liouvillian& liouvillian,
                                                     const Operator& rho0,
                                                     const Operator& error,
                                                     double t_final, int samples);

struct ParallelNoiseExperiment {
  Trajectory trajectory;  // fidelity column is against rho0
  double steady_state_fidelity = 0.0;
  double code_space_population = 0.0;
  int kernel_dimension = 0;
};

/// Evolves the code state rho0 under controls and noise acting together. The
/// reported steady-state fidelity comes from the t -> infinity limit of this
/// initial state; when the generator kernel is degenerate that limit depends
/// on rho0, so the kernel dimension is reported alongside.
ParallelNoiseExperiment run_parallel_noise_experiment(const StabilizerModel& model,
                                                      const ControlSet& controls,
                                                      const ErrorSet& noise,
                                                      double gamma,
                                                      const Operator& rho0,
                                                      double t_final, int samples);

}  // namespace dissipctl

#endif  // DISSIPCTL_AQEC_HPP
