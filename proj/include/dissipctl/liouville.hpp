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

#ifndef DISSIPCTL_LIOUVILLE_HPP
#define DISSIPCTL_LIOUVILLE_HPP

#include <optional>
#include <string>
#include <vector>

#include "dissipctl/operator.hpp"

namespace dissipctl {

/// One dissipation channel: the operator enters the master equation with the
/// strength as a rate multiplier (equivalently sqrt(strength) folded into the
/// operator).
struct Channel {
  std::string label;
  Operator op;
  double strength = 1.0;
};

/// Vectorized generator of the master equation, column-stacking convention:
/// vec(B1 B2 B3) = (B3^T kron B1) vec(B2).
struct Liouvillian {
  int dim = 0;           // Hilbert-space dimension N; the matrix is N^2 x N^2
  Matrix a;
  Operator hamiltonian;
  std::vector<Channel> channels;
};

Vector vectorize(const Matrix& m);
Matrix unvectorize(const Vector& v, int n);

Liouvillian build_liouvillian(const Operator& h, const std::vector<Channel>& channels);

/// State history on a time grid with the standard scalar observables.
/// `fidelity` is against the target supplied to evolve (or the initial state
/// when none is given), `trace_re` the real part of the trace, `purity`
/// Re tr(rho^2).
struct Trajectory {
  std::vector<double> times;
  std::vector<Matrix> states;
  std::vector<double> fidelity;
  std::vector<double> trace_re;
  std::vector<double> purity;
};

/// Exact propagation by matrix exponential of A*dt (cached per distinct step).
/// rho0 must be Hermitian, PSD and unit-trace within the admission tolerances;
/// times must be non-negative and strictly ascending. States are
/// re-symmetrized before reporting. `target`, when given, must be a unit
/// vector; fidelity is then Re <target| rho |target>.
Trajectory evolve(const Liouvillian& l, const Operator& rho0,
                  const std::vector<double>& times,
                  const std::optional<Vector>& target = std::nullopt);

struct SteadyStateResult {
  bool unique = false;
  int kernel_dimension = 0;
  std::vector<Matrix> kernel_basis;  // unvectorized right-singular kernel vectors
  std::optional<Operator> state;     // unit-trace PSD element when unique
};

/// Null space of A by SVD (relative threshold tol::kernel_rel). A
/// one-dimensional kernel containing a unit-trace PSD element is returned as
/// the unique fixed state; anything else is reported as degenerate with the
/// kernel basis. Throws std::runtime_error if the kernel is empty, which a
/// trace-preserving generator cannot produce.
SteadyStateResult steady_state(const Liouvillian& l);

/// t -> infinity limit of e^{At} rho0 via the spectral projection onto ker(A)
/// along range(A). Purely rotating peripheral modes are projected out, so when
/// a pointwise limit does not exist this returns the time average. The result
/// is validated to lie in ker(A); throws std::runtime_error on a defective
/// zero eigenvalue.
Matrix asymptotic_state(const Liouvillian& l, const Operator& rho0);

}  // namespace dissipctl

#endif  // DISSIPCTL_LIOUVILLE_HPP
