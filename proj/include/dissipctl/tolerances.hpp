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

#ifndef DISSIPCTL_TOLERANCES_HPP
#define DISSIPCTL_TOLERANCES_HPP

namespace dissipctl::tol {

// Structural tolerances. Operators are tagged against these; every check that
// consumes a tag re-validates against the same constant.
inline constexpr double hermitian = 1e-10;
inline constexpr double unitary = 1e-10;
inline constexpr double eigen = 1e-10;

// Default slack for semidefiniteness verdicts.
inline constexpr double semidefinite = 1e-9;

// Kernel membership for ground spaces and Liouvillian null spaces (relative
// to the largest singular value for the latter).
inline constexpr double ground = 1e-9;
inline constexpr double kernel_rel = 1e-9;

// Operator commutation threshold used when partitioning penalty terms.
inline constexpr double commutation = 1e-10;

// Error-to-control matching distance (max-norm).
inline constexpr double match = 1e-10;

// Residual thresholds for the error-correction reports.
inline constexpr double invariance_residual = 1e-9;
inline constexpr double decay_residual = 1e-8;
inline constexpr double syndrome_residual = 1e-9;

// Density-matrix admission checks for the simulator.
inline constexpr double state_trace = 1e-9;
inline constexpr double state_psd = 1e-9;
inline constexpr double ground_membership = 1e-6;

}  // namespace dissipctl::tol

#endif  // DISSIPCTL_TOLERANCES_HPP
