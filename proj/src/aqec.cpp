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

#include "dissipctl/aqec.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dissipctl/tolerances.hpp"

namespace dissipctl {

namespace {

std::vector<double> time_grid(double t_final, int samples) {
  if (t_final < 0.0) {
    throw std::invalid_argument("experiment: t_final must be non-negative");
  }
  if (t_final == 0.0) {
    return {0.0};
  }
  if (samples < 2) {
    throw std::invalid_argument("experiment: at least 2 samples required");
  }
  std::vector<double> times(samples);
  for (int k = 0; k < samples; ++k) {
    times[k] = t_final * static_cast<double>(k) / (samples - 1);
  }
  return times;
}

}  // namespace

Liouvillian control_liouvillian(const StabilizerModel& model, const ControlSet& controls) {
  const int n = model.total_penalty.dim();
  std::vector<int> dims = model.total_penalty.dims;
  Operator h = Operator::zero(dims);
  std::vector<Channel> channels;
  channels.reserve(controls.channels.size());
  for (const auto& ch : controls.channels) {
    if (ch.coupling.dim() != n) {
      throw std::invalid_argument("control_liouvillian: channel dimension mismatch");
    }
    // Strength is already folded into the coupling operator.
    channels.push_back(Channel{"control_" + std::to_string(ch.index + 1), ch.coupling, 1.0});
  }
  return build_liouvillian(h, channels);
}

Liouvillian control_noise_liouvillian(const StabilizerModel& model,
                                      const ControlSet& controls,
                                      const ErrorSet& noise, double gamma) {
  if (gamma < 0.0) {
    throw std::invalid_argument("control_noise_liouvillian: gamma must be non-negative");
  }
  Liouvillian base = control_liouvillian(model, controls);
  std::vector<Channel> channels = base.channels;
  for (const auto& e : noise.errors) {
    if (e.op.dim() != base.dim) {
      throw std::invalid_argument("control_noise_liouvillian: noise dimension mismatch");
    }
    channels.push_back(Channel{"noise_" + e.label, e.op, gamma});
  }
  return build_liouvillian(base.hamiltonian, channels);
}

AqecReport check_syndrome_conditions(const StabilizerModel& model,
                                     const ControlSet& controls,
                                     const ErrorSet& errors) {
  const Matrix& basis = model.ground_basis;
  AqecReport report;
  report.verdict = true;

  for (const auto& ch : controls.channels) {
    if (ch.unitary.unitarity_defect() > tol::unitary) {
      throw std::invalid_argument("check_syndrome_conditions: channel unitary is not unitary");
    }
    const Matrix& p = ch.dissipative_product.mat;
    if ((p * p - p).cwiseAbs().maxCoeff() > tol::eigen ||
        ch.dissipative_product.hermiticity_defect() > tol::hermitian) {
      throw std::invalid_argument("check_syndrome_conditions: channel projector is not a projector");
    }
  }

  for (const auto& e : errors.errors) {
    int match = -1;
    for (std::size_t i = 0; i < controls.channels.size(); ++i) {
      const Matrix u_dag = controls.channels[i].unitary.mat.adjoint();
      if ((e.op.mat - u_dag).cwiseAbs().maxCoeff() <= tol::match) {
        match = static_cast<int>(i);
        break;
      }
    }
    if (match < 0) {
      report.unmatched_errors.push_back(e.label);
      continue;
    }
    const ControlChannel& matched = controls.channels[match];
    for (Eigen::Index col = 0; col < basis.cols(); ++col) {
      const Vector corrupted = e.op.mat * basis.col(col);
      SyndromeRecord rec;
      rec.error_label = e.label;
      rec.control_index = match;
      rec.p = static_cast<int>(col);
      rec.projection_residual =
          (matched.dissipative_product.mat * corrupted - corrupted).norm();
      rec.annihilation_residual = 0.0;
      for (const auto& other : controls.channels) {
        if (other.index == matched.index) continue;
        rec.annihilation_residual = std::max(
            rec.annihilation_residual, (other.dissipative_product.mat * corrupted).norm());
      }
      rec.pass = rec.projection_residual <= tol::syndrome_residual &&
                 rec.annihilation_residual <= tol::syndrome_residual;
      report.verdict = report.verdict && rec.pass;
      report.syndromes.push_back(rec);
    }
  }
  return report;
}

AqecReport check_decay_conditions(const Liouvillian& liouvillian,
                                  const Matrix& ground_basis,
                                  const ErrorSet& errors) {
  const int n = liouvillian.dim;
  if (ground_basis.rows() != n || ground_basis.cols() == 0) {
    throw std::invalid_argument("check_decay_conditions: bad ground basis");
  }
  AqecReport report;
  report.verdict = true;

  for (Eigen::Index p = 0; p < ground_basis.cols(); ++p) {
    for (Eigen::Index q = 0; q < ground_basis.cols(); ++q) {
      const Matrix dyad = ground_basis.col(p) * ground_basis.col(q).adjoint();
      const Vector image = liouvillian.a * vectorize(dyad);
      InvarianceRecord rec;
      rec.p = static_cast<int>(p);
      rec.q = static_cast<int>(q);
      rec.residual = image.cwiseAbs().maxCoeff();
      rec.pass = rec.residual <= tol::invariance_residual;
      report.verdict = report.verdict && rec.pass;
      report.invariance.push_back(rec);

      for (const auto& e : errors.errors) {
        const Matrix corrupted = e.op.mat * dyad * e.op.mat.adjoint();
        const Vector y = liouvillian.a * vectorize(corrupted);
        const Vector d = vectorize(corrupted) - vectorize(dyad);
        DecayRecord drec;
        drec.error_label = e.label;
        drec.p = static_cast<int>(p);
        drec.q = static_cast<int>(q);
        const double dd = d.squaredNorm();
        if (dd > 0.0) {
          drec.kappa = -(d.dot(y)).real() / dd;
        }
        drec.residual = (y + drec.kappa * d).cwiseAbs().maxCoeff();
        drec.pass = drec.residual <= tol::decay_residual && drec.kappa >= tol::semidefinite;
        report.verdict = report.verdict && drec.pass;
        report.decay.push_back(drec);
      }
    }
  }
  return report;
}

CorrectionExperiment run_error_correction_experiment(const StabilizerModel& model,
                                                     const Liouvillian& liouvillian,
                                                     const Operator& rho0,
                                                     const Operator& error,
                                                     double t_final, int samples) {
  const int n = liouvillian.dim;
  if (rho0.dim() != n || error.dim() != n) {
    throw std::invalid_argument("run_error_correction_experiment: dimension mismatch");
  }
  const Matrix proj = model.ground_basis * model.ground_basis.adjoint();
  const double membership = (rho0.mat - proj * rho0.mat * proj).cwiseAbs().maxCoeff();
  if (membership > tol::ground_membership) {
    throw std::invalid_argument(
        "run_error_correction_experiment: initial state is outside the code space");
  }

  CorrectionExperiment out;
  Matrix corrupted = error.mat * rho0.mat * error.mat.adjoint();
  const double trace = corrupted.trace().real();
  if (std::abs(trace - 1.0) > tol::state_trace) {
    if (trace <= tol::state_trace) {
      throw std::invalid_argument(
          "run_error_correction_experiment: error annihilates the state");
    }
    corrupted /= trace;
    out.renormalized_error = true;
  }

  Operator sigma(rho0.dims, 0.5 * (corrupted + corrupted.adjoint()));
  out.trajectory = evolve(liouvillian, sigma, time_grid(t_final, samples));
  // Re-key the fidelity column to the pre-error state.
  for (std::size_t k = 0; k < out.trajectory.states.size(); ++k) {
    out.trajectory.fidelity[k] = (rho0.mat * out.trajectory.states[k]).trace().real();
  }
  out.initial_fidelity = out.trajectory.fidelity.front();
  out.final_fidelity = out.trajectory.fidelity.back();
  return out;
}

ParallelNoiseExperiment run_parallel_noise_experiment(const StabilizerModel& model,
                                                      const ControlSet& controls,
                                                      const ErrorSet& noise,
                                                      double gamma,
                                                      const Operator& rho0,
                                                      double t_final, int samples) {
  Liouvillian l = control_noise_liouvillian(model, controls, noise, gamma);
  ParallelNoiseExperiment out;
  out.trajectory = evolve(l, rho0, time_grid(t_final, samples));
  out.kernel_dimension = steady_state(l).kernel_dimension;

  const Matrix limit = asymptotic_state(l, rho0);
  out.steady_state_fidelity = (rho0.mat * limit).trace().real();
  const Matrix proj = model.ground_basis * model.ground_basis.adjoint();
  out.code_space_population = (proj * limit).trace().real();
  return out;
}

}  // namespace dissipctl
