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

#include "dissipctl/synthesis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace dissipctl {

namespace {

void require_projector(const Operator& v, const char* what) {
  if (!v.is_hermitian()) {
    throw std::invalid_argument(std::string(what) + ": penalty is not Hermitian");
  }
  const double defect = max_abs_difference(v * v, v);
  if (defect > tol::eigen) {
    throw std::invalid_argument(std::string(what) + ": penalty is not a projector (defect " +
                                std::to_string(defect) + ")");
  }
}

void require_unitary(const Operator& u, const char* what, std::size_t index) {
  const double defect = u.unitarity_defect();
  if (defect > tol::unitary) {
    throw std::invalid_argument(std::string(what) + ": operator " +
                                std::to_string(index + 1) + " is not unitary (defect " +
                                std::to_string(defect) + ")");
  }
}

// Orthonormal basis of the eigenvalue-1 space of a projector.
Matrix projector_range(const Operator& v) {
  const Spectrum s = spectral_decompose(v);
  Eigen::Index first = 0;
  while (first < s.eigenvalues.size() && s.eigenvalues(first) < 0.5) ++first;
  return s.eigenvectors.rightCols(s.eigenvalues.size() - first);
}

// Orthonormal basis of the strictly-positive eigenspace of a PSD operator.
Matrix positive_range(const Operator& v, double tol) {
  const Spectrum s = spectral_decompose(v);
  Eigen::Index first = 0;
  while (first < s.eigenvalues.size() && s.eigenvalues(first) <= tol) ++first;
  return s.eigenvectors.rightCols(s.eigenvalues.size() - first);
}

Matrix hermitize(const Matrix& m) { return 0.5 * (m + m.adjoint()); }

}  // namespace

const char* to_string(StabilityCondition c) {
  switch (c) {
    case StabilityCondition::local: return "local";
    case StabilityCondition::strong_scalability: return "strong_scalability";
    case StabilityCondition::extended_local: return "extended_local";
    case StabilityCondition::lambda_bound: return "lambda_bound";
    case StabilityCondition::global: return "global";
  }
  return "unknown";
}

Operator adjoint_dissipator(const Operator& x, const Operator& coupling) {
  if (x.dims != coupling.dims) {
    throw std::invalid_argument("adjoint_dissipator: operator dims mismatch");
  }
  const Matrix& l = coupling.mat;
  const Matrix ld = l.adjoint();
  const Matrix ldl = ld * l;
  Matrix out = ld * x.mat * l - 0.5 * (ldl * x.mat + x.mat * ldl);
  return Operator(x.dims, std::move(out));
}

Operator heisenberg_generator(const Operator& x, const Operator& h,
                              const std::vector<Operator>& couplings) {
  if (x.dims != h.dims) {
    throw std::invalid_argument("heisenberg_generator: operator dims mismatch");
  }
  Operator g(x.dims, Complex(0, -1) * (x.mat * h.mat - h.mat * x.mat));
  for (const Operator& l : couplings) g = g + adjoint_dissipator(x, l);
  return g;
}

Operator single_control_generator(const Operator& v_i, const Operator& h,
                                  const Operator& coupling) {
  return heisenberg_generator(v_i, h, {coupling});
}

StabilityCertificate check_local_stabilization(const Operator& v_i,
                                               const std::vector<Operator>& unitaries,
                                               double tol) {
  require_projector(v_i, "check_local_stabilization");
  for (std::size_t j = 0; j < unitaries.size(); ++j) {
    require_unitary(unitaries[j], "check_local_stabilization", j);
  }

  const Matrix range = projector_range(v_i);
  if (range.cols() == 0) {
    throw std::invalid_argument("check_local_stabilization: penalty is zero");
  }

  const Matrix& v = v_i.mat;
  Matrix m = Matrix::Zero(v.rows(), v.cols());
  for (const Operator& u : unitaries) {
    m += v * u.mat.adjoint() * v * u.mat * v - v;
  }

  // The sandwiched sum vanishes on ker(V) and maps range(V) to itself, so the
  // inequality against -cV reduces to the top eigenvalue of the restriction.
  Eigen::SelfAdjointEigenSolver<Matrix> solver(hermitize(range.adjoint() * m * range));
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("check_local_stabilization: eigensolver failed");
  }
  const Eigen::Index last = solver.eigenvalues().size() - 1;

  StabilityCertificate cert;
  cert.condition = StabilityCondition::local;
  cert.worst_eigenvalue = solver.eigenvalues()(last);
  cert.rate = -cert.worst_eigenvalue;
  cert.witness = range * solver.eigenvectors().col(last);
  cert.verdict = cert.rate > tol;
  return cert;
}

std::vector<Operator> construct_stabilizing_unitaries(const Operator& v_i,
                                                      int ground_index) {
  require_projector(v_i, "construct_stabilizing_unitaries");
  const Spectrum s = spectral_decompose(v_i);
  const Eigen::Index n = s.eigenvalues.size();

  Eigen::Index kernel = 0;
  while (kernel < n && s.eigenvalues(kernel) < 0.5) ++kernel;
  if (kernel == 0) {
    throw std::invalid_argument("construct_stabilizing_unitaries: projector has no kernel");
  }
  if (ground_index < 0 || ground_index >= kernel) {
    throw std::invalid_argument("construct_stabilizing_unitaries: ground_index " +
                                std::to_string(ground_index) + " outside kernel of dimension " +
                                std::to_string(kernel));
  }

  const Vector ground = s.eigenvectors.col(ground_index);
  std::vector<Operator> out;
  out.reserve(static_cast<std::size_t>(n - kernel));
  for (Eigen::Index j = kernel; j < n; ++j) {
    const Vector excited = s.eigenvectors.col(j);
    Matrix u = Matrix::Identity(n, n);
    u -= excited * excited.adjoint();
    u -= ground * ground.adjoint();
    u += excited * ground.adjoint();
    u += ground * excited.adjoint();
    out.emplace_back(v_i.dims, std::move(u));
  }
  return out;
}

ControlSet build_naive_controls(const StabilizerModel& model,
                                const std::vector<Operator>& unitaries,
                                double kappa) {
  if (unitaries.size() != model.penalties.size()) {
    throw std::invalid_argument("build_naive_controls: expected one unitary per penalty");
  }
  if (kappa < 0) throw std::invalid_argument("build_naive_controls: negative strength");
  ControlSet set;
  for (std::size_t i = 0; i < unitaries.size(); ++i) {
    require_unitary(unitaries[i], "build_naive_controls", i);
    ControlChannel ch;
    ch.index = static_cast<int>(i);
    ch.unitary = unitaries[i];
    ch.dissipative_product = model.penalties[i];
    ch.coupling = std::sqrt(kappa) * (unitaries[i] * model.penalties[i]);
    ch.strength = kappa;
    set.channels.push_back(std::move(ch));
  }
  return set;
}

std::vector<ScalabilityEntry> check_strong_scalability(const StabilizerModel& model,
                                                       const ControlSet& controls,
                                                       double tol) {
  std::vector<ScalabilityEntry> entries;
  for (const ControlChannel& ch : controls.channels) {
    if (ch.index < 0 || ch.index >= static_cast<int>(model.penalties.size())) {
      throw std::invalid_argument("check_strong_scalability: channel index out of range");
    }
    const Operator& v = model.penalties[static_cast<std::size_t>(ch.index)];

    ScalabilityEntry entry;
    entry.index = ch.index;
    entry.cross_term_sum = Operator::zero(v.dims);
    for (const ControlChannel& other : controls.channels) {
      if (&other == &ch) continue;
      entry.cross_term_sum = entry.cross_term_sum + adjoint_dissipator(v, other.coupling);
    }
    const SemidefiniteCertificate nsd = is_negative_semidefinite(entry.cross_term_sum, tol);
    entry.certificate.condition = StabilityCondition::strong_scalability;
    entry.certificate.verdict = nsd.verdict;
    entry.certificate.rate = 0.0;
    entry.certificate.worst_eigenvalue = nsd.worst_eigenvalue;
    entry.certificate.witness = nsd.witness;
    entries.push_back(std::move(entry));
  }
  return entries;
}

ControlConstruction partition_and_build_controls(const StabilizerModel& model,
                                                 const std::vector<Operator>& unitaries,
                                                 double kappa,
                                                 double commutation_tol) {
  if (unitaries.size() != model.penalties.size()) {
    throw std::invalid_argument("partition_and_build_controls: expected one unitary per penalty");
  }
  if (kappa < 0) throw std::invalid_argument("partition_and_build_controls: negative strength");

  ControlConstruction result;
  result.verdict = true;
  result.c_min = std::numeric_limits<double>::infinity();

  const std::size_t count = model.penalties.size();
  for (std::size_t i = 0; i < count; ++i) {
    const Operator& v_i = model.penalties[i];
    const Operator& u_i = unitaries[i];
    require_unitary(u_i, "partition_and_build_controls", i);

    if (v_i.mat.cwiseAbs().maxCoeff() <= tol::eigen) {
      result.warnings.push_back("penalty " + std::to_string(i + 1) +
                                " is zero; no channel constructed");
      continue;
    }

    PartitionEntry entry;
    entry.index = static_cast<int>(i);
    entry.local_certificate = check_local_stabilization(v_i, {u_i});
    if (!entry.local_certificate.verdict) {
      result.verdict = false;
      result.warnings.push_back("unitary " + std::to_string(i + 1) +
                                " does not stabilize its penalty (rate " +
                                std::to_string(entry.local_certificate.rate) + ")");
    }
    if (entry.local_certificate.rate < result.c_min) {
      result.c_min = entry.local_certificate.rate;
    }

    for (std::size_t j = 0; j < count; ++j) {
      const double defect =
          commutator(model.penalties[j], u_i).mat.cwiseAbs().maxCoeff();
      if (defect <= commutation_tol) {
        entry.commuting.push_back(static_cast<int>(j));
      } else {
        entry.displaced.push_back(static_cast<int>(j));
      }
    }
    entry.self_commuting =
        std::find(entry.commuting.begin(), entry.commuting.end(), static_cast<int>(i)) !=
        entry.commuting.end();
    if (entry.self_commuting) {
      result.warnings.push_back("penalty " + std::to_string(i + 1) +
                                " commutes with its own unitary");
    }

    Operator product = Operator::identity(v_i.dims);
    for (int j : entry.displaced) {
      const Operator& v_d = model.penalties[static_cast<std::size_t>(j)];

      // Sandwiched contraction for this displaced factor.
      const Operator m(v_d.dims, v_d.mat * u_i.mat.adjoint() * v_d.mat * u_i.mat * v_d.mat -
                                     v_d.mat);
      const SemidefiniteCertificate nsd = is_negative_semidefinite(m);
      StabilityCertificate cert;
      cert.condition = StabilityCondition::extended_local;
      cert.verdict = nsd.verdict;
      cert.worst_eigenvalue = nsd.worst_eigenvalue;
      cert.witness = nsd.witness;
      entry.product_checks.push_back(std::move(cert));
      entry.product_check_indices.push_back(j);
      if (!nsd.verdict) result.verdict = false;

      product = product * v_d;
    }
    if (entry.displaced.empty()) {
      result.warnings.push_back("unitary " + std::to_string(i + 1) +
                                " displaces no penalty; coupling reduces to the bare unitary");
    }

    ControlChannel ch;
    ch.index = static_cast<int>(i);
    ch.unitary = u_i;
    ch.dissipative_product = product;
    ch.coupling = std::sqrt(kappa) * (u_i * product);
    ch.strength = kappa;
    result.controls.channels.push_back(std::move(ch));
    result.partitions.push_back(std::move(entry));
  }

  if (result.controls.channels.empty()) {
    result.verdict = false;
    result.warnings.push_back("no channels constructed");
    result.c_min = 0.0;
    return result;
  }

  // Dominance of the summed products over lambda V on range(V).
  Operator product_sum = Operator::zero(model.total_penalty.dims);
  for (const ControlChannel& ch : result.controls.channels) {
    product_sum = product_sum + ch.dissipative_product;
  }
  const Matrix range = positive_range(model.total_penalty, tol::ground);
  if (range.cols() == 0) {
    throw std::invalid_argument("partition_and_build_controls: total penalty is zero");
  }
  Eigen::GeneralizedSelfAdjointEigenSolver<Matrix> solver(
      hermitize(range.adjoint() * product_sum.mat * range),
      hermitize(range.adjoint() * model.total_penalty.mat * range));
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("partition_and_build_controls: generalized eigensolver failed");
  }
  result.lambda = solver.eigenvalues()(0);
  result.lambda_certificate.condition = StabilityCondition::lambda_bound;
  result.lambda_certificate.rate = result.lambda;
  result.lambda_certificate.worst_eigenvalue = -result.lambda;
  result.lambda_certificate.witness = range * solver.eigenvectors().col(0);
  result.lambda_certificate.verdict = result.lambda > tol::semidefinite;
  if (!result.lambda_certificate.verdict) result.verdict = false;

  return result;
}

GlobalStabilityReport certify_global_stability(const StabilizerModel& model,
                                               const ControlSet& controls,
                                               std::optional<double> analytic_bound,
                                               double tol) {
  std::vector<Operator> couplings;
  couplings.reserve(controls.channels.size());
  for (const ControlChannel& ch : controls.channels) couplings.push_back(ch.coupling);

  const Operator g = heisenberg_generator(model.total_penalty, model.hamiltonian, couplings);

  const Matrix range = positive_range(model.total_penalty, tol::ground);
  if (range.cols() == 0) {
    throw std::invalid_argument("certify_global_stability: total penalty is zero");
  }
  Eigen::GeneralizedSelfAdjointEigenSolver<Matrix> solver(
      hermitize(range.adjoint() * g.mat * range),
      hermitize(range.adjoint() * model.total_penalty.mat * range));
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("certify_global_stability: generalized eigensolver failed");
  }
  const Eigen::Index last = solver.eigenvalues().size() - 1;
  const double c = -solver.eigenvalues()(last);

  // Validate on the full space: the restriction alone would miss generator
  // weight on or across ker(V).
  const SemidefiniteCertificate full =
      is_negative_semidefinite(g + c * model.total_penalty, tol);

  GlobalStabilityReport report;
  report.rate = c;
  report.analytic_bound = analytic_bound;
  report.certificate.condition = StabilityCondition::global;
  report.certificate.rate = c;
  report.certificate.worst_eigenvalue = full.worst_eigenvalue;
  report.certificate.witness = full.witness;
  report.certificate.verdict = (c > tol) && full.verdict;
  return report;
}

}  // namespace dissipctl
