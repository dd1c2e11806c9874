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
//
// End-to-end acceptance run. Each criterion prints exactly one PASS/FAIL
// line; the exit status is the number of failed criteria.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>

#include "dissipctl/aqec.hpp"
#include "dissipctl/liouville.hpp"
#include "dissipctl/operator.hpp"
#include "dissipctl/stabilizer_model.hpp"
#include "dissipctl/synthesis.hpp"

using namespace dissipctl;

namespace {

bool report(int number, const std::string& label, bool pass, const std::string& detail = "") {
  std::printf("criterion %d: %-58s %s%s\n", number, label.c_str(), pass ? "PASS" : "FAIL",
              detail.empty() ? "" : ("  (" + detail + ")").c_str());
  return pass;
}

StabilizerModel repetition_model() { return build_model(3, {"ZZI", "IZZ", "ZIZ"}); }

std::vector<Operator> flip_unitaries() {
  return {pauli_string("XII"), pauli_string("IXI"), pauli_string("IIX")};
}

Operator logical_plus() {
  Vector psi = Vector::Zero(8);
  psi(0) = 1.0 / std::sqrt(2.0);
  psi(7) = Complex(0.0, 1.0) / std::sqrt(2.0);
  return Operator({2, 2, 2}, psi * psi.adjoint());
}

Matrix random_unitary(int n, std::mt19937& rng) {
  std::normal_distribution<double> gauss;
  Matrix g(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) g(r, c) = Complex(gauss(rng), gauss(rng));
  }
  const Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int c = 0; c < n; ++c) q.col(c) *= r(c, c) / std::abs(r(c, c));
  return q;
}

Matrix random_complex(int n, std::mt19937& rng) {
  std::normal_distribution<double> gauss;
  Matrix m(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) m(r, c) = Complex(gauss(rng), gauss(rng));
  }
  return m;
}

// Unit-rate stabilization of one penalty by one bit-flip channel.
bool criterion_1() {
  const StabilizerModel model = repetition_model();
  const StabilityCertificate cert =
      check_local_stabilization(model.penalties[0], {pauli_string("XII")});
  const bool pass = cert.verdict && std::abs(cert.rate - 1.0) <= 1e-9;
  char detail[64];
  std::snprintf(detail, sizeof(detail), "c = %.12f", cert.rate);
  return report(1, "single channel contracts its own penalty at unit rate", pass, detail);
}

// One-penalty-per-channel controls break down across channels, and the
// obstruction is exactly the signed neighbour penalty.
bool criterion_2() {
  const StabilizerModel model = repetition_model();
  const ControlSet naive = build_naive_controls(model, flip_unitaries());
  const std::vector<ScalabilityEntry> entries = check_strong_scalability(model, naive);

  const ScalabilityEntry& first = entries.front();
  const Operator expected({2, 2, 2},
                          Matrix(pauli_string("ZZI").mat * model.penalties[1].mat));
  const double mismatch = max_abs_difference(first.cross_term_sum, expected);
  const bool pass = !first.certificate.verdict &&
                    std::abs(first.certificate.worst_eigenvalue - 1.0) <= 1e-9 &&
                    mismatch <= 1e-10;
  char detail[96];
  std::snprintf(detail, sizeof(detail), "worst eigenvalue %.9f, closed-form mismatch %.2e",
                first.certificate.worst_eigenvalue, mismatch);
  return report(2, "naive cross-channel action is indefinite with known witness", pass, detail);
}

// The displacement partition produces the three pairwise penalty products and
// the certified uniform lower bound 1/2.
bool criterion_3() {
  const StabilizerModel model = repetition_model();
  const ControlConstruction c = partition_and_build_controls(model, flip_unitaries(), 1.0);

  const auto& v = model.penalties;
  const Matrix products[3] = {v[0].mat * v[2].mat, v[0].mat * v[1].mat, v[1].mat * v[2].mat};
  double worst_product = 0.0;
  for (int i = 0; i < 3; ++i) {
    worst_product =
        std::max(worst_product,
                 (c.controls.channels[i].dissipative_product.mat - products[i])
                     .cwiseAbs()
                     .maxCoeff());
  }
  const bool pass = c.verdict && worst_product <= 1e-12 && std::abs(c.lambda - 0.5) <= 1e-9 &&
                    std::abs(c.c_min - 1.0) <= 1e-9;
  char detail[96];
  std::snprintf(detail, sizeof(detail), "lambda = %.12f, product mismatch %.2e", c.lambda,
                worst_product);
  return report(3, "partitioned products recovered with lambda = 1/2", pass, detail);
}

// The full construction contracts the total penalty at least at the analytic
// bound c_min * lambda * kappa; here the measured rate is exactly 1.
bool criterion_4() {
  const StabilizerModel model = repetition_model();
  const ControlConstruction c = partition_and_build_controls(model, flip_unitaries(), 1.0);
  const double bound = c.c_min * c.lambda * 1.0;
  const GlobalStabilityReport global = certify_global_stability(model, c.controls, bound);
  const bool pass = global.certificate.verdict && global.rate >= bound - 1e-9 &&
                    std::abs(global.rate - 1.0) <= 1e-9;
  char detail[96];
  std::snprintf(detail, sizeof(detail), "c = %.12f, bound %.3f", global.rate, bound);
  return report(4, "global contraction certified above the analytic bound", pass, detail);
}

// A single corrupted codeword recovers along the closed-form fidelity curve,
// coherence included, and the generator matches an independent assembly.
bool criterion_5() {
  const StabilizerModel model = repetition_model();
  const ControlConstruction c = partition_and_build_controls(model, flip_unitaries(), 1.0);
  const Liouvillian l = control_liouvillian(model, c.controls);

  // Independent dense assembly of the same generator.
  const int d2 = l.dim * l.dim;
  Matrix raw = Matrix::Zero(d2, d2);
  for (const auto& ch : l.channels) {
    const Matrix& lk = ch.op.mat;
    const Matrix ldl = lk.adjoint() * lk;
    raw += Eigen::kroneckerProduct(lk.conjugate(), lk);
    raw -= 0.5 * Eigen::kroneckerProduct(Matrix(Matrix::Identity(l.dim, l.dim)), ldl);
    raw -= 0.5 * Eigen::kroneckerProduct(Matrix(ldl.transpose()),
                                         Matrix(Matrix::Identity(l.dim, l.dim)));
  }
  const double assembly_gap = (l.a - raw).cwiseAbs().maxCoeff();

  Vector err = Vector::Zero(8);
  err(1) = 1.0 / std::sqrt(2.0);  // |001>
  err(6) = Complex(0.0, 1.0) / std::sqrt(2.0);  // i|110>
  Vector code = Vector::Zero(8);
  code(0) = 1.0 / std::sqrt(2.0);
  code(7) = Complex(0.0, 1.0) / std::sqrt(2.0);

  std::vector<double> times(201);
  for (int k = 0; k <= 200; ++k) times[k] = 20.0 * k / 200.0;
  const Trajectory tr = evolve(l, Operator({2, 2, 2}, err * err.adjoint()), times,
                               std::optional<Vector>(code));

  double worst_curve = 0.0;
  for (std::size_t k = 0; k < times.size(); ++k) {
    worst_curve = std::max(worst_curve,
                           std::abs(tr.fidelity[k] - (1.0 - std::exp(-times[k]))));
  }
  const Complex coherence = tr.states.back()(0, 7);
  const double coherence_gap = std::abs(coherence - Complex(0.0, -0.5));

  const bool pass = assembly_gap <= 1e-13 && worst_curve <= 2e-7 &&
                    tr.fidelity.back() >= 1.0 - 1e-6 && coherence_gap <= 1e-6;
  char detail[128];
  std::snprintf(detail, sizeof(detail),
                "curve error %.2e, coherence error %.2e, assembly gap %.2e", worst_curve,
                coherence_gap, assembly_gap);
  return report(5, "recovery follows 1 - exp(-t) with preserved coherence", pass, detail);
}

// Every code dyad corrupted by a correctable flip decays back at the nominal
// control strength, for two different strengths.
bool criterion_6() {
  const StabilizerModel model = repetition_model();
  const ErrorSet errors{{ErrorOp{"XII", pauli_string("XII")},
                         ErrorOp{"IXI", pauli_string("IXI")},
                         ErrorOp{"IIX", pauli_string("IIX")}}};
  bool pass = true;
  double worst = 0.0;
  for (double kappa : {1.0, 4.0}) {
    const ControlConstruction c = partition_and_build_controls(model, flip_unitaries(), kappa);
    const Liouvillian l = control_liouvillian(model, c.controls);
    const AqecReport rep = check_decay_conditions(l, model.ground_basis, errors);
    pass = pass && rep.verdict && rep.decay.size() == 12;
    for (const auto& rec : rep.decay) {
      worst = std::max(worst, std::abs(rec.kappa - kappa));
      pass = pass && std::abs(rec.kappa - kappa) <= 1e-8 && rec.pass;
    }
  }
  char detail[64];
  std::snprintf(detail, sizeof(detail), "worst rate deviation %.2e", worst);
  return report(6, "fitted dyad decay rates equal the control strength", pass, detail);
}

// Steady-state fidelity under simultaneous noise and correction: monotone in
// the correction-to-noise ratio, pinned regression values, and a high-ratio
// fidelity target.
bool criterion_7() {
  const StabilizerModel model = repetition_model();
  const ErrorSet noise{{ErrorOp{"XII", pauli_string("XII")},
                        ErrorOp{"IXI", pauli_string("IXI")},
                        ErrorOp{"IIX", pauli_string("IIX")}}};
  const Operator rho0 = logical_plus();

  const double ratios[7] = {1, 2, 5, 10, 20, 50, 100};
  const double pinned[7] = {1.0 / 5.0,   1.0 / 4.0,   1.0 / 3.0, 11.0 / 28.0,
                            7.0 / 16.0, 17.0 / 36.0, 101.0 / 208.0};

  bool monotone = true;
  bool matches_pinned = true;
  double fidelity_at_50 = 0.0;
  double population_at_50 = 0.0;
  double previous = 0.0;
  for (int k = 0; k < 7; ++k) {
    const ControlConstruction c =
        partition_and_build_controls(model, flip_unitaries(), ratios[k]);
    const ParallelNoiseExperiment exp =
        run_parallel_noise_experiment(model, c.controls, noise, 1.0, rho0, 1.0, 3);
    monotone = monotone && exp.steady_state_fidelity >= previous - 1e-12;
    matches_pinned =
        matches_pinned && std::abs(exp.steady_state_fidelity - pinned[k]) <= 1e-9;
    previous = exp.steady_state_fidelity;
    if (ratios[k] == 50) {
      fidelity_at_50 = exp.steady_state_fidelity;
      population_at_50 = exp.code_space_population;
    }
  }

  const bool high_fidelity = fidelity_at_50 >= 0.95;
  const bool pass = monotone && matches_pinned && high_fidelity;
  char detail[160];
  std::snprintf(detail, sizeof(detail),
                "monotone %s, pinned values %s, fidelity at ratio 50 = %.6f "
                "(code population %.6f, threshold 0.95)",
                monotone ? "yes" : "no", matches_pinned ? "yes" : "no", fidelity_at_50,
                population_at_50);
  return report(7, "parallel-noise fidelity is monotone and reaches 0.95", pass, detail);
}

// Synthesized swap families stabilize randomly drawn projectors of every rank
// at unit rate.
bool criterion_8() {
  std::mt19937 rng(20260817);
  bool pass = true;
  double worst_rate = 0.0;
  double worst_unitarity = 0.0;
  for (int n : {2, 4, 8}) {
    std::uniform_int_distribution<int> rank_dist(1, n - 1);
    for (int trial = 0; trial < 50; ++trial) {
      const int rank = rank_dist(rng);
      const Matrix q = random_unitary(n, rng);
      Matrix p = Matrix::Zero(n, n);
      for (int k = 0; k < rank; ++k) p += q.col(k) * q.col(k).adjoint();
      const Operator v({n}, Matrix(0.5 * (p + p.adjoint())));

      const std::vector<Operator> unitaries = construct_stabilizing_unitaries(v);
      for (const auto& u : unitaries) {
        worst_unitarity = std::max(worst_unitarity, u.unitarity_defect());
      }
      const StabilityCertificate cert = check_local_stabilization(v, unitaries);
      worst_rate = std::max(worst_rate, std::abs(cert.rate - 1.0));
      pass = pass && cert.verdict && std::abs(cert.rate - 1.0) <= 1e-9 &&
             worst_unitarity <= 1e-10;
    }
  }
  char detail[96];
  std::snprintf(detail, sizeof(detail), "worst |c - 1| = %.2e, worst unitarity defect %.2e",
                worst_rate, worst_unitarity);
  return report(8, "random projectors of all ranks stabilize at unit rate", pass, detail);
}

// Random models: the two generator pictures agree in pairing, the dynamical
// map preserves trace and positivity, composes as a semigroup, and fixes the
// identity on the adjoint side.
bool criterion_9() {
  std::mt19937 rng(987654321);
  std::uniform_int_distribution<int> dim_dist(2, 8);
  std::uniform_int_distribution<int> channel_dist(1, 3);

  bool pass = true;
  double worst_trace = 0.0, worst_positivity = 0.0, worst_duality = 0.0;
  double worst_semigroup = 0.0, worst_unitality = 0.0;

  for (int trial = 0; trial < 100; ++trial) {
    const int n = dim_dist(rng);
    const Matrix raw_h = random_complex(n, rng);
    const Operator h({n}, Matrix(0.5 * (raw_h + raw_h.adjoint())));

    std::vector<Channel> channels;
    std::vector<Operator> couplings;
    const int n_channels = channel_dist(rng);
    for (int k = 0; k < n_channels; ++k) {
      const Operator lk({n}, Matrix(random_complex(n, rng) / std::sqrt(double(n))));
      channels.push_back(Channel{"ch", lk, 1.0});
      couplings.push_back(lk);
    }
    const Liouvillian l = build_liouvillian(h, channels);

    const Matrix g = random_complex(n, rng);
    Matrix rho = g * g.adjoint();
    rho /= rho.trace().real();

    const Trajectory tr = evolve(l, Operator({n}, rho), {0.35, 0.7});
    const Trajectory direct = evolve(l, Operator({n}, rho), {0.7});
    worst_trace = std::max({worst_trace, std::abs(tr.trace_re[0] - 1.0),
                            std::abs(tr.trace_re[1] - 1.0)});
    const Eigen::SelfAdjointEigenSolver<Matrix> es(tr.states[1]);
    worst_positivity = std::max(worst_positivity, -es.eigenvalues().minCoeff());
    worst_semigroup = std::max(
        worst_semigroup, (tr.states[1] - direct.states[0]).cwiseAbs().maxCoeff());

    const Matrix raw_x = random_complex(n, rng);
    const Operator x({n}, Matrix(0.5 * (raw_x + raw_x.adjoint())));
    const Operator gx = heisenberg_generator(x, h, couplings);
    const Matrix arho = unvectorize(l.a * vectorize(rho), n);
    worst_duality = std::max(
        worst_duality, std::abs((gx.mat * rho).trace().real() - (x.mat * arho).trace().real()));

    const Operator gid = heisenberg_generator(Operator::identity({n}), h, couplings);
    worst_unitality = std::max(worst_unitality, gid.mat.cwiseAbs().maxCoeff());
  }

  pass = worst_trace <= 1e-8 && worst_positivity <= 1e-6 && worst_duality <= 1e-8 &&
         worst_semigroup <= 1e-8 && worst_unitality <= 1e-12;
  char detail[160];
  std::snprintf(detail, sizeof(detail),
                "trace %.1e, positivity %.1e, duality %.1e, semigroup %.1e, unitality %.1e",
                worst_trace, worst_positivity, worst_duality, worst_semigroup, worst_unitality);
  return report(9, "random models satisfy trace, positivity and duality laws", pass, detail);
}

}  // namespace

int main() {
  int failures = 0;
  failures += criterion_1() ? 0 : 1;
  failures += criterion_2() ? 0 : 1;
  failures += criterion_3() ? 0 : 1;
  failures += criterion_4() ? 0 : 1;
  failures += criterion_5() ? 0 : 1;
  failures += criterion_6() ? 0 : 1;
  failures += criterion_7() ? 0 : 1;
  failures += criterion_8() ? 0 : 1;
  failures += criterion_9() ? 0 : 1;
  std::printf("%d of 9 criteria passed\n", 9 - failures);
  return failures;
}
