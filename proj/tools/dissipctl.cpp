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

#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "dissipctl/aqec.hpp"
#include "dissipctl/liouville.hpp"
#include "dissipctl/operator.hpp"
#include "dissipctl/scenario.hpp"
#include "dissipctl/stabilizer_model.hpp"
#include "dissipctl/synthesis.hpp"
#include "dissipctl/tolerances.hpp"

namespace {

using dissipctl::ControlSet;
using dissipctl::ErrorSet;
using dissipctl::format_double;
using dissipctl::Operator;
using dissipctl::Scenario;
using dissipctl::Trajectory;
using dissipctl::Vector;
using json = nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitConditionFailed = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string scenario_path;
  std::string mode = "correct-once";
  std::string kappa_list;  // comma-separated overrides
  std::optional<double> gamma;
  std::optional<double> t_final;
  std::optional<int> samples;
  std::string output;
  bool no_timestamp = false;
};

std::string iso_timestamp() {
  std::time_t now = std::time(nullptr);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  return buf;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open output file '" + path + "'");
  }
  out << content;
  if (!out) {
    throw std::runtime_error("write failed for '" + path + "'");
  }
}

std::vector<double> parse_kappa_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    char* end = nullptr;
    const double v = std::strtod(item.c_str(), &end);
    if (end != item.c_str() + item.size() || item.empty() || v < 0.0) {
      throw std::runtime_error("bad --kappa value '" + item + "'");
    }
    out.push_back(v);
  }
  if (out.empty()) {
    throw std::runtime_error("--kappa list is empty");
  }
  return out;
}

Scenario load_with_overrides(const Options& opt, bool allow_kappa_list,
                             std::vector<double>* kappas) {
  Scenario s = dissipctl::load_scenario(opt.scenario_path);
  if (!opt.kappa_list.empty()) {
    const auto values = parse_kappa_list(opt.kappa_list);
    if (!allow_kappa_list && values.size() != 1) {
      throw std::runtime_error("--kappa accepts a single value for this command");
    }
    s.kappa = values.front();
    if (kappas) *kappas = values;
  } else if (kappas) {
    *kappas = {s.kappa};
  }
  if (opt.gamma) {
    if (*opt.gamma < 0.0) throw std::runtime_error("--gamma must be non-negative");
    s.gamma = *opt.gamma;
  }
  if (opt.t_final) {
    if (*opt.t_final < 0.0) throw std::runtime_error("--t-final must be non-negative");
    s.t_final = *opt.t_final;
  }
  if (opt.samples) {
    if (*opt.samples < 2) throw std::runtime_error("--samples must be at least 2");
    s.n_samples = *opt.samples;
  }
  return s;
}

struct BuiltControls {
  ControlSet controls;
  std::optional<dissipctl::ControlConstruction> construction;  // updated mode only
};

BuiltControls build_controls(const Scenario& s, const dissipctl::StabilizerModel& model) {
  const auto unitaries = dissipctl::scenario_unitaries(s);
  BuiltControls out;
  if (s.controls == "naive") {
    out.controls = dissipctl::build_naive_controls(model, unitaries, s.kappa);
  } else {
    out.construction = dissipctl::partition_and_build_controls(model, unitaries, s.kappa);
    out.controls = out.construction->controls;
  }
  return out;
}

std::string verdict_word(bool pass) { return pass ? "PASS" : "FAIL"; }

std::string csv_from_trajectory(const Trajectory& tr, bool timestamp) {
  std::ostringstream out;
  if (timestamp) out << "# generated " << iso_timestamp() << "\n";
  out << "t,fidelity,trace,purity\n";
  for (std::size_t k = 0; k < tr.times.size(); ++k) {
    out << format_double(tr.times[k]) << ',' << format_double(tr.fidelity[k]) << ','
        << format_double(tr.trace_re[k]) << ',' << format_double(tr.purity[k]) << "\n";
  }
  return out.str();
}

Operator state_operator(const Scenario& s, const Vector& amplitudes) {
  const std::vector<int> dims(static_cast<std::size_t>(s.n_qubits), 2);
  return Operator(dims, amplitudes * amplitudes.adjoint());
}

json certificate_json(const dissipctl::StabilityCertificate& cert) {
  return json{{"condition", dissipctl::to_string(cert.condition)},
              {"verdict", cert.verdict},
              {"rate", cert.rate},
              {"worst_eigenvalue", cert.worst_eigenvalue}};
}

int run_check(const Options& opt) {
  const Scenario s = load_with_overrides(opt, false, nullptr);
  const auto model = dissipctl::scenario_model(s);
  const auto assumptions = dissipctl::verify_assumptions(model);

  json j;
  j["command"] = "check";
  j["scenario"] = opt.scenario_path;
  j["controls"] = s.controls;
  j["kappa"] = s.kappa;

  std::printf("scenario: %s (controls = %s, kappa = %s)\n", opt.scenario_path.c_str(),
              s.controls.c_str(), format_double(s.kappa).c_str());
  j["assumptions"] = json::array();
  for (const auto& clause : assumptions.clauses) {
    std::printf("assumption %-14s residual %.3e  %s\n", clause.name.c_str(), clause.residual,
                verdict_word(clause.pass).c_str());
    j["assumptions"].push_back(json{{"name", clause.name},
                                    {"pass", clause.pass},
                                    {"residual", clause.residual},
                                    {"detail", clause.detail}});
  }

  bool overall = assumptions.pass;
  const auto built = build_controls(s, model);

  if (s.controls == "naive") {
    j["local"] = json::array();
    for (const auto& ch : built.controls.channels) {
      const auto cert = dissipctl::check_local_stabilization(
          model.penalties[ch.index], {ch.unitary});
      std::printf("local channel %d: c = %.9f  %s\n", ch.index + 1, cert.rate,
                  verdict_word(cert.verdict).c_str());
      overall = overall && cert.verdict;
      json entry = certificate_json(cert);
      entry["index"] = ch.index + 1;
      j["local"].push_back(entry);
    }
    const auto entries = dissipctl::check_strong_scalability(model, built.controls);
    j["scalability"] = json::array();
    for (const auto& e : entries) {
      std::printf("scalability channel %d: worst eigenvalue %.9f  %s\n", e.index + 1,
                  e.certificate.worst_eigenvalue, verdict_word(e.certificate.verdict).c_str());
      overall = overall && e.certificate.verdict;
      json entry = certificate_json(e.certificate);
      entry["index"] = e.index + 1;
      j["scalability"].push_back(entry);
    }
  } else {
    const auto& c = *built.construction;
    j["local"] = json::array();
    j["partitions"] = json::array();
    for (const auto& p : c.partitions) {
      std::printf("local channel %d: c = %.9f  %s\n", p.index + 1, p.local_certificate.rate,
                  verdict_word(p.local_certificate.verdict).c_str());
      json entry = certificate_json(p.local_certificate);
      entry["index"] = p.index + 1;
      j["local"].push_back(entry);

      json part;
      part["index"] = p.index + 1;
      part["commuting"] = json::array();
      for (int k : p.commuting) part["commuting"].push_back(k + 1);
      part["displaced"] = json::array();
      for (int k : p.displaced) part["displaced"].push_back(k + 1);
      part["product_checks"] = json::array();
      for (std::size_t k = 0; k < p.product_checks.size(); ++k) {
        json pc = certificate_json(p.product_checks[k]);
        pc["factor"] = p.product_check_indices[k] + 1;
        part["product_checks"].push_back(pc);
      }
      j["partitions"].push_back(part);
    }
    std::printf("lambda = %.9f  %s\n", c.lambda,
                verdict_word(c.lambda_certificate.verdict).c_str());
    std::printf("c_min = %.9f\n", c.c_min);
    j["lambda"] = c.lambda;
    j["lambda_certificate"] = certificate_json(c.lambda_certificate);
    j["c_min"] = c.c_min;
    j["warnings"] = c.warnings;
    for (const auto& w : c.warnings) {
      std::printf("warning: %s\n", w.c_str());
    }
    overall = overall && c.verdict;

    const double bound = c.c_min * c.lambda * s.kappa;
    const auto global = dissipctl::certify_global_stability(model, built.controls, bound);
    std::printf("global: c = %.9f (analytic bound %.9f)  %s\n", global.rate, bound,
                verdict_word(global.certificate.verdict).c_str());
    overall = overall && global.certificate.verdict;
    j["global"] = certificate_json(global.certificate);
    j["global"]["analytic_bound"] = bound;
  }

  j["verdict"] = overall;
  std::printf("verdict: %s\n", verdict_word(overall).c_str());
  if (!opt.output.empty()) {
    write_file(opt.output, j.dump(2) + "\n");
  }
  return overall ? kExitPass : kExitConditionFailed;
}

int run_simulate(const Options& opt) {
  if (opt.output.empty()) {
    throw std::runtime_error("simulate requires --output");
  }
  std::vector<double> kappas;
  Scenario s = load_with_overrides(opt, opt.mode == "parallel-noise", &kappas);
  const auto model = dissipctl::scenario_model(s);

  if (opt.mode == "correct-once") {
    if (s.initial_state.size() == 0) {
      throw std::runtime_error("correct-once mode needs an [initial_state] section");
    }
    const auto built = build_controls(s, model);
    const auto liouvillian = dissipctl::control_liouvillian(model, built.controls);
    std::vector<double> times(static_cast<std::size_t>(s.t_final == 0.0 ? 1 : s.n_samples));
    for (std::size_t k = 0; k < times.size(); ++k) {
      times[k] = times.size() == 1
                     ? 0.0
                     : s.t_final * static_cast<double>(k) / (times.size() - 1);
    }
    std::optional<Vector> target;
    if (s.target_state.size() != 0) target = s.target_state;
    const auto tr = dissipctl::evolve(liouvillian, state_operator(s, s.initial_state),
                                      times, target);
    write_file(opt.output, csv_from_trajectory(tr, !opt.no_timestamp));
    std::printf("wrote %s (%zu samples, final fidelity %s)\n", opt.output.c_str(),
                tr.times.size(), format_double(tr.fidelity.back()).c_str());
    return kExitPass;
  }

  if (opt.mode != "parallel-noise") {
    throw std::runtime_error("unknown --mode '" + opt.mode + "'");
  }
  if (s.target_state.size() == 0) {
    throw std::runtime_error("parallel-noise mode needs a [target_state] section");
  }
  const auto noise = dissipctl::scenario_errors(s);
  if (noise.errors.empty()) {
    throw std::runtime_error("parallel-noise mode needs an [errors] section");
  }
  const Operator code_state = state_operator(s, s.target_state);

  std::ostringstream summary;
  if (!opt.no_timestamp) summary << "# generated " << iso_timestamp() << "\n";
  summary << "kappa,gamma,steady_state_fidelity\n";
  bool first = true;
  for (double kappa : kappas) {
    Scenario sk = s;
    sk.kappa = kappa;
    const auto built = build_controls(sk, model);
    const auto exp = dissipctl::run_parallel_noise_experiment(
        model, built.controls, noise, sk.gamma, code_state, sk.t_final, sk.n_samples);
    summary << format_double(kappa) << ',' << format_double(sk.gamma) << ','
            << format_double(exp.steady_state_fidelity) << "\n";
    std::printf("kappa = %s  gamma = %s  steady-state fidelity = %s (kernel dim %d)\n",
                format_double(kappa).c_str(), format_double(sk.gamma).c_str(),
                format_double(exp.steady_state_fidelity).c_str(), exp.kernel_dimension);
    if (first) {
      write_file(opt.output, csv_from_trajectory(exp.trajectory, !opt.no_timestamp));
      std::printf("wrote %s\n", opt.output.c_str());
      first = false;
    }
  }
  const std::string summary_path = opt.output + ".summary";
  write_file(summary_path, summary.str());
  std::printf("wrote %s\n", summary_path.c_str());
  return kExitPass;
}

int run_aqec_verify(const Options& opt) {
  const Scenario s = load_with_overrides(opt, false, nullptr);
  const auto model = dissipctl::scenario_model(s);
  const auto built = build_controls(s, model);
  const auto errors = dissipctl::scenario_errors(s);

  std::printf("scenario: %s (controls = %s, kappa = %s)\n", opt.scenario_path.c_str(),
              s.controls.c_str(), format_double(s.kappa).c_str());

  const auto syndrome = dissipctl::check_syndrome_conditions(model, built.controls, errors);
  const auto liouvillian = dissipctl::control_liouvillian(model, built.controls);
  const auto decay = dissipctl::check_decay_conditions(liouvillian, model.ground_basis, errors);

  json j;
  j["command"] = "aqec-verify";
  j["scenario"] = opt.scenario_path;
  j["controls"] = s.controls;
  j["kappa"] = s.kappa;

  j["invariance"] = json::array();
  for (const auto& r : decay.invariance) {
    std::printf("invariance (p,q)=(%d,%d): residual %.3e  %s\n", r.p, r.q, r.residual,
                verdict_word(r.pass).c_str());
    j["invariance"].push_back(
        json{{"p", r.p}, {"q", r.q}, {"residual", r.residual}, {"pass", r.pass}});
  }
  j["decay"] = json::array();
  for (const auto& r : decay.decay) {
    std::printf("decay %s (p,q)=(%d,%d): kappa = %.9f residual %.3e  %s\n",
                r.error_label.c_str(), r.p, r.q, r.kappa, r.residual,
                verdict_word(r.pass).c_str());
    j["decay"].push_back(json{{"error", r.error_label},
                              {"p", r.p},
                              {"q", r.q},
                              {"kappa", r.kappa},
                              {"residual", r.residual},
                              {"pass", r.pass}});
  }
  j["syndromes"] = json::array();
  for (const auto& r : syndrome.syndromes) {
    std::printf("syndrome %s channel %d p=%d: projection %.3e annihilation %.3e  %s\n",
                r.error_label.c_str(), r.control_index + 1, r.p, r.projection_residual,
                r.annihilation_residual, verdict_word(r.pass).c_str());
    j["syndromes"].push_back(json{{"error", r.error_label},
                                  {"channel", r.control_index + 1},
                                  {"p", r.p},
                                  {"projection_residual", r.projection_residual},
                                  {"annihilation_residual", r.annihilation_residual},
                                  {"pass", r.pass}});
  }
  j["unmatched_errors"] = syndrome.unmatched_errors;
  for (const auto& label : syndrome.unmatched_errors) {
    std::printf("unmatched error: %s (uncorrectable by matching)\n", label.c_str());
  }

  const bool overall = syndrome.verdict && decay.verdict;
  j["verdict"] = overall;
  std::printf("verdict: %s\n", verdict_word(overall).c_str());
  if (!opt.output.empty()) {
    write_file(opt.output, j.dump(2) + "\n");
  }
  return overall ? kExitPass : kExitConditionFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dissipative stabilization and error-correction toolkit"};
  app.require_subcommand(1);

  Options opt;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--scenario", opt.scenario_path, "scenario file")->required();
    cmd->add_option("--kappa", opt.kappa_list, "control strength override");
    cmd->add_option("--gamma", opt.gamma, "noise strength override");
    cmd->add_option("--t-final", opt.t_final, "final time override");
    cmd->add_option("--samples", opt.samples, "sample count override");
    cmd->add_option("--output", opt.output, "output file");
    cmd->add_flag("--no-timestamp", opt.no_timestamp, "omit the timestamp header line");
  };

  auto* check = app.add_subcommand("check", "certify the stability conditions");
  add_common(check);
  auto* simulate = app.add_subcommand("simulate", "integrate a trajectory to CSV");
  add_common(simulate);
  simulate->add_option("--mode", opt.mode, "correct-once or parallel-noise");
  auto* aqec = app.add_subcommand("aqec-verify", "verify the error-correction conditions");
  add_common(aqec);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (check->parsed()) return run_check(opt);
    if (simulate->parsed()) return run_simulate(opt);
    if (aqec->parsed()) return run_aqec_verify(opt);
    return kExitUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  }
}
