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

#include "dissipctl/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "dissipctl/tolerances.hpp"

namespace dissipctl {

namespace {

constexpr int kMaxQubits = 12;

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_double(const std::string& s, int line) {
  const std::string t = trim(s);
  char* end = nullptr;
  const double v = std::strtod(t.c_str(), &end);
  if (end != t.c_str() + t.size() || t.empty()) {
    throw ScenarioError(line, "expected a number, got '" + t + "'");
  }
  return v;
}

int parse_int(const std::string& s, int line) {
  const double v = parse_double(s, line);
  const int i = static_cast<int>(v);
  if (static_cast<double>(i) != v) {
    throw ScenarioError(line, "expected an integer, got '" + trim(s) + "'");
  }
  return i;
}

Vector parse_amplitudes(const std::vector<std::pair<int, std::string>>& lines,
                        const std::string& section, int expected) {
  if (static_cast<int>(lines.size()) != expected) {
    throw ScenarioError(lines.empty() ? 0 : lines.front().first,
                        "[" + section + "] needs " + std::to_string(expected) +
                            " amplitude lines, got " + std::to_string(lines.size()));
  }
  Vector v(expected);
  for (int k = 0; k < expected; ++k) {
    std::istringstream iss(lines[k].second);
    std::string re_s, im_s, extra;
    iss >> re_s >> im_s;
    if (im_s.empty() || (iss >> extra)) {
      throw ScenarioError(lines[k].first, "amplitude line must be '<re> <im>'");
    }
    v(k) = Complex(parse_double(re_s, lines[k].first), parse_double(im_s, lines[k].first));
  }
  if (std::abs(v.norm() - 1.0) > tol::state_trace) {
    throw ScenarioError(lines.front().first, "[" + section + "] amplitudes are not unit-norm");
  }
  return v;
}

void require_pauli_strings(const std::vector<std::pair<int, std::string>>& lines,
                           const std::string& section, int n_qubits) {
  for (const auto& [line, text] : lines) {
    if (static_cast<int>(text.size()) != n_qubits) {
      throw ScenarioError(line, "[" + section + "] Pauli string '" + text + "' must have length " +
                                    std::to_string(n_qubits));
    }
    for (char c : text) {
      if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z') {
        throw ScenarioError(line, "[" + section + "] invalid Pauli character '" +
                                      std::string(1, c) + "'");
      }
    }
  }
}

std::vector<std::string> strip_line_numbers(const std::vector<std::pair<int, std::string>>& lines) {
  std::vector<std::string> out;
  out.reserve(lines.size());
  for (const auto& [line, text] : lines) out.push_back(text);
  return out;
}

}  // namespace

Scenario parse_scenario(const std::string& text) {
  static const std::vector<std::string> kSections = {"stabilizers", "unitaries", "errors",
                                                     "initial_state", "target_state"};
  std::map<std::string, std::vector<std::pair<int, std::string>>> sections;
  std::map<std::string, std::pair<int, std::string>> keys;

  std::istringstream stream(text);
  std::string raw;
  std::string current;
  int line_no = 0;
  while (std::getline(stream, raw)) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (line.front() == '[') {
      if (line.back() != ']') {
        throw ScenarioError(line_no, "unterminated section header");
      }
      current = trim(line.substr(1, line.size() - 2));
      if (std::find(kSections.begin(), kSections.end(), current) == kSections.end()) {
        throw ScenarioError(line_no, "unknown section [" + current + "]");
      }
      if (sections.count(current)) {
        throw ScenarioError(line_no, "duplicate section [" + current + "]");
      }
      sections[current];
      continue;
    }
    const auto eq = line.find('=');
    if (eq != std::string::npos) {
      current.clear();
      const std::string key = trim(line.substr(0, eq));
      const std::string value = trim(line.substr(eq + 1));
      if (keys.count(key)) {
        throw ScenarioError(line_no, "duplicate key '" + key + "'");
      }
      keys[key] = {line_no, value};
      continue;
    }
    if (current.empty()) {
      throw ScenarioError(line_no, "content outside any section: '" + line + "'");
    }
    sections[current].emplace_back(line_no, line);
  }

  Scenario s;
  auto take = [&](const std::string& key) -> const std::pair<int, std::string>* {
    auto it = keys.find(key);
    return it == keys.end() ? nullptr : &it->second;
  };

  const auto* nq = take("n_qubits");
  if (!nq) {
    throw ScenarioError(0, "missing required key 'n_qubits'");
  }
  s.n_qubits = parse_int(nq->second, nq->first);
  if (s.n_qubits < 1 || s.n_qubits > kMaxQubits) {
    throw ScenarioError(nq->first, "n_qubits must be between 1 and " + std::to_string(kMaxQubits));
  }
  if (const auto* k = take("kappa")) {
    s.kappa = parse_double(k->second, k->first);
    if (s.kappa < 0.0) throw ScenarioError(k->first, "kappa must be non-negative");
  }
  if (const auto* g = take("gamma")) {
    s.gamma = parse_double(g->second, g->first);
    if (s.gamma < 0.0) throw ScenarioError(g->first, "gamma must be non-negative");
  }
  if (const auto* t = take("t_final")) {
    s.t_final = parse_double(t->second, t->first);
    if (s.t_final < 0.0) throw ScenarioError(t->first, "t_final must be non-negative");
  }
  if (const auto* ns = take("n_samples")) {
    s.n_samples = parse_int(ns->second, ns->first);
    if (s.n_samples < 2) throw ScenarioError(ns->first, "n_samples must be at least 2");
  }
  if (const auto* c = take("controls")) {
    s.controls = c->second;
    if (s.controls != "naive" && s.controls != "updated") {
      throw ScenarioError(c->first, "controls must be 'naive' or 'updated'");
    }
  }
  static const std::vector<std::string> kKnownKeys = {"n_qubits", "kappa",     "gamma",
                                                      "t_final",  "n_samples", "controls"};
  for (const auto& [key, value] : keys) {
    if (std::find(kKnownKeys.begin(), kKnownKeys.end(), key) == kKnownKeys.end()) {
      throw ScenarioError(value.first, "unknown key '" + key + "'");
    }
  }

  if (!sections.count("stabilizers") || sections["stabilizers"].empty()) {
    throw ScenarioError(0, "missing or empty [stabilizers] section");
  }
  if (!sections.count("unitaries") || sections["unitaries"].empty()) {
    throw ScenarioError(0, "missing or empty [unitaries] section");
  }
  require_pauli_strings(sections["stabilizers"], "stabilizers", s.n_qubits);
  require_pauli_strings(sections["unitaries"], "unitaries", s.n_qubits);
  require_pauli_strings(sections["errors"], "errors", s.n_qubits);
  s.stabilizers = strip_line_numbers(sections["stabilizers"]);
  s.unitaries = strip_line_numbers(sections["unitaries"]);
  s.errors = strip_line_numbers(sections["errors"]);
  if (s.unitaries.size() != s.stabilizers.size()) {
    throw ScenarioError(0, "[unitaries] must list one Pauli string per stabilizer");
  }

  const int dim = 1 << s.n_qubits;
  if (sections.count("initial_state")) {
    s.initial_state = parse_amplitudes(sections["initial_state"], "initial_state", dim);
  }
  if (sections.count("target_state")) {
    s.target_state = parse_amplitudes(sections["target_state"], "target_state", dim);
  }
  return s;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open scenario file '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str());
}

std::string serialize_scenario(const Scenario& s) {
  std::ostringstream out;
  out << "n_qubits = " << s.n_qubits << "\n";
  out << "kappa = " << format_double(s.kappa) << "\n";
  out << "gamma = " << format_double(s.gamma) << "\n";
  out << "t_final = " << format_double(s.t_final) << "\n";
  out << "n_samples = " << s.n_samples << "\n";
  out << "controls = " << s.controls << "\n";

  auto emit_list = [&](const std::string& name, const std::vector<std::string>& lines) {
    if (lines.empty()) return;
    out << "\n[" << name << "]\n";
    for (const auto& l : lines) out << l << "\n";
  };
  emit_list("stabilizers", s.stabilizers);
  emit_list("unitaries", s.unitaries);
  emit_list("errors", s.errors);

  auto emit_state = [&](const std::string& name, const Vector& v) {
    if (v.size() == 0) return;
    out << "\n[" << name << "]\n";
    for (Eigen::Index k = 0; k < v.size(); ++k) {
      out << format_double(v(k).real()) << " " << format_double(v(k).imag()) << "\n";
    }
  };
  emit_state("initial_state", s.initial_state);
  emit_state("target_state", s.target_state);
  return out.str();
}

StabilizerModel scenario_model(const Scenario& s) {
  return build_model(s.n_qubits, s.stabilizers);
}

std::vector<Operator> scenario_unitaries(const Scenario& s) {
  std::vector<Operator> out;
  out.reserve(s.unitaries.size());
  for (const auto& p : s.unitaries) out.push_back(pauli_string(p));
  return out;
}

ErrorSet scenario_errors(const Scenario& s) {
  ErrorSet out;
  for (const auto& p : s.errors) out.errors.push_back(ErrorOp{p, pauli_string(p)});
  return out;
}

}  // namespace dissipctl
