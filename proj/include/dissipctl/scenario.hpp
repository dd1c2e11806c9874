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

#ifndef DISSIPCTL_SCENARIO_HPP
#define DISSIPCTL_SCENARIO_HPP

#include <charconv>
#include <stdexcept>
#include <string>
#include <vector>

#include "dissipctl/aqec.hpp"
#include "dissipctl/operator.hpp"
#include "dissipctl/stabilizer_model.hpp"

namespace dissipctl {

/// Shortest decimal form that parses back to the same double.
inline std::string format_double(double x) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  if (ec != std::errc()) {
    throw std::runtime_error("format_double: conversion failed");
  }
  return std::string(buf, ptr);
}

/// Parse failure with the offending line number (1-based, 0 when the problem
/// is not tied to a single line).
struct ScenarioError : std::runtime_error {
  int line;
  ScenarioError(int line_number, const std::string& what)
      : std::runtime_error(line_number > 0
                               ? "line " + std::to_string(line_number) + ": " + what
                               : what),
        line(line_number) {}
};

/// Experiment description: flat scalar keys plus Pauli-string and amplitude
/// sections. Amplitude vectors are listed over the computational basis,
/// qubit 1 most significant.
struct Scenario {
  int n_qubits = 0;
  double kappa = 1.0;
  double gamma = 1.0;
  double t_final = 0.0;
  int n_samples = 2;
  std::string controls = "updated";  // "naive" or "updated"
  std::vector<std::string> stabilizers;
  std::vector<std::string> unitaries;
  std::vector<std::string> errors;
  Vector initial_state;  // empty when the section is absent
  Vector target_state;
};

Scenario parse_scenario(const std::string& text);
Scenario load_scenario(const std::string& path);
std::string serialize_scenario(const Scenario& s);

/// Assembly helpers from the validated textual specs.
StabilizerModel scenario_model(const Scenario& s);
std::vector<Operator> scenario_unitaries(const Scenario& s);
ErrorSet scenario_errors(const Scenario& s);

}  // namespace dissipctl

#endif  // DISSIPCTL_SCENARIO_HPP
