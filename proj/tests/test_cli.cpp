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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

namespace {

struct RunResult {
  int code;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(DISSIPCTL_BINARY) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, n);
  const int status = pclose(pipe);
  return RunResult{WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string scenario(const std::string& name) {
  return std::string(DISSIPCTL_SCENARIO_DIR) + "/" + name;
}

std::string temp_path(const std::string& suffix) {
  return "/tmp/dissipctl_cli_" + std::to_string(getpid()) + "_" + suffix;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) lines.push_back(line);
  return lines;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("check certifies the shipped updated scenario") {
  const RunResult r = run("check --scenario " + scenario("three_qubit_updated.scenario"));
  CHECK(r.code == 0);
  CHECK(contains(r.out, "lambda = 0.500000000  PASS"));
  CHECK(contains(r.out, "c_min = 1.000000000"));
  CHECK(contains(r.out, "global: c = 1.000000000"));
  CHECK(contains(r.out, "verdict: PASS"));
  CHECK_FALSE(contains(r.out, "FAIL"));
}

TEST_CASE("check rejects the naive construction on scalability") {
  const RunResult r = run("check --scenario " + scenario("three_qubit_naive.scenario"));
  CHECK(r.code == 1);
  CHECK(contains(r.out, "local channel 1: c = 1.000000000  PASS"));
  CHECK(contains(r.out, "scalability channel 1: worst eigenvalue 1.000000000  FAIL"));
  CHECK(contains(r.out, "verdict: FAIL"));
}

TEST_CASE("check writes a machine-readable report") {
  const std::string out = temp_path("check.json");
  const RunResult r = run("check --scenario " + scenario("three_qubit_updated.scenario") +
                          " --output " + out);
  CHECK(r.code == 0);

  const nlohmann::json j = nlohmann::json::parse(read_file(out));
  CHECK(j.at("verdict").get<bool>());
  CHECK(std::abs(j.at("lambda").get<double>() - 0.5) <= 1e-12);
  CHECK(std::abs(j.at("c_min").get<double>() - 1.0) <= 1e-12);
  CHECK(j.at("local").size() == 3);
  CHECK(j.at("partitions").size() == 3);
  CHECK(j.at("global").at("verdict").get<bool>());
  std::remove(out.c_str());
}

TEST_CASE("simulate correct-once writes the trajectory CSV") {
  const std::string out = temp_path("correct.csv");
  const RunResult r = run("simulate --mode correct-once --scenario " +
                          scenario("three_qubit_updated.scenario") + " --no-timestamp --output " +
                          out);
  CHECK(r.code == 0);
  CHECK(contains(r.out, "wrote " + out));

  const std::string csv = read_file(out);
  const auto rows = lines_of(csv);
  REQUIRE(rows.size() == 202);  // header plus 201 samples
  CHECK(rows[0] == "t,fidelity,trace,purity");

  const auto last = rows.back();
  double t = 0, fidelity = 0, trace = 0, purity = 0;
  REQUIRE(std::sscanf(last.c_str(), "%lf,%lf,%lf,%lf", &t, &fidelity, &trace, &purity) == 4);
  CHECK(t == 20.0);
  CHECK(fidelity >= 1.0 - 1e-6);
  CHECK(std::abs(trace - 1.0) <= 1e-9);

  // Reruns without the timestamp header are byte-identical.
  const std::string out2 = temp_path("correct2.csv");
  run("simulate --mode correct-once --scenario " + scenario("three_qubit_updated.scenario") +
      " --no-timestamp --output " + out2);
  CHECK(read_file(out2) == csv);
  std::remove(out.c_str());
  std::remove(out2.c_str());
}

TEST_CASE("the timestamp header is on by default") {
  const std::string out = temp_path("stamped.csv");
  const RunResult r = run("simulate --mode correct-once --scenario " +
                          scenario("three_qubit_updated.scenario") + " --output " + out);
  CHECK(r.code == 0);
  const auto rows = lines_of(read_file(out));
  REQUIRE(rows.size() >= 2);
  CHECK(rows[0].rfind("# generated ", 0) == 0);
  CHECK(rows[1] == "t,fidelity,trace,purity");
  std::remove(out.c_str());
}

TEST_CASE("simulate parallel-noise sweeps kappa into a summary") {
  const std::string out = temp_path("sweep.csv");
  const RunResult r = run("simulate --mode parallel-noise --kappa 1,50 --scenario " +
                          scenario("three_qubit_updated.scenario") + " --no-timestamp --output " +
                          out);
  CHECK(r.code == 0);
  CHECK(contains(r.out, "kernel dim 2"));

  const auto rows = lines_of(read_file(out + ".summary"));
  REQUIRE(rows.size() == 3);
  CHECK(rows[0] == "kappa,gamma,steady_state_fidelity");
  double k1 = 0, g1 = 0, f1 = 0, k2 = 0, g2 = 0, f2 = 0;
  REQUIRE(std::sscanf(rows[1].c_str(), "%lf,%lf,%lf", &k1, &g1, &f1) == 3);
  REQUIRE(std::sscanf(rows[2].c_str(), "%lf,%lf,%lf", &k2, &g2, &f2) == 3);
  CHECK(k1 == 1.0);
  CHECK(k2 == 50.0);
  CHECK(std::abs(f1 - 0.2) <= 1e-9);
  CHECK(std::abs(f2 - 17.0 / 36.0) <= 1e-9);
  CHECK(f2 > f1);

  // The trajectory CSV for the first strength is also produced.
  CHECK(lines_of(read_file(out))[0] == "t,fidelity,trace,purity");
  std::remove(out.c_str());
  std::remove((out + ".summary").c_str());
}

TEST_CASE("aqec-verify passes the shipped correctable errors") {
  const RunResult r = run("aqec-verify --scenario " + scenario("three_qubit_updated.scenario"));
  CHECK(r.code == 0);
  CHECK(contains(r.out, "decay XII (p,q)=(0,0): kappa = 1.000000000"));
  CHECK(contains(r.out, "syndrome XII channel 1 p=0"));
  CHECK(contains(r.out, "verdict: PASS"));
  CHECK_FALSE(contains(r.out, "unmatched"));
}

TEST_CASE("aqec-verify reports unmatched errors and fails their decay") {
  const std::string path = temp_path("double_flip.scenario");
  std::ofstream out(path);
  out << "n_qubits = 3\n[stabilizers]\nZZI\nIZZ\nZIZ\n"
      << "[unitaries]\nXII\nIXI\nIIX\n[errors]\nXXI\n";
  out.close();

  const RunResult r = run("aqec-verify --scenario " + path);
  CHECK(r.code == 1);
  CHECK(contains(r.out, "unmatched error: XXI (uncorrectable by matching)"));
  CHECK(contains(r.out, "verdict: FAIL"));
  std::remove(path.c_str());
}

TEST_CASE("usage problems exit with status 2") {
  CHECK(run("").code == 2);
  CHECK(run("check").code == 2);  // missing --scenario
  CHECK(run("check --scenario /nonexistent.scenario").code == 2);
  CHECK(run("simulate --mode bogus --scenario " +
            scenario("three_qubit_updated.scenario") + " --output /tmp/x.csv")
            .code == 2);
  CHECK(run("simulate --mode correct-once --scenario " +
            scenario("three_qubit_updated.scenario"))
            .code == 2);  // missing --output
  CHECK(run("simulate --mode parallel-noise --kappa 1,oops --scenario " +
            scenario("three_qubit_updated.scenario") + " --output /tmp/x.csv")
            .code == 2);
}
