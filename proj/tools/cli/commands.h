// Copyright 2026 The voting-persuasion Authors
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

#ifndef PERSUADE_CLI_COMMANDS_H_
#define PERSUADE_CLI_COMMANDS_H_

// Command implementations behind the `persuade` binary. Each command reads
// its inputs from a RunConfig, writes JSON or CSV to files and/or `out`, and
// returns the process exit code, so tests can drive them without a shell.

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "persuasion/errors.h"

namespace persuade {

enum ExitCode : int {
  kExitOk = 0,
  kExitUnexpected = 1,
  kExitUsage = 2,
  kExitIo = 3,
  kExitParse = 4,
  kExitInvalidInput = 5,
  kExitSizeGuard = 6,
  kExitSolverFailure = 7,
  kExitVerificationFailed = 8,
};

int ExitCodeFor(persuasion::ErrorCode code);

struct RunConfig {
  std::string command;
  std::string input;
  // verify: scheme file; bench: corpus directory is `input`.
  std::string scheme;
  std::string out;
  std::string report;
  // Anonymous sender utility JSON (optional).
  std::string utility;

  std::string solver = "exact-private";
  std::optional<int> k;
  // Persuasiveness and value-comparison tolerance.
  double tol = 1e-6;
  // Guard on n * |C|^|R| for solvers that enumerate profiles.
  std::uint64_t guard = 20000;
  std::uint64_t seed = 1;
  bool exact_arith = false;

  // gen
  int num_states = 3;
  int num_receivers = 3;
  int num_candidates = 2;
  int count = 1;
  std::string rule = "k-voting";
  bool random_prior = false;
  bool msi = false;
  int msi_elements = 3;
  int msi_subsets = 3;
  int msi_q = 2;

  // bench
  bool k_sweep = false;
};

// Validates a RunConfig independent of the command (positive tolerances,
// sane dimensions). Throws Error(kInvalidArgument).
void CheckConfig(const RunConfig& cfg);

int CmdValidate(const RunConfig& cfg, std::ostream& out);
int CmdSolve(const RunConfig& cfg, std::ostream& out);
int CmdVerify(const RunConfig& cfg, std::ostream& out);
int CmdGen(const RunConfig& cfg, std::ostream& out);
int CmdBench(const RunConfig& cfg, std::ostream& out);
int CmdReduceMsi(const RunConfig& cfg, std::ostream& out);
int CmdPad(const RunConfig& cfg, std::ostream& out);

// Dispatches on cfg.command, mapping library errors to exit codes and
// printing their message to `err`.
int Run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace persuade

#endif  // PERSUADE_CLI_COMMANDS_H_
