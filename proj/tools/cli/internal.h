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

#ifndef PERSUADE_CLI_INTERNAL_H_
#define PERSUADE_CLI_INTERNAL_H_

// Pieces shared by the command implementations.

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cli/commands.h"
#include "persuasion/io.h"
#include "persuasion/lp.h"
#include "persuasion/model.h"
#include "persuasion/msi.h"

namespace persuade {

using persuasion::Json;

// Reads and validates the instance at cfg.input; --k replaces the rule with
// k-voting at that threshold.
persuasion::Instance LoadInstance(const RunConfig& cfg);

// --utility when given, otherwise the instance's rule.
persuasion::SenderUtility LoadUtility(const RunConfig& cfg,
                                      const persuasion::Instance& inst);

struct Verification {
  std::vector<std::string> scheme_violations;
  persuasion::PersuasivenessReport persuasion;
  std::optional<double> value;
  std::optional<double> claimed_value;
  bool value_matches = true;

  bool ok() const {
    return scheme_violations.empty() && persuasion.persuasive && value_matches;
  }
  Json ToJson() const;
};

Verification VerifyScheme(const persuasion::Instance& inst,
                          const persuasion::SenderUtility& f,
                          const persuasion::SchemeFile& scheme, double tol);

struct SolveOutcome {
  persuasion::LpStatus status = persuasion::LpStatus::kNumericalFailure;
  double value = 0.0;
  int iterations = 0;
  double wall_ms = 0.0;
  persuasion::SchemeFile scheme;
  // Solver-specific report fields.
  Json details = Json::object();

  bool optimal() const { return status == persuasion::LpStatus::kOptimal; }
};

// Runs one named solver. Throws persuasion::Error for unknown solvers,
// rule/solver mismatches and guard violations.
SolveOutcome RunSolver(const std::string& solver, const RunConfig& cfg,
                       const persuasion::Instance& inst,
                       const persuasion::SenderUtility& f);

Json SchemeToJson(const persuasion::Instance& inst,
                  const persuasion::SchemeFile& scheme);

// Generators; the single source of randomness is `rng`.
persuasion::Instance GenerateInstance(const RunConfig& cfg, std::mt19937_64& rng);
persuasion::MsiInstance GenerateMsi(const RunConfig& cfg, std::mt19937_64& rng);

// Writes `j` to `path`, or pretty-prints it to `out` when path is empty.
void Emit(const Json& j, const std::string& path, std::ostream& out);

}  // namespace persuade

#endif  // PERSUADE_CLI_INTERNAL_H_
