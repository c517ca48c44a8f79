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

#ifndef PERSUASION_TRANSPORTATION_H_
#define PERSUASION_TRANSPORTATION_H_

#include <optional>
#include <vector>

#include "persuasion/model.h"

namespace persuasion {

// Receiver-to-candidate assignment: every receiver gets exactly one
// candidate, candidate columns carry either an exact or an upper count
// requirement, and the total weight is maximized.
struct ColumnRequirement {
  enum class Kind { kExact, kAtMost };
  Kind kind = Kind::kAtMost;
  int count = 0;

  static ColumnRequirement Exact(int count) { return {Kind::kExact, count}; }
  static ColumnRequirement AtMost(int count) { return {Kind::kAtMost, count}; }
};

struct TransportationProblem {
  // weight[receiver][candidate]
  std::vector<std::vector<double>> weight;
  std::vector<ColumnRequirement> columns;

  int num_receivers() const { return static_cast<int>(weight.size()); }
  int num_candidates() const { return static_cast<int>(columns.size()); }
};

struct Assignment {
  Profile profile;
  double value = 0.0;
};

// Min-cost flow on negated weights with successive shortest paths, so the
// returned assignment is integral by construction. nullopt when the column
// requirements cannot be met. Throws Error(kInvalidArgument) on malformed
// input (ragged weights, negative counts, non-finite weights).
std::optional<Assignment> SolveTransportation(const TransportationProblem& t);

}  // namespace persuasion

#endif  // PERSUASION_TRANSPORTATION_H_
