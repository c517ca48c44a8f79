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

#ifndef PERSUASION_MSI_H_
#define PERSUASION_MSI_H_

// Maximum k-subset intersection (MSI) and the reduction from MSI to public
// k-voting persuasion with two candidates, plus the padding that turns a
// two-candidate k-voting instance into an equivalent plurality instance.

#include <cstdint>
#include <string>
#include <vector>

#include "persuasion/model.h"

namespace persuasion {

struct MsiInstance {
  std::vector<std::string> elements;
  // subsets[i] holds element indices of A_i.
  std::vector<std::vector<int>> subsets;
  int k = 1;
  int q = 1;

  int num_elements() const { return static_cast<int>(elements.size()); }
  int num_subsets() const { return static_cast<int>(subsets.size()); }
};

ValidationReport ValidateMsi(const MsiInstance& msi);

struct MsiReduction {
  Instance instance;
  int threshold = 0;
  // Receiver index of r_i, and of r_{e,j} as set_voter.size() + e * m + j.
  std::vector<int> set_voter;
};

// One voter per subset and m voters per element, one state per element with
// uniform prior, candidates {c0, c1}, and the k-voting rule with threshold
// k + m q. Requires q >= 2.
MsiReduction ReduceMsi(const MsiInstance& msi);

struct MsiWitness {
  bool yes = false;
  // Best k-subset found (indices into subsets) and its intersection.
  std::vector<int> chosen;
  std::vector<int> intersection;
};

// Exhaustive over all k-subsets; Error(kSizeGuard) when C(m, k) > guard.
MsiWitness SolveMsiBruteForce(const MsiInstance& msi,
                              std::uint64_t guard = 5'000'000);

// Pads a two-candidate instance so that plurality on the result matches
// k-voting on the original: 2k-|R|-1 voters who always prefer c1 when k
// exceeds the majority threshold, |R|+1-2k voters who always prefer c0 when
// it is below. Padded voters get payoff 1 for their candidate and 0 for the
// other in every state.
Instance PadKVotingToPlurality(const Instance& inst, int k);

}  // namespace persuasion

#endif  // PERSUASION_MSI_H_
