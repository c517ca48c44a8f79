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

#ifndef PERSUASION_PRICING_H_
#define PERSUASION_PRICING_H_

// Exact maximizers of f(s) + sum_r w_r(s_r) over all profiles s, for the
// sender utilities with polynomial (or fixed-parameter) structure.

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "persuasion/model.h"

namespace persuasion {

struct PricedProfile {
  Profile profile;
  // f(profile) + sum_r weight[r][profile[r]]
  double value = 0.0;
};

// weights[r][c]
using ReceiverWeights = std::vector<std::vector<double>>;

// Per-state oracle used by column generation.
using PricingOracle =
    std::function<PricedProfile(int state, const ReceiverWeights& weights)>;

// f = plurality win indicator. Takes the better of
//  (a) the per-receiver argmax profile, scored with its actual W, and
//  (b) for every k = 1..|R|, the best profile giving c0 exactly k votes and
//      every other candidate at most k-1, plus 1.
PricedProfile PricingPlurality(const ReceiverWeights& weights);

// f anonymous: for every count vector p, the best assignment realizing
// exactly p, plus f(p).
PricedProfile PricingAnonymous(const std::map<CountVector, double>& f,
                               const ReceiverWeights& weights);

// All count vectors of length num_candidates summing to num_receivers, in
// decreasing lexicographic order ((R,0,...) first). Throws
// Error(kSizeGuard) when C(R+C-1, R) exceeds max_count.
std::vector<CountVector> EnumerateCompositions(
    int num_receivers, int num_candidates,
    std::uint64_t max_count = 10'000'000);

// C(R+C-1, R), saturating at UINT64_MAX.
std::uint64_t CountCompositions(int num_receivers, int num_candidates);

}  // namespace persuasion

#endif  // PERSUASION_PRICING_H_
