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

#include "persuasion/pricing.h"

#include <limits>
#include <string>

#include "persuasion/errors.h"
#include "persuasion/transportation.h"

namespace persuasion {

namespace {

void CheckWeights(const ReceiverWeights& weights) {
  if (weights.empty() || weights[0].empty()) {
    throw Error(ErrorCode::kInvalidArgument, "pricing needs nonempty weights");
  }
  for (const auto& row : weights) {
    if (row.size() != weights[0].size()) {
      throw Error(ErrorCode::kInvalidArgument, "ragged pricing weights");
    }
  }
}

}  // namespace

PricedProfile PricingPlurality(const ReceiverWeights& weights) {
  CheckWeights(weights);
  const int num_r = static_cast<int>(weights.size());
  const int num_c = static_cast<int>(weights[0].size());

  PricedProfile best;
  best.profile.resize(num_r);
  best.value = 0.0;
  for (int r = 0; r < num_r; ++r) {
    int arg = 0;
    for (int c = 1; c < num_c; ++c) {
      if (weights[r][c] > weights[r][arg]) arg = c;
    }
    best.profile[r] = arg;
    best.value += weights[r][arg];
  }
  if (RuleWins(VotingRule::Plurality(), DeltaCounts(best.profile, num_c))) {
    best.value += 1.0;
  }

  for (int k = 1; k <= num_r; ++k) {
    TransportationProblem t;
    t.weight = weights;
    t.columns.assign(num_c, ColumnRequirement::AtMost(k - 1));
    t.columns[kSenderCandidate] = ColumnRequirement::Exact(k);
    const auto assignment = SolveTransportation(t);
    if (!assignment) continue;
    const double value = assignment->value + 1.0;
    if (value > best.value) {
      best.profile = assignment->profile;
      best.value = value;
    }
  }
  return best;
}

PricedProfile PricingAnonymous(const std::map<CountVector, double>& f,
                               const ReceiverWeights& weights) {
  CheckWeights(weights);
  const int num_r = static_cast<int>(weights.size());
  const int num_c = static_cast<int>(weights[0].size());
  PricedProfile best;
  best.value = -std::numeric_limits<double>::infinity();
  for (const CountVector& counts : EnumerateCompositions(num_r, num_c)) {
    auto it = f.find(counts);
    if (it == f.end()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "anonymous utility is not total over count vectors");
    }
    TransportationProblem t;
    t.weight = weights;
    for (int c = 0; c < num_c; ++c) {
      t.columns.push_back(ColumnRequirement::Exact(counts[c]));
    }
    const auto assignment = SolveTransportation(t);
    if (!assignment) continue;
    const double value = it->second + assignment->value;
    if (value > best.value) {
      best.profile = assignment->profile;
      best.value = value;
    }
  }
  return best;
}

std::uint64_t CountCompositions(int num_receivers, int num_candidates) {
  // C(R+C-1, C-1) computed incrementally; each prefix is itself a binomial.
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t count = 1;
  for (int i = 1; i <= num_candidates - 1; ++i) {
    const std::uint64_t factor = static_cast<std::uint64_t>(num_receivers + i);
    if (count > kMax / factor) return kMax;
    count = count * factor / static_cast<std::uint64_t>(i);
  }
  return count;
}

std::vector<CountVector> EnumerateCompositions(int num_receivers,
                                               int num_candidates,
                                               std::uint64_t max_count) {
  if (num_receivers < 1 || num_candidates < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "compositions need positive receiver and candidate counts");
  }
  const std::uint64_t total = CountCompositions(num_receivers, num_candidates);
  if (total > max_count) {
    throw Error(ErrorCode::kSizeGuard,
                "C(" + std::to_string(num_receivers + num_candidates - 1) +
                    ", " + std::to_string(num_receivers) +
                    ") count vectors exceed the enumeration guard");
  }
  std::vector<CountVector> out;
  out.reserve(total);
  CountVector counts(num_candidates, 0);
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == num_candidates - 1) {
      counts[pos] = left;
      out.push_back(counts);
      return;
    }
    for (int x = left; x >= 0; --x) {
      counts[pos] = x;
      self(self, pos + 1, left - x);
    }
  };
  rec(rec, 0, num_receivers);
  return out;
}

}  // namespace persuasion
