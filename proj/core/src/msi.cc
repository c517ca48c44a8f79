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

#include "persuasion/msi.h"

#include <algorithm>
#include <string>

#include "persuasion/errors.h"

namespace persuasion {

ValidationReport ValidateMsi(const MsiInstance& msi) {
  ValidationReport report;
  const int n = msi.num_elements();
  const int m = msi.num_subsets();
  if (n < 1) report.violations.push_back("MSI needs at least one element");
  if (m < 1) report.violations.push_back("MSI needs at least one subset");
  if (msi.k < 1 || msi.k > m) {
    report.violations.push_back("MSI k must lie in [1, m]");
  }
  if (msi.q < 1 || msi.q > n) {
    report.violations.push_back("MSI q must lie in [1, n]");
  }
  for (int i = 0; i < m; ++i) {
    std::vector<int> sorted = msi.subsets[i];
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      report.violations.push_back("subset " + std::to_string(i) +
                                  " repeats an element");
    }
    for (int e : sorted) {
      if (e < 0 || e >= n) {
        report.violations.push_back("subset " + std::to_string(i) +
                                    " references an unknown element");
        break;
      }
    }
  }
  return report;
}

MsiReduction ReduceMsi(const MsiInstance& msi) {
  const ValidationReport report = ValidateMsi(msi);
  if (!report.ok()) {
    throw Error(ErrorCode::kInvalidArgument,
                "invalid MSI instance: " + report.violations.front());
  }
  if (msi.q < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "the MSI reduction needs q >= 2 (element voters pay "
                "-1/(q-1))");
  }
  const int n = msi.num_elements();
  const int m = msi.num_subsets();
  const double n2 = static_cast<double>(n) * n;
  const double off_element = -1.0 / (msi.q - 1);

  MsiReduction out;
  Instance& inst = out.instance;
  inst.candidates = {"c0", "c1"};
  for (int e = 0; e < n; ++e) {
    inst.states.push_back("theta_" + msi.elements[e]);
    inst.prior.push_back(1.0 / n);
  }
  for (int i = 0; i < m; ++i) {
    Receiver voter;
    voter.name = "r_A" + std::to_string(i + 1);
    std::vector<char> member(n, 0);
    for (int e : msi.subsets[i]) member[e] = 1;
    for (int e = 0; e < n; ++e) {
      voter.utility.push_back({member[e] ? 1.0 : -n2, 0.0});
    }
    out.set_voter.push_back(static_cast<int>(inst.receivers.size()));
    inst.receivers.push_back(std::move(voter));
  }
  for (int e = 0; e < n; ++e) {
    for (int j = 0; j < m; ++j) {
      Receiver voter;
      voter.name = "r_" + msi.elements[e] + "_" + std::to_string(j + 1);
      for (int state = 0; state < n; ++state) {
        voter.utility.push_back({state == e ? 1.0 : off_element, 0.0});
      }
      inst.receivers.push_back(std::move(voter));
    }
  }
  out.threshold = msi.k + m * msi.q;
  inst.rule = VotingRule::KVoting(out.threshold);
  return out;
}

MsiWitness SolveMsiBruteForce(const MsiInstance& msi, std::uint64_t guard) {
  const ValidationReport report = ValidateMsi(msi);
  if (!report.ok()) {
    throw Error(ErrorCode::kInvalidArgument,
                "invalid MSI instance: " + report.violations.front());
  }
  const int m = msi.num_subsets();
  const int k = msi.k;
  std::uint64_t count = 1;
  for (int i = 1; i <= k; ++i) {
    count = count * static_cast<std::uint64_t>(m - k + i) / i;
    if (count > guard) {
      throw Error(ErrorCode::kSizeGuard,
                  "MSI enumeration exceeds the guard of " +
                      std::to_string(guard) + " k-subsets");
    }
  }

  std::vector<std::vector<char>> member(
      m, std::vector<char>(msi.num_elements(), 0));
  for (int i = 0; i < m; ++i) {
    for (int e : msi.subsets[i]) member[i][e] = 1;
  }
  MsiWitness best;
  std::vector<int> pick(k);
  for (int i = 0; i < k; ++i) pick[i] = i;
  bool first = true;
  while (true) {
    std::vector<int> common;
    for (int e = 0; e < msi.num_elements(); ++e) {
      bool all = true;
      for (int i : pick) all = all && member[i][e];
      if (all) common.push_back(e);
    }
    if (first || common.size() > best.intersection.size()) {
      first = false;
      best.chosen = pick;
      best.intersection = common;
    }
    int i = k - 1;
    while (i >= 0 && pick[i] == m - k + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  best.yes = static_cast<int>(best.intersection.size()) >= msi.q;
  return best;
}

Instance PadKVotingToPlurality(const Instance& inst, int k) {
  RequireValidInstance(inst);
  if (inst.num_candidates() != 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "padding to plurality needs exactly two candidates");
  }
  const int num_r = inst.num_receivers();
  if (k < 1 || k > num_r) {
    throw Error(ErrorCode::kInvalidArgument, "k out of range");
  }
  const int majority = num_r / 2 + 1;
  Instance out = inst;
  out.rule = VotingRule::Plurality();
  int extra = 0;
  int favored = kSenderCandidate;
  if (k > majority) {
    extra = 2 * k - num_r - 1;
    favored = 1;
  } else if (k < majority) {
    extra = num_r + 1 - 2 * k;
    favored = kSenderCandidate;
  }
  for (int i = 0; i < extra; ++i) {
    Receiver voter;
    voter.name = std::string(favored == kSenderCandidate ? "pad_c0_" : "pad_c1_") +
                 std::to_string(i + 1);
    std::vector<double> row(2, 0.0);
    row[favored] = 1.0;
    voter.utility.assign(inst.num_states(), row);
    out.receivers.push_back(std::move(voter));
  }
  return out;
}

}  // namespace persuasion
