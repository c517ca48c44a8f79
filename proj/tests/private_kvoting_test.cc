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

#include "persuasion/private_kvoting.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "persuasion/composition.h"
#include "persuasion/errors.h"
#include "persuasion/general_private.h"
#include "test_util.h"

namespace persuasion {
namespace {

TEST(KVotingLpLayout, ExampleSizes) {
  const Instance inst = ptest::Example1();
  const KVotingLp lp = BuildKVotingLp(inst, 2);
  // n (1 + |R| + k (2 + |R|)) = 3 (1 + 3 + 2 * 5)
  EXPECT_EQ(lp.layout.num_variables(), 42);
  EXPECT_EQ(lp.problem.num_variables(), 42);
  // Distinct indices covering 0..41.
  std::vector<int> seen;
  for (int s = 0; s < 3; ++s) {
    seen.push_back(lp.layout.beta(s));
    for (int r = 0; r < 3; ++r) seen.push_back(lp.layout.phi(r, s));
    for (int m = 0; m < 2; ++m) {
      seen.push_back(lp.layout.t(s, m));
      seen.push_back(lp.layout.q(s, m));
      for (int r = 0; r < 3; ++r) seen.push_back(lp.layout.z(s, m, r));
    }
  }
  std::sort(seen.begin(), seen.end());
  for (int i = 0; i < 42; ++i) EXPECT_EQ(seen[i], i);
  // z variables are nonpositive, t and q free.
  EXPECT_EQ(lp.problem.variables()[lp.layout.z(1, 1, 2)].upper, 0.0);
  EXPECT_EQ(lp.problem.variables()[lp.layout.t(0, 0)].lower, -kInfinity);
}

TEST(SolvePrivateKVoting, ExampleSweep) {
  const double expected[] = {1.0, 1.0, 5.0 / 6};
  for (int k = 1; k <= 3; ++k) {
    const KVotingResult r = SolvePrivateKVoting(ptest::Example1(), k);
    ASSERT_EQ(r.status, LpStatus::kOptimal);
    EXPECT_NEAR(r.value, expected[k - 1], 1e-9) << "k=" << k;
  }
}

TEST(SolvePrivateKVoting, ExampleBetasMatchMarginals) {
  const Instance inst = ptest::Example1();
  const KVotingResult r = SolvePrivateKVoting(inst, 3);
  ASSERT_EQ(r.status, LpStatus::kOptimal);
  double value = 0.0;
  for (int s = 0; s < 3; ++s) {
    std::vector<double> slice;
    for (int r2 = 0; r2 < 3; ++r2) slice.push_back(r.c0_marginals[r2][s]);
    EXPECT_NEAR(BetaFromMarginals(slice, 3), r.betas[s], 1e-8);
    value += inst.prior[s] * r.betas[s];
  }
  EXPECT_NEAR(value, r.value, 1e-9);
}

TEST(SolvePrivateKVoting, ExactArithmetic) {
  LpOptions options;
  options.exact_arithmetic = true;
  const KVotingResult r = SolvePrivateKVoting(ptest::Example1(), 3, options);
  ASSERT_EQ(r.status, LpStatus::kOptimal);
  EXPECT_NEAR(r.value, 5.0 / 6, 1e-12);
  EXPECT_FALSE(r.exact_value.empty());
}

TEST(SolvePrivateKVoting, RejectsThresholdOutOfRange) {
  EXPECT_THROW(SolvePrivateKVoting(ptest::Example1(), 0), Error);
  EXPECT_THROW(SolvePrivateKVoting(ptest::Example1(), 4), Error);
}

TEST(SolvePrivateKVoting, AgreesWithFullLp) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = ptest::UniformInt(rng, 1, 3);
    const int R = ptest::UniformInt(rng, 1, 4);
    const int C = ptest::UniformInt(rng, 2, 3);
    const int k = ptest::UniformInt(rng, 1, R);
    const Instance inst = ptest::RandomInstance(rng, n, R, C, VotingRule::KVoting(k),
                                                true, trial % 2 ? 4 : 0);
    const KVotingResult fast = SolvePrivateKVoting(inst, k);
    const PrivateResult full = SolvePrivateExact(inst, RuleUtility(inst));
    ASSERT_EQ(fast.status, LpStatus::kOptimal);
    ASSERT_EQ(full.status, LpStatus::kOptimal);
    EXPECT_NEAR(fast.value, full.value, 1e-6) << "trial " << trial;
    // Completed marginals are persuasive.
    const MarginalScheme m = CompleteMarginals(inst, fast.c0_marginals);
    EXPECT_TRUE(CheckPersuasiveMarginal(inst, m).persuasive) << "trial " << trial;
  }
}

TEST(SolvePrivateKVoting, NonIncreasingInThreshold) {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 30; ++trial) {
    const int R = ptest::UniformInt(rng, 2, 5);
    const Instance inst = ptest::RandomInstance(rng, 3, R, 3, VotingRule::KVoting(1));
    double previous = 1.0 + 1e-9;
    for (int k = 1; k <= R; ++k) {
      const KVotingResult r = SolvePrivateKVoting(inst, k);
      ASSERT_EQ(r.status, LpStatus::kOptimal);
      EXPECT_LE(r.value, previous + 1e-9);
      EXPECT_GE(r.value, -1e-9);
      previous = r.value;
    }
  }
}

TEST(BetaFromMarginals, ClosedFormCases) {
  EXPECT_DOUBLE_EQ(BetaFromMarginals({1, 1, 1}, 3), 1.0);
  EXPECT_DOUBLE_EQ(BetaFromMarginals({0.5, 0.5, 0.5}, 3), 0.5);
  // k = 1: all mass can be spread over disjoint events.
  EXPECT_DOUBLE_EQ(BetaFromMarginals({0.25, 0.25, 0.25}, 1), 0.75);
  EXPECT_DOUBLE_EQ(BetaFromMarginals({0.6, 0.6, 0.6}, 1), 1.0);
  // k = 2 on (1/2, 1/2, 1/2): total mass 3/2 split over pairs.
  EXPECT_DOUBLE_EQ(BetaFromMarginals({0.5, 0.5, 0.5}, 2), 0.75);
  EXPECT_DOUBLE_EQ(BetaFromMarginals({0.0, 1.0, 1.0}, 3), 0.0);
}

}  // namespace
}  // namespace persuasion
