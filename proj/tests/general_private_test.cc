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

#include "persuasion/general_private.h"

#include <gtest/gtest.h>

#include <random>

#include "persuasion/errors.h"
#include "persuasion/pricing.h"
#include "test_util.h"

namespace persuasion {
namespace {

// Pricing by enumerating every profile; the reference oracle for column
// generation.
PricingOracle BruteOracle(const Instance& inst, const SenderUtility& f) {
  return [&inst, f](int state, const ReceiverWeights& w) {
    PricedProfile best;
    best.value = -INFINITY;
    ptest::ForEachProfile(inst.num_receivers(), inst.num_candidates(),
                          [&](const Profile& p) {
                            const double v = f.Value(state, p, inst.num_candidates()) +
                                             ptest::WeightOf(w, p);
                            if (v > best.value) best = {p, v};
                          });
    return best;
  };
}

void ExpectSound(const Instance& inst, const SenderUtility& f,
                 const PrivateResult& r, int trial) {
  EXPECT_TRUE(ValidateJointScheme(inst, r.scheme).ok()) << "trial " << trial;
  EXPECT_TRUE(CheckPersuasiveJoint(inst, r.scheme).persuasive) << "trial " << trial;
  EXPECT_NEAR(SenderValue(inst, f, r.scheme), r.value, 1e-7) << "trial " << trial;
}

TEST(SolvePrivateExact, ExampleValues) {
  const double expected[] = {1.0, 1.0, 5.0 / 6};
  for (int k = 1; k <= 3; ++k) {
    const Instance inst = ptest::Example1(k);
    const PrivateResult r = SolvePrivateExact(inst, RuleUtility(inst));
    ASSERT_EQ(r.status, LpStatus::kOptimal);
    EXPECT_NEAR(r.value, expected[k - 1], 1e-9);
    ExpectSound(inst, RuleUtility(inst), r, k);
  }
}

TEST(SolvePrivateExact, GapInstance) {
  const Instance inst = ptest::GapInstance();
  const PrivateResult r = SolvePrivateExact(inst, RuleUtility(inst));
  ASSERT_EQ(r.status, LpStatus::kOptimal);
  EXPECT_NEAR(r.value, 0.5, 1e-9);
}

TEST(SolvePrivateExact, DominatesFullyInformative) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 30; ++trial) {
    const Instance inst =
        ptest::RandomInstance(rng, 2, 3, 3, trial % 2 ? VotingRule::Plurality()
                                                      : VotingRule::KVoting(2));
    const SenderUtility f = RuleUtility(inst);
    const PrivateResult r = SolvePrivateExact(inst, f);
    ASSERT_EQ(r.status, LpStatus::kOptimal);
    std::vector<Profile> rows;
    for (int s = 0; s < inst.num_states(); ++s) rows.push_back(StateBestResponses(inst, s));
    EXPECT_GE(r.value, SenderValue(inst, f, DeterministicScheme(rows)) - 1e-9);
    ExpectSound(inst, f, r, trial);
  }
}

TEST(SolvePrivateExact, ExactArithmeticAgrees) {
  std::mt19937_64 rng(13);
  PrivateOptions exact;
  exact.lp.exact_arithmetic = true;
  for (int trial = 0; trial < 8; ++trial) {
    const Instance inst = ptest::RandomInstance(rng, 2, 3, 2, VotingRule::KVoting(2),
                                                true, 4);
    const SenderUtility f = RuleUtility(inst);
    const PrivateResult a = SolvePrivateExact(inst, f);
    const PrivateResult b = SolvePrivateExact(inst, f, exact);
    ASSERT_EQ(b.status, LpStatus::kOptimal);
    EXPECT_NEAR(a.value, b.value, 1e-9);
    EXPECT_FALSE(b.exact_value.empty());
  }
}

TEST(SolvePrivateExact, SizeGuard) {
  std::mt19937_64 rng(14);
  const Instance inst = ptest::RandomInstance(rng, 2, 10, 3, VotingRule::KVoting(2));
  try {
    SolvePrivateExact(inst, RuleUtility(inst));
    FAIL() << "expected a size guard";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSizeGuard);
  }
}

TEST(SolvePrivateColgen, PluralityMatchesFullLp) {
  std::mt19937_64 rng(404);
  for (int trial = 0; trial < 100; ++trial) {
    const Instance inst = ptest::RandomInstance(
        rng, ptest::UniformInt(rng, 1, 3), ptest::UniformInt(rng, 1, 4),
        ptest::UniformInt(rng, 2, 3), VotingRule::Plurality(), true,
        trial % 3 == 0 ? 4 : 0);
    const SenderUtility f = RuleUtility(inst);
    const PrivateResult exact = SolvePrivateExact(inst, f);
    const PrivateResult cg = SolvePrivateColgen(inst, f, OracleFor(inst, f));
    ASSERT_EQ(cg.status, LpStatus::kOptimal);
    EXPECT_TRUE(cg.converged);
    EXPECT_NEAR(cg.value, exact.value, 1e-6) << "trial " << trial;
    ExpectSound(inst, f, cg, trial);
  }
}

TEST(SolvePrivateColgen, AnonymousMatchesFullLp) {
  std::mt19937_64 rng(505);
  for (int trial = 0; trial < 100; ++trial) {
    const Instance inst = ptest::RandomInstance(
        rng, ptest::UniformInt(rng, 1, 3), ptest::UniformInt(rng, 1, 4),
        ptest::UniformInt(rng, 2, 3), VotingRule::KVoting(1));
    const SenderUtility f =
        SenderUtility::Anonymous(ptest::RandomAnonymousTables(rng, inst));
    ASSERT_TRUE(f.Validate(inst).ok());
    const PrivateResult exact = SolvePrivateExact(inst, f);
    const PrivateResult cg = SolvePrivateColgen(inst, f, OracleFor(inst, f));
    ASSERT_EQ(cg.status, LpStatus::kOptimal);
    EXPECT_TRUE(cg.converged);
    EXPECT_NEAR(cg.value, exact.value, 1e-6) << "trial " << trial;
    ExpectSound(inst, f, cg, trial);
  }
}

TEST(SolvePrivateColgen, BruteForceOracleAgrees) {
  std::mt19937_64 rng(606);
  for (int trial = 0; trial < 30; ++trial) {
    const Instance inst = ptest::RandomInstance(rng, 2, 3, 3, VotingRule::Plurality());
    const SenderUtility f = RuleUtility(inst);
    const PrivateResult a = SolvePrivateColgen(inst, f, OracleFor(inst, f));
    const PrivateResult b = SolvePrivateColgen(inst, f, BruteOracle(inst, f));
    EXPECT_NEAR(a.value, b.value, 1e-7) << "trial " << trial;
  }
}

TEST(SolvePrivateColgen, KVotingThroughAnonymousOracle) {
  const Instance inst = ptest::Example1(3);
  const SenderUtility f = RuleUtility(inst);
  const PrivateResult r = SolvePrivateColgen(inst, f, OracleFor(inst, f));
  ASSERT_EQ(r.status, LpStatus::kOptimal);
  EXPECT_NEAR(r.value, 5.0 / 6, 1e-9);
  EXPECT_GT(r.num_columns, 3);
  for (const ColumnRecord& col : r.added) EXPECT_GT(col.reduced_cost, 1e-7);
}

TEST(SolvePrivateColgen, RoundLimitIsReported) {
  const Instance inst = ptest::Example1(3);
  const SenderUtility f = RuleUtility(inst);
  PrivateOptions options;
  options.max_rounds = 1;
  const PrivateResult r = SolvePrivateColgen(inst, f, OracleFor(inst, f), options);
  EXPECT_FALSE(r.converged);
}

}  // namespace
}  // namespace persuasion
