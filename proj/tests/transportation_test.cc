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

#include "persuasion/transportation.h"

#include <gtest/gtest.h>

#include <cmath>
#include <optional>
#include <random>

#include "persuasion/errors.h"
#include "test_util.h"

namespace persuasion {
namespace {

std::optional<double> BruteTransportation(const TransportationProblem& t) {
  std::optional<double> best;
  ptest::ForEachProfile(t.num_receivers(), t.num_candidates(), [&](const Profile& p) {
    const CountVector counts = ptest::Counts(p, t.num_candidates());
    for (int c = 0; c < t.num_candidates(); ++c) {
      const auto& req = t.columns[c];
      if (req.kind == ColumnRequirement::Kind::kExact && counts[c] != req.count) return;
      if (req.kind == ColumnRequirement::Kind::kAtMost && counts[c] > req.count) return;
    }
    const double v = ptest::WeightOf(t.weight, p);
    if (!best || v > *best) best = v;
  });
  return best;
}

TEST(SolveTransportation, MatchesBruteForce) {
  std::mt19937_64 rng(42);
  int feasible = 0, infeasible = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int R = ptest::UniformInt(rng, 1, 6);
    const int C = ptest::UniformInt(rng, 1, 3);
    TransportationProblem t;
    t.weight = ptest::RandomWeights(rng, R, C);
    for (int c = 0; c < C; ++c) {
      const int count = ptest::UniformInt(rng, 0, R);
      t.columns.push_back(ptest::UniformInt(rng, 0, 1) ? ColumnRequirement::Exact(count)
                                                       : ColumnRequirement::AtMost(count));
    }
    const auto expected = BruteTransportation(t);
    const auto got = SolveTransportation(t);
    ASSERT_EQ(expected.has_value(), got.has_value()) << "trial " << trial;
    if (!expected) {
      ++infeasible;
      continue;
    }
    ++feasible;
    EXPECT_NEAR(got->value, *expected, 1e-9) << "trial " << trial;
    // The reported profile must meet the requirements and carry its value.
    ASSERT_EQ(static_cast<int>(got->profile.size()), R);
    EXPECT_NEAR(ptest::WeightOf(t.weight, got->profile), got->value, 1e-9);
    const CountVector counts = ptest::Counts(got->profile, C);
    for (int c = 0; c < C; ++c) {
      if (t.columns[c].kind == ColumnRequirement::Kind::kExact) {
        EXPECT_EQ(counts[c], t.columns[c].count);
      } else {
        EXPECT_LE(counts[c], t.columns[c].count);
      }
    }
  }
  EXPECT_GT(feasible, 100);
  EXPECT_GT(infeasible, 20);
}

TEST(SolveTransportation, UnconstrainedIsRowArgmax) {
  TransportationProblem t;
  t.weight = {{1, 5, 2}, {-1, -3, -2}, {0, 0, 4}};
  t.columns.assign(3, ColumnRequirement::AtMost(3));
  const auto got = SolveTransportation(t);
  ASSERT_TRUE(got);
  EXPECT_EQ(got->profile, (Profile{1, 0, 2}));
  EXPECT_DOUBLE_EQ(got->value, 8.0);
}

TEST(SolveTransportation, MalformedInputThrows) {
  TransportationProblem ragged;
  ragged.weight = {{1, 2}, {1}};
  ragged.columns.assign(2, ColumnRequirement::AtMost(2));
  EXPECT_THROW(SolveTransportation(ragged), Error);

  TransportationProblem negative;
  negative.weight = {{1, 2}};
  negative.columns = {ColumnRequirement::Exact(-1), ColumnRequirement::AtMost(1)};
  EXPECT_THROW(SolveTransportation(negative), Error);

  TransportationProblem nonfinite;
  nonfinite.weight = {{INFINITY, 2}};
  nonfinite.columns.assign(2, ColumnRequirement::AtMost(1));
  EXPECT_THROW(SolveTransportation(nonfinite), Error);
}

}  // namespace
}  // namespace persuasion
