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

#include "persuasion/lp.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>
#include <sstream>
#include <vector>

#include "persuasion/errors.h"

namespace persuasion {
namespace {

// Dense LP data for the vertex-enumeration reference.
struct DenseLp {
  std::vector<std::vector<double>> a;
  std::vector<Relation> rel;
  std::vector<double> b;
  std::vector<double> c;
  std::vector<double> lower;
  std::vector<double> upper;
};

LpProblem ToProblem(const DenseLp& d) {
  LpProblem lp;
  for (std::size_t j = 0; j < d.c.size(); ++j) {
    lp.AddVariable(d.lower[j], d.upper[j], d.c[j]);
  }
  for (std::size_t i = 0; i < d.a.size(); ++i) {
    std::vector<LpProblem::Term> terms;
    for (std::size_t j = 0; j < d.c.size(); ++j) {
      if (d.a[i][j] != 0.0) terms.push_back({static_cast<int>(j), d.a[i][j]});
    }
    lp.AddConstraint(terms, d.rel[i], d.b[i]);
  }
  return lp;
}

// Solves the square system m x = rhs by Gaussian elimination with partial
// pivoting; nullopt when (numerically) singular.
std::optional<std::vector<double>> SolveSquare(std::vector<std::vector<double>> m,
                                               std::vector<double> rhs) {
  const int n = static_cast<int>(rhs.size());
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r) {
      if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
    }
    if (std::abs(m[piv][col]) < 1e-9) return std::nullopt;
    std::swap(m[piv], m[col]);
    std::swap(rhs[piv], rhs[col]);
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      const double f = m[r][col] / m[col][col];
      if (f == 0.0) continue;
      for (int k = col; k < n; ++k) m[r][k] -= f * m[col][k];
      rhs[r] -= f * rhs[col];
    }
  }
  std::vector<double> x(n);
  for (int i = 0; i < n; ++i) x[i] = rhs[i] / m[i][i];
  return x;
}

// Best objective over all basic solutions of a box-bounded LP: every
// variable sits at a bound or is basic, and as many rows as basic variables
// (all equality rows among them) are tight.
std::optional<double> VertexOracle(const DenseLp& d) {
  const int n = static_cast<int>(d.c.size());
  const int m = static_cast<int>(d.a.size());
  std::vector<int> eq_rows, ineq_rows;
  for (int i = 0; i < m; ++i) {
    (d.rel[i] == Relation::kEqual ? eq_rows : ineq_rows).push_back(i);
  }
  std::optional<double> best;
  std::vector<int> status(n, 0);  // 0 lower, 1 upper, 2 basic
  auto feasible = [&](const std::vector<double>& x) {
    for (int j = 0; j < n; ++j) {
      if (x[j] < d.lower[j] - 1e-9 || x[j] > d.upper[j] + 1e-9) return false;
    }
    for (int i = 0; i < m; ++i) {
      double lhs = 0.0;
      for (int j = 0; j < n; ++j) lhs += d.a[i][j] * x[j];
      if (d.rel[i] == Relation::kLessEqual && lhs > d.b[i] + 1e-9) return false;
      if (d.rel[i] == Relation::kGreaterEqual && lhs < d.b[i] - 1e-9) return false;
      if (d.rel[i] == Relation::kEqual && std::abs(lhs - d.b[i]) > 1e-9) return false;
    }
    return true;
  };
  while (true) {
    std::vector<int> basic;
    std::vector<double> x(n);
    for (int j = 0; j < n; ++j) {
      if (status[j] == 2) basic.push_back(j);
      x[j] = status[j] == 1 ? d.upper[j] : d.lower[j];
    }
    const int nb = static_cast<int>(basic.size());
    const int extra = nb - static_cast<int>(eq_rows.size());
    if (extra >= 0 && extra <= static_cast<int>(ineq_rows.size())) {
      std::vector<int> pick(ineq_rows.size(), 0);
      std::fill(pick.end() - extra, pick.end(), 1);
      do {
        std::vector<int> rows = eq_rows;
        for (std::size_t i = 0; i < pick.size(); ++i) {
          if (pick[i]) rows.push_back(ineq_rows[i]);
        }
        std::vector<std::vector<double>> sys(nb, std::vector<double>(nb));
        std::vector<double> rhs(nb);
        for (int r = 0; r < nb; ++r) {
          rhs[r] = d.b[rows[r]];
          for (int j = 0; j < n; ++j) {
            if (status[j] != 2) rhs[r] -= d.a[rows[r]][j] * x[j];
          }
          for (int k = 0; k < nb; ++k) sys[r][k] = d.a[rows[r]][basic[k]];
        }
        std::vector<double> point = x;
        bool ok = true;
        if (nb > 0) {
          const auto sol = SolveSquare(sys, rhs);
          if (!sol) ok = false;
          else for (int k = 0; k < nb; ++k) point[basic[k]] = (*sol)[k];
        }
        if (ok && feasible(point)) {
          double obj = 0.0;
          for (int j = 0; j < n; ++j) obj += d.c[j] * point[j];
          if (!best || obj > *best) best = obj;
        }
      } while (std::next_permutation(pick.begin(), pick.end()));
    }
    int j = 0;
    while (j < n && status[j] == 2) status[j++] = 0;
    if (j == n) break;
    ++status[j];
  }
  return best;
}

DenseLp RandomLp(std::mt19937_64& rng, int n, int m) {
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  std::uniform_int_distribution<int> pick(0, 9);
  DenseLp d;
  d.c.resize(n);
  for (double& v : d.c) v = coef(rng);
  for (int j = 0; j < n; ++j) {
    const double lo = std::round(coef(rng) * 4) / 2;
    d.lower.push_back(lo);
    d.upper.push_back(lo + 0.5 + std::abs(coef(rng)) * 3);
  }
  for (int i = 0; i < m; ++i) {
    std::vector<double> row(n);
    for (double& v : row) v = pick(rng) < 3 ? 0.0 : std::round(coef(rng) * 8) / 4;
    d.a.push_back(row);
    const int r = pick(rng);
    d.rel.push_back(r < 5 ? Relation::kLessEqual
                          : (r < 8 ? Relation::kGreaterEqual : Relation::kEqual));
    d.b.push_back(std::round(coef(rng) * 6) / 2);
  }
  return d;
}

void ExpectDualCertificate(const LpProblem& lp, const LpSolution& sol) {
  ASSERT_EQ(sol.duals.size(), static_cast<std::size_t>(lp.num_constraints()));
  ASSERT_EQ(sol.reduced_costs.size(), static_cast<std::size_t>(lp.num_variables()));
  EXPECT_NEAR(DualObjective(lp, sol), sol.objective, 1e-6);
  for (int i = 0; i < lp.num_constraints(); ++i) {
    const Relation rel = lp.constraints()[i].relation;
    if (rel == Relation::kLessEqual) EXPECT_GE(sol.duals[i], -1e-7);
    if (rel == Relation::kGreaterEqual) EXPECT_LE(sol.duals[i], 1e-7);
  }
  std::vector<double> rc(lp.num_variables());
  for (int j = 0; j < lp.num_variables(); ++j) rc[j] = lp.variables()[j].objective;
  for (int i = 0; i < lp.num_constraints(); ++i) {
    for (const auto& t : lp.constraints()[i].terms) rc[t.var] -= t.coef * sol.duals[i];
  }
  for (int j = 0; j < lp.num_variables(); ++j) {
    EXPECT_NEAR(rc[j], sol.reduced_costs[j], 1e-7);
    const auto& v = lp.variables()[j];
    // A positive reduced cost pins the variable at its upper bound, a
    // negative one at its lower bound.
    if (sol.reduced_costs[j] > 1e-7) EXPECT_NEAR(sol.primal[j], v.upper, 1e-7);
    if (sol.reduced_costs[j] < -1e-7) EXPECT_NEAR(sol.primal[j], v.lower, 1e-7);
  }
}

TEST(SolveLp, MatchesVertexEnumerationOnRandomBoxedLps) {
  std::mt19937_64 rng(2026);
  int optimal = 0, infeasible = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 5;
    const int m = 1 + (trial / 5) % 6;
    const DenseLp d = RandomLp(rng, n, m);
    const LpProblem lp = ToProblem(d);
    const auto expected = VertexOracle(d);
    const LpSolution sol = SolveLp(lp);
    if (!expected) {
      EXPECT_EQ(sol.status, LpStatus::kInfeasible) << "trial " << trial;
      ++infeasible;
      continue;
    }
    ++optimal;
    ASSERT_EQ(sol.status, LpStatus::kOptimal) << "trial " << trial;
    EXPECT_NEAR(sol.objective, *expected, 1e-7) << "trial " << trial;
    EXPECT_LE(MaxPrimalViolation(lp, sol.primal), 1e-7);
    ExpectDualCertificate(lp, sol);
  }
  // The generator should exercise both outcomes.
  EXPECT_GT(optimal, 20);
  EXPECT_GT(infeasible, 3);
}

TEST(SolveLp, ExactArithmeticAgrees) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    const DenseLp d = RandomLp(rng, 2 + trial % 4, 1 + trial % 5);
    const LpProblem lp = ToProblem(d);
    const LpSolution approx = SolveLp(lp);
    LpOptions exact;
    exact.exact_arithmetic = true;
    const LpSolution rational = SolveLp(lp, exact);
    ASSERT_EQ(approx.status, rational.status) << "trial " << trial;
    if (approx.status != LpStatus::kOptimal) continue;
    EXPECT_NEAR(approx.objective, rational.objective, 1e-9);
    EXPECT_FALSE(rational.exact_objective.empty());
    ExpectDualCertificate(lp, rational);
  }
}

TEST(SolveLp, BlandFromTheStartAgrees) {
  std::mt19937_64 rng(7);
  LpOptions bland;
  bland.degenerate_pivots_before_bland = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const LpProblem lp = ToProblem(RandomLp(rng, 3 + trial % 3, 2 + trial % 4));
    const LpSolution a = SolveLp(lp);
    const LpSolution b = SolveLp(lp, bland);
    ASSERT_EQ(a.status, b.status);
    if (a.status == LpStatus::kOptimal) EXPECT_NEAR(a.objective, b.objective, 1e-8);
  }
}

TEST(SolveLp, CyclingExampleTerminates) {
  // Beale's example cycles under the textbook largest-coefficient rule.
  LpProblem lp;
  const int x4 = lp.AddVariable(0, kInfinity, 0.75);
  const int x5 = lp.AddVariable(0, kInfinity, -20);
  const int x6 = lp.AddVariable(0, kInfinity, 0.5);
  const int x7 = lp.AddVariable(0, kInfinity, -6);
  lp.AddConstraint({{x4, 0.25}, {x5, -8}, {x6, -1}, {x7, 9}}, Relation::kLessEqual, 0);
  lp.AddConstraint({{x4, 0.5}, {x5, -12}, {x6, -0.5}, {x7, 3}}, Relation::kLessEqual, 0);
  lp.AddConstraint({{x6, 1}}, Relation::kLessEqual, 1);
  for (bool exact : {false, true}) {
    LpOptions options;
    options.exact_arithmetic = exact;
    const LpSolution sol = SolveLp(lp, options);
    ASSERT_EQ(sol.status, LpStatus::kOptimal);
    EXPECT_NEAR(sol.objective, 1.25, 1e-9);
  }
}

TEST(SolveLp, FreeVariablesAndEqualities) {
  // max x + y, x - y = 1, x + 2y <= 4, x, y free: x = 2, y = 1.
  LpProblem lp;
  const int x = lp.AddVariable(-kInfinity, kInfinity, 1);
  const int y = lp.AddVariable(-kInfinity, kInfinity, 1);
  lp.AddConstraint({{x, 1}, {y, -1}}, Relation::kEqual, 1);
  lp.AddConstraint({{x, 1}, {y, 2}}, Relation::kLessEqual, 4);
  const LpSolution sol = SolveLp(lp);
  ASSERT_EQ(sol.status, LpStatus::kOptimal);
  EXPECT_NEAR(sol.primal[x], 2, 1e-9);
  EXPECT_NEAR(sol.primal[y], 1, 1e-9);
  EXPECT_NEAR(sol.objective, 3, 1e-9);
  ExpectDualCertificate(lp, sol);
}

TEST(SolveLp, UpperBoundedOnlyVariable) {
  // max x with x <= -2 and no lower bound.
  LpProblem lp;
  const int x = lp.AddVariable(-kInfinity, -2, 1);
  const LpSolution sol = SolveLp(lp);
  ASSERT_EQ(sol.status, LpStatus::kOptimal);
  EXPECT_NEAR(sol.primal[x], -2, 1e-12);
}

TEST(SolveLp, InfeasibleAndUnbounded) {
  LpProblem infeasible;
  const int x = infeasible.AddVariable(0, kInfinity, 1);
  infeasible.AddConstraint({{x, 1}}, Relation::kLessEqual, 1);
  infeasible.AddConstraint({{x, 1}}, Relation::kGreaterEqual, 2);
  EXPECT_EQ(SolveLp(infeasible).status, LpStatus::kInfeasible);

  LpProblem unbounded;
  const int a = unbounded.AddVariable(0, kInfinity, 1);
  const int b = unbounded.AddVariable(0, kInfinity, 0);
  unbounded.AddConstraint({{a, 1}, {b, -1}}, Relation::kLessEqual, 1);
  EXPECT_EQ(SolveLp(unbounded).status, LpStatus::kUnbounded);
}

TEST(SolveLp, IterationLimit) {
  std::mt19937_64 rng(3);
  LpOptions options;
  options.max_iterations = 1;
  int limited = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const LpSolution sol = SolveLp(ToProblem(RandomLp(rng, 6, 6)), options);
    if (sol.status == LpStatus::kIterationLimit) ++limited;
  }
  EXPECT_GT(limited, 0);
}

TEST(LpProblem, ValidateRejectsBadData) {
  LpProblem lp;
  const int x = lp.AddVariable(0, 1, 1);
  lp.AddConstraint({{x + 5, 1.0}}, Relation::kLessEqual, 1);
  EXPECT_THROW(lp.Validate(), Error);

  LpProblem crossed;
  crossed.AddVariable(2, 1, 0);
  EXPECT_THROW(crossed.Validate(), Error);

  LpProblem nan;
  const int y = nan.AddVariable(0, 1, std::nan(""));
  nan.AddConstraint({{y, 1}}, Relation::kLessEqual, 1);
  EXPECT_THROW(SolveLp(nan), Error);
}

TEST(WriteLpFormat, ContainsSectionsAndNames) {
  LpProblem lp;
  const int x = lp.AddVariable(0, 3, 2, "x(1,2)");
  const int y = lp.AddVariable(-kInfinity, kInfinity, -1, "y");
  lp.AddConstraint({{x, 1}, {y, -2}}, Relation::kGreaterEqual, -1, "row");
  std::ostringstream os;
  WriteLpFormat(lp, os);
  const std::string text = os.str();
  EXPECT_NE(text.find("Maximize"), std::string::npos);
  EXPECT_NE(text.find("Subject To"), std::string::npos);
  EXPECT_NE(text.find("free"), std::string::npos);
  EXPECT_NE(text.find("End"), std::string::npos);
  // Parentheses and commas are not legal in LP-format identifiers.
  EXPECT_EQ(text.find("x(1,2)"), std::string::npos);
}

}  // namespace
}  // namespace persuasion
