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

#ifndef PERSUASION_LP_H_
#define PERSUASION_LP_H_

// A small dense two-phase primal simplex for maximization problems with
// arbitrary variable bounds and mixed row relations. It is sized for the
// desk-scale programs built in this library (up to a few tens of thousands
// of columns and a few hundred rows) and reports dual values, which the
// column-generation master consumes.
//
// Pivoting uses Dantzig's rule with a Harris ratio test, and falls back to
// Bland's rule during long runs of degenerate pivots until the objective
// moves again. No step depends on anything but the input, so solves are
// reproducible. In floating point the tableau is refactored from the
// original rows every 100 pivots and before optimality or unboundedness is
// declared. The same code runs over exact rationals (GMP), where Bland's
// rule alone guarantees termination.

#include <cstddef>
#include <iosfwd>
#include <limits>
#include <string>
#include <vector>

namespace persuasion {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

enum class Relation { kLessEqual, kEqual, kGreaterEqual };

enum class LpStatus {
  kOptimal,
  kInfeasible,
  kUnbounded,
  kIterationLimit,
  kNumericalFailure,
};

const char* LpStatusName(LpStatus status);

class LpProblem {
 public:
  struct Variable {
    std::string name;
    double lower = 0.0;
    double upper = kInfinity;
    double objective = 0.0;
  };
  struct Term {
    int var;
    double coef;
  };
  struct Constraint {
    std::string name;
    std::vector<Term> terms;
    Relation relation = Relation::kLessEqual;
    double rhs = 0.0;
  };

  // Objective sense is always maximize.
  int AddVariable(double lower, double upper, double objective,
                  std::string name = {});
  int AddConstraint(std::vector<Term> terms, Relation relation, double rhs,
                    std::string name = {});
  void AddTerm(int row, int var, double coef);
  void SetObjective(int var, double coef) { variables_[var].objective = coef; }

  int num_variables() const { return static_cast<int>(variables_.size()); }
  int num_constraints() const { return static_cast<int>(constraints_.size()); }
  const std::vector<Variable>& variables() const { return variables_; }
  const std::vector<Constraint>& constraints() const { return constraints_; }

  // Throws Error(kInvalidArgument) on dangling indices, NaN/inf data or
  // crossed bounds.
  void Validate() const;

 private:
  std::vector<Variable> variables_;
  std::vector<Constraint> constraints_;
};

struct LpOptions {
  bool exact_arithmetic = false;
  int max_iterations = 200000;
  // Pivot, optimality and phase-one feasibility tolerance (ignored in exact
  // mode).
  double tolerance = 1e-9;
  // Consecutive degenerate pivots before switching to Bland's rule.
  int degenerate_pivots_before_bland = 200;
  // A floating-point solve that ends in kNumericalFailure (including a final
  // primal violation above 1e-9) is redone in rationals when the problem has
  // at most this many variables. 0 disables the retry.
  std::size_t exact_fallback_max_variables = 2000;
};

// Dual convention: duals[i] is the marginal change of the optimum per unit
// increase of constraint i's right-hand side, so duals are >= 0 on <= rows
// and <= 0 on >= rows. reduced_costs[j] = c_j - sum_i a_ij duals[i].
struct LpSolution {
  LpStatus status = LpStatus::kNumericalFailure;
  double objective = 0.0;
  std::vector<double> primal;
  std::vector<double> duals;
  std::vector<double> reduced_costs;
  int iterations = 0;
  // Exact optimum as "p/q" when solved in rational arithmetic.
  std::string exact_objective;
};

LpSolution SolveLp(const LpProblem& problem, const LpOptions& options = {});

// Bound-aware dual objective sum_i b_i y_i + sum_j (rc_j > 0 ? rc_j u_j :
// rc_j l_j). Equals the primal optimum for an optimal basis.
double DualObjective(const LpProblem& problem, const LpSolution& solution);

// Largest constraint or bound violation of `primal`.
double MaxPrimalViolation(const LpProblem& problem,
                          const std::vector<double>& primal);

// CPLEX LP text format, for cross-checking with external solvers.
void WriteLpFormat(const LpProblem& problem, std::ostream& os);

}  // namespace persuasion

#endif  // PERSUASION_LP_H_
