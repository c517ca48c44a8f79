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

#include <gmpxx.h>

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <string>
#include <type_traits>
#include <utility>

#include "persuasion/errors.h"

namespace persuasion {

const char* LpStatusName(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal:
      return "optimal";
    case LpStatus::kInfeasible:
      return "infeasible";
    case LpStatus::kUnbounded:
      return "unbounded";
    case LpStatus::kIterationLimit:
      return "iteration-limit";
    case LpStatus::kNumericalFailure:
      return "numerical-failure";
  }
  return "unknown";
}

int LpProblem::AddVariable(double lower, double upper, double objective,
                           std::string name) {
  if (name.empty()) name = "x" + std::to_string(variables_.size());
  variables_.push_back({std::move(name), lower, upper, objective});
  return static_cast<int>(variables_.size()) - 1;
}

int LpProblem::AddConstraint(std::vector<Term> terms, Relation relation,
                             double rhs, std::string name) {
  if (name.empty()) name = "c" + std::to_string(constraints_.size());
  constraints_.push_back({std::move(name), std::move(terms), relation, rhs});
  return static_cast<int>(constraints_.size()) - 1;
}

void LpProblem::AddTerm(int row, int var, double coef) {
  constraints_.at(row).terms.push_back({var, coef});
}

void LpProblem::Validate() const {
  for (const auto& v : variables_) {
    if (std::isnan(v.lower) || std::isnan(v.upper) || v.lower > v.upper ||
        v.lower == kInfinity || v.upper == -kInfinity) {
      throw Error(ErrorCode::kInvalidArgument,
                  "variable " + v.name + " has invalid bounds");
    }
    if (!std::isfinite(v.objective)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "variable " + v.name + " has a non-finite objective");
    }
  }
  for (const auto& c : constraints_) {
    if (!std::isfinite(c.rhs)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "constraint " + c.name + " has a non-finite rhs");
    }
    for (const auto& t : c.terms) {
      if (t.var < 0 || t.var >= num_variables()) {
        throw Error(ErrorCode::kInvalidArgument,
                    "constraint " + c.name + " references an unknown variable");
      }
      if (!std::isfinite(t.coef)) {
        throw Error(ErrorCode::kInvalidArgument,
                    "constraint " + c.name + " has a non-finite coefficient");
      }
    }
  }
}

namespace {

inline double ToDouble(double x) { return x; }
inline double ToDouble(const mpq_class& x) { return x.get_d(); }

inline std::string ToText(double x) { return std::to_string(x); }
inline std::string ToText(const mpq_class& x) { return x.get_str(); }

template <typename T>
T Abs(const T& x) {
  return x < 0 ? T(-x) : x;
}

// Each original variable becomes one or two nonnegative standard columns:
//   x = offset + sign * column            (one finite bound)
//   x = column_plus - column_minus         (free)
struct VariableMap {
  int column = -1;
  int minus_column = -1;
  double offset = 0.0;
  int sign = 1;
};

// Pivots between two rebuilds of the floating-point tableau.
inline constexpr int kReinvertInterval = 100;

template <typename T>
class DenseSimplex {
 public:
  DenseSimplex(const LpProblem& problem, const LpOptions& options)
      : problem_(problem), options_(options) {
    tol_ = options.exact_arithmetic ? T(0) : T(options.tolerance);
    pivot_tol_ = options.exact_arithmetic ? T(0) : T(1e-9);
    drop_tol_ = options.exact_arithmetic ? T(0) : T(1e-12);
  }

  LpSolution Solve() {
    BuildStandardForm();
    LpSolution solution;
    solution.status = RunPhaseOne();
    if (solution.status == LpStatus::kOptimal) {
      solution.status = RunPhaseTwo();
    }
    solution.iterations = iterations_;
    if (solution.status == LpStatus::kOptimal) Extract(solution);
    return solution;
  }

 private:
  T& At(int row, int col) { return tableau_[row * stride_ + col]; }
  const T& At(int row, int col) const { return tableau_[row * stride_ + col]; }
  T& Rhs(int row) { return tableau_[row * stride_ + num_columns_]; }

  void BuildStandardForm() {
    const auto& vars = problem_.variables();
    const auto& cons = problem_.constraints();
    var_map_.resize(vars.size());
    int next = 0;
    struct BoundRow {
      int column;
      double width;
    };
    std::vector<BoundRow> bound_rows;
    for (std::size_t j = 0; j < vars.size(); ++j) {
      const auto& v = vars[j];
      VariableMap& map = var_map_[j];
      if (v.lower > -kInfinity) {
        map.column = next++;
        map.offset = v.lower;
        map.sign = 1;
        if (v.upper < kInfinity) {
          bound_rows.push_back({map.column, v.upper - v.lower});
        }
      } else if (v.upper < kInfinity) {
        map.column = next++;
        map.offset = v.upper;
        map.sign = -1;
      } else {
        map.column = next++;
        map.minus_column = next++;
      }
    }
    num_structural_ = next;
    num_original_rows_ = static_cast<int>(cons.size());
    num_rows_ = num_original_rows_ + static_cast<int>(bound_rows.size());

    // Row data in sparse form before normalization.
    struct Row {
      std::vector<std::pair<int, T>> entries;
      Relation relation;
      T rhs;
    };
    std::vector<Row> rows;
    rows.reserve(num_rows_);
    for (const auto& c : cons) {
      Row row{{}, c.relation, T(c.rhs)};
      for (const auto& term : c.terms) {
        const VariableMap& map = var_map_[term.var];
        const T a(term.coef);
        if (map.minus_column >= 0) {
          row.entries.emplace_back(map.column, a);
          row.entries.emplace_back(map.minus_column, T(-a));
        } else {
          row.rhs -= a * T(map.offset);
          row.entries.emplace_back(map.column, map.sign > 0 ? a : T(-a));
        }
      }
      rows.push_back(std::move(row));
    }
    for (const auto& b : bound_rows) {
      rows.push_back({{{b.column, T(1)}}, Relation::kLessEqual, T(b.width)});
    }

    // Normalize to nonnegative right-hand sides, then lay out
    // [structural | slack per inequality | artificial per >= or = row].
    row_sign_.assign(num_rows_, 1);
    int num_slack = 0;
    int num_artificial = 0;
    for (int i = 0; i < num_rows_; ++i) {
      Row& row = rows[i];
      if (row.rhs < 0) {
        row_sign_[i] = -1;
        row.rhs = -row.rhs;
        for (auto& e : row.entries) e.second = -e.second;
        if (row.relation == Relation::kLessEqual) {
          row.relation = Relation::kGreaterEqual;
        } else if (row.relation == Relation::kGreaterEqual) {
          row.relation = Relation::kLessEqual;
        }
      }
      if (row.relation != Relation::kEqual) ++num_slack;
      if (row.relation != Relation::kLessEqual) ++num_artificial;
    }
    first_slack_ = num_structural_;
    first_artificial_ = first_slack_ + num_slack;
    num_columns_ = first_artificial_ + num_artificial;
    stride_ = num_columns_ + 1;
    tableau_.assign(static_cast<std::size_t>(num_rows_) * stride_, T(0));
    basis_.assign(num_rows_, -1);
    initial_column_.assign(num_rows_, -1);

    int slack = first_slack_;
    int artificial = first_artificial_;
    for (int i = 0; i < num_rows_; ++i) {
      const Row& row = rows[i];
      for (const auto& [col, a] : row.entries) At(i, col) += a;
      Rhs(i) = row.rhs;
      switch (row.relation) {
        case Relation::kLessEqual:
          At(i, slack) = T(1);
          basis_[i] = slack;
          initial_column_[i] = slack;
          ++slack;
          break;
        case Relation::kGreaterEqual:
          At(i, slack) = T(-1);
          ++slack;
          At(i, artificial) = T(1);
          basis_[i] = artificial;
          initial_column_[i] = artificial;
          ++artificial;
          break;
        case Relation::kEqual:
          At(i, artificial) = T(1);
          basis_[i] = artificial;
          initial_column_[i] = artificial;
          ++artificial;
          break;
      }
    }

    original_ = tableau_;

    cost_.assign(num_columns_, T(0));
    for (std::size_t j = 0; j < problem_.variables().size(); ++j) {
      const VariableMap& map = var_map_[j];
      const T c(problem_.variables()[j].objective);
      if (map.minus_column >= 0) {
        cost_[map.column] = c;
        cost_[map.minus_column] = -c;
      } else {
        cost_[map.column] = map.sign > 0 ? c : T(-c);
      }
    }
  }

  // Flushes round-off residue to an exact zero.
  void Clean(T& x) const {
    if (x != 0 && Abs(x) < drop_tol_) x = T(0);
  }

  // Slightly negative right-hand sides are rounding noise; treat them as zero
  // so ratios never go negative.
  static T Clamp(const T& x) { return x < 0 ? T(0) : x; }

  bool IsArtificial(int col) const { return col >= first_artificial_; }

  // reduced_[j] = cost_j - sum_i cost_{basis_i} * T[i][j] for `cost`.
  void PriceOut(const std::vector<T>& cost) {
    active_cost_ = cost;
    reduced_ = cost;
    for (int i = 0; i < num_rows_; ++i) {
      const T& cb = cost[basis_[i]];
      if (cb == 0) continue;
      for (int j = 0; j < num_columns_; ++j) {
        const T& a = At(i, j);
        if (a != 0) reduced_[j] -= cb * a;
      }
    }
  }

  // Rebuilds the tableau as B^{-1} [A | b] from the original rows and the
  // current basis, discarding the round-off accumulated by pivoting. Exact
  // arithmetic has nothing to discard.
  void Reinvert() {
    pivots_since_reinvert_ = 0;
    if constexpr (std::is_same_v<T, double>) {
      using RowMajor =
          Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
      const Eigen::Map<const RowMajor> full(original_.data(), num_rows_, stride_);
      Eigen::MatrixXd basis(num_rows_, num_rows_);
      for (int k = 0; k < num_rows_; ++k) basis.col(k) = full.col(basis_[k]);
      const Eigen::PartialPivLU<Eigen::MatrixXd> lu(basis);
      RowMajor fresh = lu.solve(full);
      // A singular or badly conditioned basis would make things worse.
      if (!fresh.allFinite() || (basis * fresh - full).cwiseAbs().maxCoeff() > 1e-9) {
        return;
      }
      for (int i = 0; i < num_rows_; ++i) {
        for (int j = 0; j <= num_columns_; ++j) {
          double x = fresh(i, j);
          if (std::abs(x) < 1e-11) x = 0.0;
          At(i, j) = x;
        }
        if (Rhs(i) < 0 && !(Rhs(i) < -tol_)) Rhs(i) = 0.0;
      }
      for (int k = 0; k < num_rows_; ++k) {
        for (int i = 0; i < num_rows_; ++i) At(i, basis_[k]) = i == k ? 1.0 : 0.0;
      }
      const std::vector<double> cost = active_cost_;
      PriceOut(cost);
    }
  }

  void Pivot(int row, int col) {
    const T pivot = At(row, col);
    T* prow = &tableau_[row * stride_];
    for (int j = 0; j <= num_columns_; ++j) {
      if (prow[j] != 0) prow[j] /= pivot;
    }
    prow[col] = T(1);
    nonzero_.clear();
    for (int j = 0; j <= num_columns_; ++j) {
      if (prow[j] != 0) nonzero_.push_back(j);
    }
    for (int i = 0; i < num_rows_; ++i) {
      if (i == row) continue;
      T* r = &tableau_[i * stride_];
      const T factor = r[col];
      if (factor == 0) continue;
      for (int j : nonzero_) {
        r[j] -= factor * prow[j];
        Clean(r[j]);
      }
      r[col] = T(0);
      T& rhs = r[num_columns_];
      if (rhs < 0 && !(rhs < -tol_)) rhs = T(0);
    }
    const T factor = reduced_[col];
    if (factor != 0) {
      for (int j : nonzero_) {
        if (j < num_columns_) {
          reduced_[j] -= factor * prow[j];
          Clean(reduced_[j]);
        }
      }
      reduced_[col] = T(0);
    }
    basis_[row] = col;
  }

  // Runs simplex iterations on the current reduced costs. Artificial columns
  // may only enter during phase one.
  LpStatus Iterate(bool allow_artificial) {
    int degenerate_run = 0;
    bool bland = false;
    while (true) {
      if (iterations_ >= options_.max_iterations) {
        return LpStatus::kIterationLimit;
      }
      int entering = -1;
      T best(0);
      const int limit = allow_artificial ? num_columns_ : first_artificial_;
      for (int j = 0; j < limit; ++j) {
        if (reduced_[j] > tol_) {
          if (bland) {
            entering = j;
            break;
          }
          if (entering < 0 || reduced_[j] > best) {
            entering = j;
            best = reduced_[j];
          }
        }
      }
      if (entering < 0) {
        if (pivots_since_reinvert_ == 0) return LpStatus::kOptimal;
        Reinvert();
        continue;
      }

      int leaving = -1;
      T best_ratio(0);
      if (bland || options_.exact_arithmetic) {
        // Textbook ratio test; ties keep the smallest basic index.
        for (int i = 0; i < num_rows_; ++i) {
          const T& a = At(i, entering);
          if (!(a > pivot_tol_)) continue;
          const T ratio = Clamp(Rhs(i)) / a;
          if (leaving < 0 || ratio < best_ratio - tol_ ||
              (!(ratio > best_ratio + tol_) && basis_[i] < basis_[leaving])) {
            leaving = i;
            best_ratio = ratio;
          }
        }
      } else {
        // Harris: bound the step with right-hand sides relaxed by the
        // tolerance, then take the largest pivot element within that bound.
        T bound(0);
        bool any = false;
        for (int i = 0; i < num_rows_; ++i) {
          const T& a = At(i, entering);
          if (!(a > pivot_tol_)) continue;
          const T relaxed = (Clamp(Rhs(i)) + tol_) / a;
          if (!any || relaxed < bound) bound = relaxed;
          any = true;
        }
        T best_pivot(0);
        for (int i = 0; any && i < num_rows_; ++i) {
          const T& a = At(i, entering);
          if (!(a > pivot_tol_)) continue;
          const T ratio = Clamp(Rhs(i)) / a;
          if (ratio > bound) continue;
          if (leaving < 0 || a > best_pivot) {
            leaving = i;
            best_ratio = ratio;
            best_pivot = a;
          }
        }
      }
      if (leaving < 0) {
        if (pivots_since_reinvert_ == 0) return LpStatus::kUnbounded;
        Reinvert();
        continue;
      }

      if (!(best_ratio > tol_)) {
        if (++degenerate_run >= options_.degenerate_pivots_before_bland) {
          bland = true;
        }
      } else {
        degenerate_run = 0;
        bland = false;
      }
      Pivot(leaving, entering);
      ++iterations_;
      if (++pivots_since_reinvert_ >= kReinvertInterval) Reinvert();
    }
  }

  LpStatus RunPhaseOne() {
    if (first_artificial_ == num_columns_) return LpStatus::kOptimal;
    std::vector<T> cost(num_columns_, T(0));
    for (int j = first_artificial_; j < num_columns_; ++j) cost[j] = T(-1);
    PriceOut(cost);
    const LpStatus status = Iterate(/*allow_artificial=*/true);
    if (status == LpStatus::kIterationLimit) return status;
    if (status != LpStatus::kOptimal) return LpStatus::kNumericalFailure;

    T infeasibility(0);
    T scale(1);
    for (int i = 0; i < num_rows_; ++i) {
      if (IsArtificial(basis_[i])) infeasibility += Rhs(i);
      if (Abs(Rhs(i)) > scale) scale = Abs(Rhs(i));
    }
    if (infeasibility > tol_ * scale * T(10)) return LpStatus::kInfeasible;

    // Drive remaining (zero-valued) artificials out of the basis. A row with
    // no usable pivot is redundant and keeps its artificial at zero.
    for (int i = 0; i < num_rows_; ++i) {
      if (!IsArtificial(basis_[i])) continue;
      int col = -1;
      T best(0);
      for (int j = 0; j < first_artificial_; ++j) {
        const T a = Abs(At(i, j));
        if (a > tol_ && a > best) {
          best = a;
          col = j;
        }
      }
      if (col >= 0) {
        Pivot(i, col);
        ++iterations_;
        ++pivots_since_reinvert_;
      }
    }
    return LpStatus::kOptimal;
  }

  LpStatus RunPhaseTwo() {
    PriceOut(cost_);
    return Iterate(/*allow_artificial=*/false);
  }

  void Extract(LpSolution& solution) {
    std::vector<T> column_value(num_columns_, T(0));
    for (int i = 0; i < num_rows_; ++i) column_value[basis_[i]] = Rhs(i);

    const auto& vars = problem_.variables();
    solution.primal.assign(vars.size(), 0.0);
    T objective(0);
    for (std::size_t j = 0; j < vars.size(); ++j) {
      const VariableMap& map = var_map_[j];
      T x;
      if (map.minus_column >= 0) {
        x = column_value[map.column] - column_value[map.minus_column];
      } else {
        x = T(map.offset) +
            (map.sign > 0 ? column_value[map.column]
                          : T(-column_value[map.column]));
      }
      solution.primal[j] = ToDouble(x);
      objective += T(vars[j].objective) * x;
    }
    solution.objective = ToDouble(objective);
    if (options_.exact_arithmetic) solution.exact_objective = ToText(objective);

    // y = c_B B^{-1}; column initial_column_[i] of the tableau is B^{-1} e_i.
    const auto& cons = problem_.constraints();
    solution.duals.assign(cons.size(), 0.0);
    std::vector<T> duals(cons.size(), T(0));
    for (int i = 0; i < num_original_rows_; ++i) {
      T y(0);
      const int col = initial_column_[i];
      for (int k = 0; k < num_rows_; ++k) {
        const T& cb = cost_[basis_[k]];
        if (cb != 0) {
          const T& a = At(k, col);
          if (a != 0) y += cb * a;
        }
      }
      if (row_sign_[i] < 0) y = -y;
      duals[i] = y;
      solution.duals[i] = ToDouble(y);
    }
    std::vector<T> reduced(vars.size());
    for (std::size_t j = 0; j < vars.size(); ++j) {
      reduced[j] = T(vars[j].objective);
    }
    for (std::size_t i = 0; i < cons.size(); ++i) {
      if (duals[i] == 0) continue;
      for (const auto& t : cons[i].terms) {
        reduced[t.var] -= T(t.coef) * duals[i];
      }
    }
    solution.reduced_costs.resize(vars.size());
    for (std::size_t j = 0; j < vars.size(); ++j) {
      solution.reduced_costs[j] = ToDouble(reduced[j]);
    }
  }

  const LpProblem& problem_;
  const LpOptions& options_;
  T tol_;
  T pivot_tol_;
  T drop_tol_;

  std::vector<VariableMap> var_map_;
  int num_structural_ = 0;
  int num_original_rows_ = 0;
  int num_rows_ = 0;
  int num_columns_ = 0;
  int first_slack_ = 0;
  int first_artificial_ = 0;
  int stride_ = 0;
  std::vector<T> tableau_;
  std::vector<T> original_;
  std::vector<T> cost_;
  std::vector<T> active_cost_;
  std::vector<T> reduced_;
  std::vector<int> basis_;
  std::vector<int> initial_column_;
  std::vector<int> row_sign_;
  std::vector<int> nonzero_;
  int iterations_ = 0;
  int pivots_since_reinvert_ = 0;
};

}  // namespace

namespace {
constexpr double kFeasibilityTolerance = 1e-9;
}  // namespace

LpSolution SolveLp(const LpProblem& problem, const LpOptions& options) {
  problem.Validate();
  LpSolution solution;
  if (options.exact_arithmetic) {
    solution = DenseSimplex<mpq_class>(problem, options).Solve();
    return solution;
  }
  solution = DenseSimplex<double>(problem, options).Solve();
  if (solution.status == LpStatus::kOptimal &&
      MaxPrimalViolation(problem, solution.primal) > kFeasibilityTolerance) {
    solution.status = LpStatus::kNumericalFailure;
  }
  if (solution.status == LpStatus::kNumericalFailure &&
      problem.variables().size() <= options.exact_fallback_max_variables) {
    const int spent = solution.iterations;
    LpOptions exact = options;
    exact.exact_arithmetic = true;
    solution = DenseSimplex<mpq_class>(problem, exact).Solve();
    solution.iterations += spent;
  }
  return solution;
}

double DualObjective(const LpProblem& problem, const LpSolution& solution) {
  double value = 0.0;
  const auto& cons = problem.constraints();
  for (std::size_t i = 0; i < cons.size(); ++i) {
    value += cons[i].rhs * solution.duals[i];
  }
  const auto& vars = problem.variables();
  for (std::size_t j = 0; j < vars.size(); ++j) {
    const double rc = solution.reduced_costs[j];
    const double bound = rc > 0.0 ? vars[j].upper : vars[j].lower;
    if (rc == 0.0) continue;
    // On an infinite bound the reduced cost is rounding noise around zero;
    // weigh it with the primal value instead of the bound.
    value += rc * (std::isfinite(bound) ? bound : solution.primal[j]);
  }
  return value;
}

double MaxPrimalViolation(const LpProblem& problem,
                          const std::vector<double>& primal) {
  double worst = 0.0;
  const auto& vars = problem.variables();
  for (std::size_t j = 0; j < vars.size(); ++j) {
    worst = std::max(worst, vars[j].lower - primal[j]);
    worst = std::max(worst, primal[j] - vars[j].upper);
  }
  for (const auto& c : problem.constraints()) {
    double lhs = 0.0;
    for (const auto& t : c.terms) lhs += t.coef * primal[t.var];
    switch (c.relation) {
      case Relation::kLessEqual:
        worst = std::max(worst, lhs - c.rhs);
        break;
      case Relation::kGreaterEqual:
        worst = std::max(worst, c.rhs - lhs);
        break;
      case Relation::kEqual:
        worst = std::max(worst, std::abs(lhs - c.rhs));
        break;
    }
  }
  return worst;
}

}  // namespace persuasion
