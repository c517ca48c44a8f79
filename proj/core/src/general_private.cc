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

#include <algorithm>
#include <set>
#include <string>
#include <utility>

#include "persuasion/errors.h"
#include "persuasion/profile_space.h"

namespace persuasion {

namespace {

struct Column {
  int state;
  Profile profile;
};

// Restricted (or full) master LP over a column pool. Row layout: one mass
// row per state, then one obedience row per (r, c, c'), c != c'.
class PersuasionMaster {
 public:
  PersuasionMaster(const Instance& inst, const SenderUtility& f)
      : inst_(inst), f_(f) {}

  int ObedienceRow(int r, int c, int deviation) const {
    const int num_c = inst_.num_candidates();
    const int d = deviation < c ? deviation : deviation - 1;
    return inst_.num_states() + (r * num_c + c) * (num_c - 1) + d;
  }

  LpProblem Build(const std::vector<Column>& columns) const {
    const int n = inst_.num_states();
    const int num_r = inst_.num_receivers();
    const int num_c = inst_.num_candidates();
    LpProblem lp;
    for (int s = 0; s < n; ++s) {
      lp.AddConstraint({}, Relation::kEqual, inst_.prior[s],
                       "mass[" + inst_.states[s] + "]");
    }
    for (int r = 0; r < num_r; ++r) {
      for (int c = 0; c < num_c; ++c) {
        for (int d = 0; d < num_c; ++d) {
          if (d == c) continue;
          lp.AddConstraint({}, Relation::kGreaterEqual, 0.0,
                           "obey[" + inst_.receivers[r].name + "," +
                               inst_.candidates[c] + "," +
                               inst_.candidates[d] + "]");
        }
      }
    }
    for (const Column& col : columns) {
      const int s = col.state;
      const int var = lp.AddVariable(
          0.0, kInfinity, f_.Value(s, col.profile, num_c), ColumnName(col));
      lp.AddTerm(s, var, 1.0);
      for (int r = 0; r < num_r; ++r) {
        const int c = col.profile[r];
        for (int d = 0; d < num_c; ++d) {
          if (d == c) continue;
          const double gain = inst_.utility(r, s, c) - inst_.utility(r, s, d);
          if (gain != 0.0) lp.AddTerm(ObedienceRow(r, c, d), var, gain);
        }
      }
    }
    return lp;
  }

  PricingWeights Weights(const LpSolution& sol, int state) const {
    const int num_r = inst_.num_receivers();
    const int num_c = inst_.num_candidates();
    PricingWeights w;
    w.state_dual = sol.duals[state];
    w.weight.assign(num_r, std::vector<double>(num_c, 0.0));
    for (int r = 0; r < num_r; ++r) {
      for (int c = 0; c < num_c; ++c) {
        double v = 0.0;
        for (int d = 0; d < num_c; ++d) {
          if (d == c) continue;
          v -= sol.duals[ObedienceRow(r, c, d)] *
               (inst_.utility(r, state, c) - inst_.utility(r, state, d));
        }
        w.weight[r][c] = v;
      }
    }
    return w;
  }

  JointScheme Scheme(const std::vector<Column>& columns,
                     const LpSolution& sol) const {
    JointScheme scheme;
    scheme.rows.resize(inst_.num_states());
    for (std::size_t j = 0; j < columns.size(); ++j) {
      const double x = sol.primal[j];
      if (x <= 1e-13) continue;
      const int s = columns[j].state;
      scheme.rows[s][columns[j].profile] += x / inst_.prior[s];
    }
    for (auto& row : scheme.rows) {
      double total = 0.0;
      for (const auto& [profile, p] : row) total += p;
      if (total > 0.0) {
        for (auto& [profile, p] : row) p /= total;
      }
    }
    return scheme;
  }

 private:
  std::string ColumnName(const Column& col) const {
    std::string name = "x[" + inst_.states[col.state];
    for (int c : col.profile) name += "," + inst_.candidates[c];
    return name + "]";
  }

  const Instance& inst_;
  const SenderUtility& f_;
};

void CheckUtility(const Instance& inst, const SenderUtility& f) {
  RequireValidInstance(inst);
  const ValidationReport report = f.Validate(inst);
  if (!report.ok()) {
    throw Error(ErrorCode::kInvalidArgument,
                "sender utility: " + report.violations.front());
  }
}

}  // namespace

PrivateResult SolvePrivateExact(const Instance& inst, const SenderUtility& f,
                                const PrivateOptions& options) {
  CheckUtility(inst, f);
  const std::uint64_t per_state =
      CountProfiles(inst.num_receivers(), inst.num_candidates());
  const std::uint64_t n = static_cast<std::uint64_t>(inst.num_states());
  if (per_state > options.max_columns / n) {
    throw Error(ErrorCode::kSizeGuard,
                "full persuasion LP would have " +
                    (per_state == UINT64_MAX ? std::string("overflowing")
                                             : std::to_string(per_state * n)) +
                    " columns, guard is " +
                    std::to_string(options.max_columns));
  }
  const ProfileSpace space(inst.num_receivers(), inst.num_candidates());
  std::vector<Column> columns;
  columns.reserve(per_state * n);
  for (int s = 0; s < inst.num_states(); ++s) {
    Profile profile(inst.num_receivers(), 0);
    do {
      columns.push_back({s, profile});
    } while (space.Next(profile));
  }
  const PersuasionMaster master(inst, f);
  const LpSolution sol = SolveLp(master.Build(columns), options.lp);
  PrivateResult result;
  result.status = sol.status;
  result.lp_iterations = sol.iterations;
  result.num_columns = static_cast<int>(columns.size());
  result.converged = sol.status == LpStatus::kOptimal;
  if (sol.status != LpStatus::kOptimal) return result;
  result.value = sol.objective;
  result.exact_value = sol.exact_objective;
  result.scheme = master.Scheme(columns, sol);
  return result;
}

PrivateResult SolvePrivateColgen(const Instance& inst, const SenderUtility& f,
                                 const PricingOracle& oracle,
                                 const PrivateOptions& options) {
  CheckUtility(inst, f);
  const int n = inst.num_states();
  const PersuasionMaster master(inst, f);

  std::vector<Column> columns;
  std::set<std::pair<int, Profile>> pool;
  for (int s = 0; s < n; ++s) {
    Profile best = StateBestResponses(inst, s);
    pool.emplace(s, best);
    columns.push_back({s, std::move(best)});
  }

  PrivateResult result;
  LpSolution sol;
  for (int round = 0;; ++round) {
    sol = SolveLp(master.Build(columns), options.lp);
    result.lp_iterations += sol.iterations;
    result.rounds = round + 1;
    if (sol.status != LpStatus::kOptimal) {
      result.status = sol.status;
      return result;
    }
    if (round >= options.max_rounds) {
      result.status = LpStatus::kIterationLimit;
      break;
    }
    bool added = false;
    for (int s = 0; s < n; ++s) {
      const PricingWeights w = master.Weights(sol, s);
      const PricedProfile priced = oracle(s, w.weight);
      const double reduced_cost = priced.value - w.state_dual;
      if (reduced_cost <= options.pricing_tolerance) continue;
      if (!pool.emplace(s, priced.profile).second) continue;
      result.added.push_back({round, s, priced.profile, reduced_cost});
      columns.push_back({s, priced.profile});
      added = true;
    }
    if (!added) {
      result.status = LpStatus::kOptimal;
      result.converged = true;
      break;
    }
  }
  result.num_columns = static_cast<int>(columns.size());
  result.value = sol.objective;
  result.exact_value = sol.exact_objective;
  result.scheme = master.Scheme(columns, sol);
  return result;
}

PricingOracle OracleFor(const Instance& inst, const SenderUtility& f) {
  if (!f.is_anonymous() && !f.rule().is_kvoting()) {
    return [](int, const ReceiverWeights& weights) {
      return PricingPlurality(weights);
    };
  }
  const SenderUtility table =
      f.is_anonymous() ? f : AnonymousFromRule(inst, f.rule());
  return [table](int state, const ReceiverWeights& weights) {
    return PricingAnonymous(table.tables()[state], weights);
  };
}

}  // namespace persuasion
