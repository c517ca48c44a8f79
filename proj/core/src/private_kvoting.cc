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

#include <algorithm>
#include <string>

#include "persuasion/errors.h"

namespace persuasion {

KVotingLpLayout::KVotingLpLayout(int num_states, int num_receivers, int k)
    : num_states_(num_states),
      num_receivers_(num_receivers),
      k_(k),
      block_(1 + num_receivers + k * (2 + num_receivers)) {}

KVotingLp BuildKVotingLp(const Instance& inst, int k) {
  RequireValidInstance(inst);
  const int n = inst.num_states();
  const int num_r = inst.num_receivers();
  const int num_c = inst.num_candidates();
  if (k < 1 || k > num_r) {
    throw Error(ErrorCode::kInvalidArgument,
                "k=" + std::to_string(k) + " out of range [1, " +
                    std::to_string(num_r) + "]");
  }
  KVotingLp lp{LpProblem{}, KVotingLpLayout(n, num_r, k)};
  LpProblem& p = lp.problem;
  const KVotingLpLayout& layout = lp.layout;

  for (int s = 0; s < n; ++s) {
    const std::string st = inst.states[s];
    p.AddVariable(0.0, 1.0, inst.prior[s], "beta[" + st + "]");
    for (int r = 0; r < num_r; ++r) {
      p.AddVariable(0.0, 1.0, 0.0,
                    "phi[" + inst.receivers[r].name + "," + st + "]");
    }
    for (int m = 0; m < k; ++m) {
      const std::string sm = st + "," + std::to_string(m);
      p.AddVariable(-kInfinity, kInfinity, 0.0, "t[" + sm + "]");
      p.AddVariable(-kInfinity, kInfinity, 0.0, "q[" + sm + "]");
      for (int r = 0; r < num_r; ++r) {
        p.AddVariable(-kInfinity, 0.0, 0.0,
                      "z[" + sm + "," + inst.receivers[r].name + "]");
      }
    }
  }

  // Obedience to c0 against every other candidate.
  for (int r = 0; r < num_r; ++r) {
    for (int c = 1; c < num_c; ++c) {
      std::vector<LpProblem::Term> terms;
      for (int s = 0; s < n; ++s) {
        const double coef =
            inst.prior[s] * (inst.utility(r, s, kSenderCandidate) -
                             inst.utility(r, s, c));
        if (coef != 0.0) terms.push_back({layout.phi(r, s), coef});
      }
      p.AddConstraint(std::move(terms), Relation::kGreaterEqual, 0.0,
                      "obey[" + inst.receivers[r].name + "," +
                          inst.candidates[c] + "]");
    }
  }

  for (int s = 0; s < n; ++s) {
    for (int m = 0; m < k; ++m) {
      const std::string sm = inst.states[s] + "," + std::to_string(m);
      // (k-m) beta - q <= 0
      p.AddConstraint({{layout.beta(s), static_cast<double>(k - m)},
                       {layout.q(s, m), -1.0}},
                      Relation::kLessEqual, 0.0, "beta_ub[" + sm + "]");
      // q - (|R|-m) t - sum_r z <= 0
      std::vector<LpProblem::Term> terms{
          {layout.q(s, m), 1.0},
          {layout.t(s, m), -static_cast<double>(num_r - m)}};
      for (int r = 0; r < num_r; ++r) terms.push_back({layout.z(s, m, r), -1.0});
      p.AddConstraint(std::move(terms), Relation::kLessEqual, 0.0,
                      "q_ub[" + sm + "]");
      // phi_r - t - z_r >= 0
      for (int r = 0; r < num_r; ++r) {
        p.AddConstraint({{layout.phi(r, s), 1.0},
                         {layout.t(s, m), -1.0},
                         {layout.z(s, m, r), -1.0}},
                        Relation::kGreaterEqual, 0.0,
                        "phi_lb[" + sm + "," + inst.receivers[r].name + "]");
      }
    }
  }
  return lp;
}

KVotingResult SolvePrivateKVoting(const Instance& inst, int k,
                                  const LpOptions& options) {
  const KVotingLp lp = BuildKVotingLp(inst, k);
  const LpSolution sol = SolveLp(lp.problem, options);
  KVotingResult result;
  result.status = sol.status;
  result.iterations = sol.iterations;
  if (sol.status != LpStatus::kOptimal) return result;
  result.value = sol.objective;
  result.exact_value = sol.exact_objective;
  const int n = inst.num_states();
  const int num_r = inst.num_receivers();
  result.c0_marginals.assign(num_r, std::vector<double>(n, 0.0));
  result.betas.assign(n, 0.0);
  for (int s = 0; s < n; ++s) {
    result.betas[s] = std::clamp(sol.primal[lp.layout.beta(s)], 0.0, 1.0);
    for (int r = 0; r < num_r; ++r) {
      result.c0_marginals[r][s] =
          std::clamp(sol.primal[lp.layout.phi(r, s)], 0.0, 1.0);
    }
  }
  return result;
}

double BetaFromMarginals(const std::vector<double>& c0_slice, int k) {
  const int num_r = static_cast<int>(c0_slice.size());
  if (k < 1 || k > num_r) {
    throw Error(ErrorCode::kInvalidArgument, "k out of range for the slice");
  }
  std::vector<double> sorted = c0_slice;
  std::sort(sorted.begin(), sorted.end());
  double beta = 1.0;
  for (int m = 0; m < k; ++m) {
    double q = 0.0;
    for (int i = 0; i < num_r - m; ++i) q += sorted[i];
    beta = std::min(beta, q / (k - m));
  }
  return beta;
}

}  // namespace persuasion
