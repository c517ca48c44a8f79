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

#ifndef PERSUASION_PRIVATE_KVOTING_H_
#define PERSUASION_PRIVATE_KVOTING_H_

// Optimal private signaling under a k-voting rule through a polynomial-size
// LP over the sender-candidate marginals phi_r(theta, c0).
//
// Per state theta the LP carries beta_theta, the probability that at least
// k receivers are told c0. For m = 0..k-1 the sum of the |R|-m smallest
// marginals, q_{theta,m}, is written through the dual of
//   min x.y  s.t.  1.y = |R|-m,  0 <= y <= 1,
// which gives free variables t_{theta,m}, q_{theta,m} and nonpositive
// z_{theta,m,r} with
//   beta_theta <= q_{theta,m} / (k-m)
//   q_{theta,m} <= (|R|-m) t_{theta,m} + sum_r z_{theta,m,r}
//   phi_r(theta,c0) >= t_{theta,m} + z_{theta,m,r}.
// Only obedience to c0 is constrained: every other recommendation is a
// per-state best response once marginals are completed.

#include <vector>

#include "persuasion/lp.h"
#include "persuasion/model.h"

namespace persuasion {

// Variable indexing of the k-voting LP. Per state the block is
//   beta, phi_0..phi_{R-1}, then for each m: t, q, z_0..z_{R-1}.
class KVotingLpLayout {
 public:
  KVotingLpLayout(int num_states, int num_receivers, int k);

  int num_states() const { return num_states_; }
  int num_receivers() const { return num_receivers_; }
  int k() const { return k_; }
  int num_variables() const { return num_states_ * block_; }

  int beta(int state) const { return state * block_; }
  int phi(int receiver, int state) const { return state * block_ + 1 + receiver; }
  int t(int state, int m) const { return MBase(state, m); }
  int q(int state, int m) const { return MBase(state, m) + 1; }
  int z(int state, int m, int receiver) const {
    return MBase(state, m) + 2 + receiver;
  }

 private:
  int MBase(int state, int m) const {
    return state * block_ + 1 + num_receivers_ + m * (2 + num_receivers_);
  }

  int num_states_;
  int num_receivers_;
  int k_;
  int block_;
};

struct KVotingLp {
  LpProblem problem;
  KVotingLpLayout layout;
};

// Throws Error(kInvalidArgument) unless 1 <= k <= |R|.
KVotingLp BuildKVotingLp(const Instance& inst, int k);

struct KVotingResult {
  LpStatus status = LpStatus::kNumericalFailure;
  double value = 0.0;
  // c0_marginals[r][theta] = phi_r(theta, c0)
  std::vector<std::vector<double>> c0_marginals;
  std::vector<double> betas;
  int iterations = 0;
  std::string exact_value;
};

KVotingResult SolvePrivateKVoting(const Instance& inst, int k,
                                  const LpOptions& options = {});

// min(1, min_{m<k} q_m / (k-m)) where q_m sums the |R|-m smallest entries:
// the largest probability that at least k receivers see c0, over all
// couplings with these marginals.
double BetaFromMarginals(const std::vector<double>& c0_slice, int k);

}  // namespace persuasion

#endif  // PERSUASION_PRIVATE_KVOTING_H_
