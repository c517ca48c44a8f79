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

#ifndef PERSUASION_GENERAL_PRIVATE_H_
#define PERSUASION_GENERAL_PRIVATE_H_

// Optimal private signaling for an arbitrary sender utility f_theta over
// recommendation profiles.
//
// The persuasion LP has one column x(theta, s) = mu(theta) phi(theta, s) per
// state and profile:
//   max  sum x(theta,s) f_theta(s)
//   s.t. sum_s x(theta,s) = mu(theta)                               (d)
//        sum_{theta, s: s_r = c} x(theta,s) (u_r(theta,c) - u_r(theta,c'))
//            >= 0   for every receiver r and c != c'               (y)
// SolvePrivateExact writes every column. SolvePrivateColgen starts from the
// fully informative columns and prices new ones per state with
//   max_s f_theta(s) + sum_r w_r(s_r),
//   w_r(c) = -sum_{c'} y_r(c,c') (u_r(theta,c) - u_r(theta,c')),
// adding s whenever that maximum exceeds d(theta). The per-state oracles
// for plurality and anonymous utilities live in pricing.h.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "persuasion/lp.h"
#include "persuasion/model.h"
#include "persuasion/pricing.h"

namespace persuasion {

struct PrivateOptions {
  // Guard on n * |C|^|R| for the full LP.
  std::uint64_t max_columns = 20000;
  // A column enters the master when its reduced cost exceeds this.
  double pricing_tolerance = 1e-7;
  int max_rounds = 10000;
  LpOptions lp;
};

struct ColumnRecord {
  int round = 0;
  int state = 0;
  Profile profile;
  double reduced_cost = 0.0;
};

struct PrivateResult {
  LpStatus status = LpStatus::kNumericalFailure;
  double value = 0.0;
  JointScheme scheme;
  // Column generation only: pricing rounds, and whether pricing certified
  // optimality before max_rounds.
  int rounds = 0;
  bool converged = false;
  int lp_iterations = 0;
  int num_columns = 0;
  std::vector<ColumnRecord> added;
  std::string exact_value;
};

// Pricing weights for one state, derived from master duals.
struct PricingWeights {
  double state_dual = 0.0;
  // weight[r][c]
  std::vector<std::vector<double>> weight;
};

// Throws Error(kSizeGuard) when n * |C|^|R| exceeds options.max_columns.
PrivateResult SolvePrivateExact(const Instance& inst, const SenderUtility& f,
                                const PrivateOptions& options = {});

PrivateResult SolvePrivateColgen(const Instance& inst, const SenderUtility& f,
                                 const PricingOracle& oracle,
                                 const PrivateOptions& options = {});

// Picks the oracle matching `f`: plurality for the plurality rule, the
// anonymous oracle for anonymous tables and for k-voting.
PricingOracle OracleFor(const Instance& inst, const SenderUtility& f);

}  // namespace persuasion

#endif  // PERSUASION_GENERAL_PRIVATE_H_
