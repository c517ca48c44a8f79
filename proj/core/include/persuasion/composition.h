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

#ifndef PERSUASION_COMPOSITION_H_
#define PERSUASION_COMPOSITION_H_

// Constructive side of private k-voting:
//  * CompleteMarginals fills c0 marginals up to full persuasive marginals by
//    putting the remaining mass on the per-state best response.
//  * ComposeJoint turns a base joint scheme into one whose marginals equal
//    dominating targets, sweeping receivers one at a time and moving mass to
//    c0 inside each opponent column (theta, s_{-r}) without changing the
//    column's total. For k-voting the win probability never drops.
//  * CoupleForKVoting finds, for one state, the joint law of "who is told
//    c0" that maximizes P(at least k receivers are told c0).

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "persuasion/lp.h"
#include "persuasion/model.h"

namespace persuasion {

// c0_mass[r][theta]. Output mass on c0 equals c0_mass except where c0 is
// itself the per-state best response, in which case the whole row is c0.
MarginalScheme CompleteMarginals(const Instance& inst,
                                 const std::vector<std::vector<double>>& c0_mass);

struct CompositionOptions {
  std::uint64_t max_profiles = std::uint64_t{1} << 20;
  double dominance_tolerance = 1e-9;
};

struct CompositionTrace {
  // order[r] lists opponent profiles s_{-r} (receiver r removed) in the
  // lexicographic order used by the sweep for receiver r.
  std::vector<std::vector<Profile>> order;
  // residual[r][theta][i]: c0 mass still to be placed after visiting the
  // first i opponent columns. residual[r][theta][0] is the initial gap.
  std::vector<std::vector<std::vector<double>>> residual;
};

struct Composition {
  JointScheme scheme;
  CompositionTrace trace;
};

// Dense per-state probability vectors indexed through ProfileSpace.
using DenseScheme = std::vector<std::vector<double>>;

// Called once per receiver with the dense scheme before and after that
// receiver's sweep.
using SweepObserver = std::function<void(int receiver, const DenseScheme& before,
                                         const DenseScheme& after)>;

// Throws Error(kPrecondition) if some target c0 marginal is below the base
// scheme's, Error(kSizeGuard) if |C|^|R| exceeds options.max_profiles.
Composition ComposeJoint(const Instance& inst, const JointScheme& base,
                         const MarginalScheme& targets,
                         const CompositionOptions& options = {},
                         const SweepObserver& observer = nullptr);

struct Coupling {
  LpStatus status = LpStatus::kNumericalFailure;
  // P(at least k receivers are told c0).
  double success = 0.0;
  // Distribution over c0-recipient sets, bit r set when r is told c0.
  std::map<std::uint32_t, double> sets;
  // Same distribution over full profiles; receivers outside the set get
  // their best response among candidates other than c0.
  std::map<Profile, double> profiles;
};

// Solved as an LP over the 2^|R| recipient sets; guarded by `max_receivers`.
Coupling CoupleForKVoting(const Instance& inst, int state,
                          const std::vector<double>& c0_slice, int k,
                          int max_receivers = 14,
                          const LpOptions& lp_options = {});

// Materializes a joint scheme from optimal c0 marginals: completes them and
// couples each state. Its k-voting value equals sum_theta mu(theta)
// BetaFromMarginals(completed c0 slice, k).
JointScheme CoupledKVotingScheme(
    const Instance& inst, int k,
    const std::vector<std::vector<double>>& c0_marginals);

}  // namespace persuasion

#endif  // PERSUASION_COMPOSITION_H_
