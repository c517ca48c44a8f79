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

#include "persuasion/composition.h"

#include <algorithm>
#include <string>

#include "persuasion/errors.h"
#include "persuasion/profile_space.h"

namespace persuasion {

MarginalScheme CompleteMarginals(
    const Instance& inst, const std::vector<std::vector<double>>& c0_mass) {
  const int n = inst.num_states();
  const int num_r = inst.num_receivers();
  if (static_cast<int>(c0_mass.size()) != num_r) {
    throw Error(ErrorCode::kDimensionMismatch,
                "c0 marginal table needs one row per receiver");
  }
  MarginalScheme m;
  m.prob.assign(num_r, std::vector<std::vector<double>>(
                           n, std::vector<double>(inst.num_candidates(), 0.0)));
  for (int s = 0; s < n; ++s) {
    const Profile best = StateBestResponses(inst, s);
    for (int r = 0; r < num_r; ++r) {
      if (static_cast<int>(c0_mass[r].size()) != n) {
        throw Error(ErrorCode::kDimensionMismatch,
                    "c0 marginal row needs one entry per state");
      }
      const double p = std::clamp(c0_mass[r][s], 0.0, 1.0);
      m.prob[r][s][kSenderCandidate] += p;
      m.prob[r][s][best[r]] += 1.0 - p;
    }
  }
  return m;
}

namespace {

Profile InsertAt(const Profile& opponents, int receiver, int candidate) {
  Profile full;
  full.reserve(opponents.size() + 1);
  full.insert(full.end(), opponents.begin(), opponents.begin() + receiver);
  full.push_back(candidate);
  full.insert(full.end(), opponents.begin() + receiver, opponents.end());
  return full;
}

}  // namespace

Composition ComposeJoint(const Instance& inst, const JointScheme& base,
                         const MarginalScheme& targets,
                         const CompositionOptions& options,
                         const SweepObserver& observer) {
  const int n = inst.num_states();
  const int num_r = inst.num_receivers();
  const int num_c = inst.num_candidates();
  const ProfileSpace space(num_r, num_c, options.max_profiles);
  {
    const ValidationReport shape = ValidateJointScheme(inst, base);
    if (!shape.ok()) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "base scheme: " + shape.violations.front());
    }
    const ValidationReport tshape = ValidateMarginalScheme(inst, targets);
    if (!tshape.ok()) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "targets: " + tshape.violations.front());
    }
  }

  DenseScheme current(n, std::vector<double>(space.size(), 0.0));
  for (int s = 0; s < n; ++s) {
    for (const auto& [profile, p] : base.rows[s]) {
      current[s][space.Encode(profile)] += p;
    }
  }

  const ProfileSpace opponent_space(num_r - 1, num_c, options.max_profiles);
  Composition out;
  out.trace.order.resize(num_r);
  out.trace.residual.resize(num_r);

  // Per opponent column, the full-profile index of each choice of c for r.
  std::vector<std::uint64_t> column(num_c);

  for (int r = 0; r < num_r; ++r) {
    std::vector<Profile>& order = out.trace.order[r];
    order.reserve(opponent_space.size());
    {
      Profile opp(num_r - 1, 0);
      do {
        order.push_back(opp);
      } while (opponent_space.Next(opp));
    }

    // Receiver r's current c0 marginal: untouched by earlier sweeps.
    std::vector<double> gap(n, 0.0);
    for (int s = 0; s < n; ++s) {
      double have = 0.0;
      for (const Profile& opp : order) {
        have += current[s][space.Encode(InsertAt(opp, r, kSenderCandidate))];
      }
      gap[s] = targets.prob[r][s][kSenderCandidate] - have;
      if (gap[s] < -options.dominance_tolerance) {
        throw Error(ErrorCode::kPrecondition,
                    "target c0 marginal of receiver " + std::to_string(r) +
                        " in state " + std::to_string(s) +
                        " is below the base scheme's");
      }
      gap[s] = std::max(gap[s], 0.0);
    }

    DenseScheme next = current;
    out.trace.residual[r].assign(n, {});
    for (int s = 0; s < n; ++s) {
      std::vector<double>& residual = out.trace.residual[r][s];
      residual.reserve(order.size() + 1);
      residual.push_back(gap[s]);
      double delta = gap[s];

      double other_target = 0.0;
      for (int c = 0; c < num_c; ++c) {
        if (c != kSenderCandidate) other_target += targets.prob[r][s][c];
      }

      for (const Profile& opp : order) {
        double column_mass = 0.0;
        for (int c = 0; c < num_c; ++c) {
          column[c] = space.Encode(InsertAt(opp, r, c));
          column_mass += current[s][column[c]];
        }
        const double old_c0 = current[s][column[kSenderCandidate]];
        const double new_c0 = std::min(old_c0 + delta, column_mass);
        delta -= new_c0 - old_c0;
        residual.push_back(delta);
        next[s][column[kSenderCandidate]] = new_c0;

        const double rest = column_mass - new_c0;
        for (int c = 0; c < num_c; ++c) {
          if (c == kSenderCandidate) continue;
          // With target c0 mass 1 the ratio is 0/0; every other entry is 0.
          next[s][column[c]] = other_target > 0.0
                                   ? targets.prob[r][s][c] * rest / other_target
                                   : 0.0;
        }
      }
    }
    if (observer) observer(r, current, next);
    current = std::move(next);
  }

  out.scheme.rows.resize(n);
  for (int s = 0; s < n; ++s) {
    for (std::uint64_t idx = 0; idx < space.size(); ++idx) {
      if (current[s][idx] > 0.0) {
        out.scheme.rows[s][space.Decode(idx)] = current[s][idx];
      }
    }
  }
  return out;
}

Coupling CoupleForKVoting(const Instance& inst, int state,
                          const std::vector<double>& c0_slice, int k,
                          int max_receivers, const LpOptions& lp_options) {
  const int num_r = static_cast<int>(c0_slice.size());
  if (num_r != inst.num_receivers()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "c0 slice needs one entry per receiver");
  }
  if (num_r > max_receivers || num_r > 30) {
    throw Error(ErrorCode::kSizeGuard,
                "coupling over 2^" + std::to_string(num_r) +
                    " recipient sets exceeds the size guard");
  }
  if (k < 1 || k > num_r) {
    throw Error(ErrorCode::kInvalidArgument, "k out of range");
  }
  const std::uint32_t num_sets = std::uint32_t{1} << num_r;
  LpProblem lp;
  for (std::uint32_t set = 0; set < num_sets; ++set) {
    const int size = __builtin_popcount(set);
    lp.AddVariable(0.0, kInfinity, size >= k ? 1.0 : 0.0,
                   "pi[" + std::to_string(set) + "]");
  }
  {
    std::vector<LpProblem::Term> terms;
    for (std::uint32_t set = 0; set < num_sets; ++set) {
      terms.push_back({static_cast<int>(set), 1.0});
    }
    lp.AddConstraint(std::move(terms), Relation::kEqual, 1.0, "mass");
  }
  for (int r = 0; r < num_r; ++r) {
    std::vector<LpProblem::Term> terms;
    for (std::uint32_t set = 0; set < num_sets; ++set) {
      if (set & (std::uint32_t{1} << r)) {
        terms.push_back({static_cast<int>(set), 1.0});
      }
    }
    lp.AddConstraint(std::move(terms), Relation::kEqual,
                     std::clamp(c0_slice[r], 0.0, 1.0),
                     "marginal[" + std::to_string(r) + "]");
  }
  const LpSolution sol = SolveLp(lp, lp_options);
  Coupling out;
  out.status = sol.status;
  if (sol.status != LpStatus::kOptimal) return out;
  out.success = sol.objective;

  // Receivers outside the set get the per-state best response, or the best
  // candidate other than c0 when c0 itself is the best response.
  Profile fallback = StateBestResponses(inst, state);
  for (int r = 0; r < num_r; ++r) {
    if (fallback[r] != kSenderCandidate) continue;
    fallback[r] = 1;
    for (int c = 2; c < inst.num_candidates(); ++c) {
      if (inst.utility(r, state, c) > inst.utility(r, state, fallback[r])) {
        fallback[r] = c;
      }
    }
  }
  for (std::uint32_t set = 0; set < num_sets; ++set) {
    const double p = sol.primal[set];
    if (p <= 1e-15) continue;
    out.sets[set] = p;
    Profile profile(num_r);
    for (int r = 0; r < num_r; ++r) {
      profile[r] = (set & (std::uint32_t{1} << r)) ? kSenderCandidate
                                                    : fallback[r];
    }
    out.profiles[profile] += p;
  }
  return out;
}

JointScheme CoupledKVotingScheme(
    const Instance& inst, int k,
    const std::vector<std::vector<double>>& c0_marginals) {
  const MarginalScheme completed = CompleteMarginals(inst, c0_marginals);
  JointScheme scheme;
  scheme.rows.resize(inst.num_states());
  for (int s = 0; s < inst.num_states(); ++s) {
    std::vector<double> slice(inst.num_receivers());
    for (int r = 0; r < inst.num_receivers(); ++r) {
      slice[r] = completed.prob[r][s][kSenderCandidate];
    }
    const Coupling coupling = CoupleForKVoting(inst, s, slice, k);
    if (coupling.status != LpStatus::kOptimal) {
      throw Error(ErrorCode::kSolverFailure,
                  std::string("coupling LP failed: ") +
                      LpStatusName(coupling.status));
    }
    double total = 0.0;
    for (const auto& [profile, p] : coupling.profiles) total += p;
    for (const auto& [profile, p] : coupling.profiles) {
      scheme.rows[s][profile] = p / total;
    }
  }
  return scheme;
}

}  // namespace persuasion
