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

#ifndef PERSUASION_MODEL_H_
#define PERSUASION_MODEL_H_

// Domain types for voting-based persuasion instances and the three
// signaling-scheme representations (joint, marginal, public), together with
// the evaluation primitives every solver is checked against: vote counting,
// win predicates, sender value, receiver best responses and the obedience
// (persuasiveness) constraints.
//
// Candidate index 0 is always the sender's candidate. A profile assigns one
// recommended candidate to each receiver, in receiver order.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace persuasion {

using Profile = std::vector<int>;
using CountVector = std::vector<int>;

inline constexpr int kSenderCandidate = 0;
inline constexpr double kProbabilityTolerance = 1e-9;
inline constexpr double kDefaultPersuasionTolerance = 1e-6;

class VotingRule {
 public:
  enum class Kind { kKVoting, kPlurality };

  VotingRule() = default;
  static VotingRule KVoting(int k) { return VotingRule(Kind::kKVoting, k); }
  static VotingRule Plurality() { return VotingRule(Kind::kPlurality, 0); }

  Kind kind() const { return kind_; }
  bool is_kvoting() const { return kind_ == Kind::kKVoting; }
  // Vote threshold; meaningful only for k-voting.
  int k() const { return k_; }

  std::string ToString() const;

  friend bool operator==(const VotingRule&, const VotingRule&) = default;

 private:
  VotingRule(Kind kind, int k) : kind_(kind), k_(k) {}

  Kind kind_ = Kind::kPlurality;
  int k_ = 0;
};

struct Receiver {
  std::string name;
  // utility[state][candidate]
  std::vector<std::vector<double>> utility;
};

struct Instance {
  std::vector<std::string> states;
  std::vector<double> prior;
  std::vector<std::string> candidates;
  std::vector<Receiver> receivers;
  VotingRule rule;

  int num_states() const { return static_cast<int>(states.size()); }
  int num_candidates() const { return static_cast<int>(candidates.size()); }
  int num_receivers() const { return static_cast<int>(receivers.size()); }

  double utility(int receiver, int state, int candidate) const {
    return receivers[receiver].utility[state][candidate];
  }
};

struct ValidationReport {
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

ValidationReport ValidateInstance(const Instance& inst);

// Throws Error(kInvalidArgument) listing every violation.
void RequireValidInstance(const Instance& inst);

// Sparse scheme: rows[state] maps a profile to its probability. Only profiles
// with positive mass are expected to be stored.
struct JointScheme {
  std::vector<std::map<Profile, double>> rows;
};

// A public scheme has the same storage as a joint one, but each profile is a
// single signal observed by every receiver.
struct PublicScheme {
  std::vector<std::map<Profile, double>> rows;
};

// prob[receiver][state][candidate]
struct MarginalScheme {
  std::vector<std::vector<std::vector<double>>> prob;
};

// Checks dimensions, entry ranges and per-state normalization.
ValidationReport ValidateJointScheme(const Instance& inst,
                                     const JointScheme& scheme);
ValidationReport ValidatePublicScheme(const Instance& inst,
                                      const PublicScheme& scheme);
ValidationReport ValidateMarginalScheme(const Instance& inst,
                                        const MarginalScheme& scheme);

// Sender objective f_theta(profile). Either the win indicator of a voting
// rule or an anonymous table indexed by the candidate-count vector.
class SenderUtility {
 public:
  using CountTable = std::map<CountVector, double>;

  static SenderUtility FromRule(const VotingRule& rule);
  // per_state[state] must be total over count vectors summing to |R|.
  static SenderUtility Anonymous(std::vector<CountTable> per_state);

  bool is_anonymous() const { return anonymous_; }
  const VotingRule& rule() const { return rule_; }
  const std::vector<CountTable>& tables() const { return tables_; }

  double ValueOfCounts(int state, const CountVector& counts) const;
  double Value(int state, const Profile& profile, int num_candidates) const;

  // Rule values are always valid; anonymous tables are checked for totality
  // and shape against the instance.
  ValidationReport Validate(const Instance& inst) const;

 private:
  bool anonymous_ = false;
  VotingRule rule_;
  std::vector<CountTable> tables_;
};

// Convenience: the sender utility implied by the instance's voting rule.
SenderUtility RuleUtility(const Instance& inst);

// Anonymous encoding of a voting rule: value 1 on winning count vectors.
SenderUtility AnonymousFromRule(const Instance& inst, const VotingRule& rule);

// delta(s, c) for every candidate c.
CountVector DeltaCounts(const Profile& profile, int num_candidates);
// Same, also checking the profile length against the instance.
CountVector DeltaCounts(const Instance& inst, const Profile& profile);

// k-voting: counts[0] >= k. Plurality: counts[0] strictly above every other
// entry, so any tie for first place is a loss for the sender.
bool RuleWins(const VotingRule& rule, const CountVector& counts);

// sum_theta prior(theta) sum_s x[theta][s] f_theta(s).
double SenderValue(const Instance& inst, const SenderUtility& f,
                   const JointScheme& scheme);
double SenderValue(const Instance& inst, const SenderUtility& f,
                   const PublicScheme& scheme);

// Argmax of expected utility under `posterior` (need not be normalized).
// Ties within `tie_tolerance` go to the sender's candidate first, then to
// the lowest index.
int BestResponse(const Instance& inst, int receiver,
                 std::span<const double> posterior,
                 double tie_tolerance = 1e-12);

// Fully informative recommendation in `state`.
Profile StateBestResponses(const Instance& inst, int state);

// Worst obedience violation found by a persuasiveness check. `violation` is
// the positive shortfall -sum(...) of the most violated constraint, or 0.
struct PersuasivenessReport {
  bool persuasive = true;
  double worst_violation = 0.0;
  int receiver = -1;
  int recommended = -1;
  int deviation = -1;
  // Public schemes only: the signal whose posterior fails.
  std::optional<Profile> signal;
};

PersuasivenessReport CheckPersuasiveJoint(
    const Instance& inst, const JointScheme& scheme,
    double tol = kDefaultPersuasionTolerance);
PersuasivenessReport CheckPersuasiveMarginal(
    const Instance& inst, const MarginalScheme& scheme,
    double tol = kDefaultPersuasionTolerance);
PersuasivenessReport CheckPersuasivePublic(
    const Instance& inst, const PublicScheme& scheme,
    double tol = kDefaultPersuasionTolerance);

MarginalScheme MarginalsOf(const Instance& inst, const JointScheme& scheme);

// Independent product of per-receiver marginals. Dense, so guarded by
// `max_profiles` per state.
JointScheme ProductScheme(const Instance& inst, const MarginalScheme& marginals,
                          std::uint64_t max_profiles = 1u << 20);

// Deterministic scheme that recommends `per_state[theta]` in state theta.
JointScheme DeterministicScheme(const std::vector<Profile>& per_state);

}  // namespace persuasion

#endif  // PERSUASION_MODEL_H_
