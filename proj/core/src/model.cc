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

#include "persuasion/model.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <string>

#include "persuasion/errors.h"
#include "persuasion/profile_space.h"

namespace persuasion {

std::string VotingRule::ToString() const {
  if (is_kvoting()) return "k-voting(k=" + std::to_string(k_) + ")";
  return "plurality";
}

ValidationReport ValidateInstance(const Instance& inst) {
  ValidationReport report;
  auto fail = [&report](std::string msg) {
    report.violations.push_back(std::move(msg));
  };
  const int n = inst.num_states();
  const int num_c = inst.num_candidates();
  const int num_r = inst.num_receivers();
  if (n < 1) fail("instance needs at least one state");
  if (num_r < 1) fail("instance needs at least one receiver");
  if (num_c < 2) fail("instance needs at least two candidates");
  if (static_cast<int>(inst.prior.size()) != n) {
    fail("prior has " + std::to_string(inst.prior.size()) +
         " entries for " + std::to_string(n) + " states");
  } else {
    double sum = 0.0;
    for (int s = 0; s < n; ++s) {
      const double p = inst.prior[s];
      if (!std::isfinite(p) || p <= 0.0) {
        fail("prior of state " + std::to_string(s) +
             " must be strictly positive");
      }
      sum += p;
    }
    if (std::abs(sum - 1.0) > kProbabilityTolerance) {
      std::ostringstream os;
      os.precision(17);
      os << "prior sums to " << sum << ", not 1";
      fail(os.str());
    }
  }
  for (int r = 0; r < num_r; ++r) {
    const auto& table = inst.receivers[r].utility;
    if (static_cast<int>(table.size()) != n) {
      fail("receiver " + std::to_string(r) + " utility has " +
           std::to_string(table.size()) + " state rows, expected " +
           std::to_string(n));
      continue;
    }
    for (int s = 0; s < n; ++s) {
      if (static_cast<int>(table[s].size()) != num_c) {
        fail("receiver " + std::to_string(r) + " state " + std::to_string(s) +
             " utility has " + std::to_string(table[s].size()) +
             " entries, expected " + std::to_string(num_c));
        continue;
      }
      for (double u : table[s]) {
        if (!std::isfinite(u)) {
          fail("receiver " + std::to_string(r) + " has a non-finite utility");
          break;
        }
      }
    }
  }
  if (inst.rule.is_kvoting()) {
    const int k = inst.rule.k();
    if (k < 1 || k > num_r) {
      fail("k-voting threshold k=" + std::to_string(k) +
           " out of range [1, " + std::to_string(num_r) + "]");
    }
  }
  return report;
}

void RequireValidInstance(const Instance& inst) {
  const ValidationReport report = ValidateInstance(inst);
  if (report.ok()) return;
  std::string msg = "invalid instance:";
  for (const auto& v : report.violations) msg += "\n  - " + v;
  throw Error(ErrorCode::kInvalidArgument, msg);
}

namespace {

template <typename Rows>
ValidationReport ValidateRows(const Instance& inst, const Rows& rows) {
  ValidationReport report;
  const int n = inst.num_states();
  if (static_cast<int>(rows.size()) != n) {
    report.violations.push_back("scheme has " + std::to_string(rows.size()) +
                                " state rows, expected " + std::to_string(n));
    return report;
  }
  for (int s = 0; s < n; ++s) {
    double sum = 0.0;
    for (const auto& [profile, p] : rows[s]) {
      if (static_cast<int>(profile.size()) != inst.num_receivers()) {
        report.violations.push_back("state " + std::to_string(s) +
                                    ": profile length mismatch");
        return report;
      }
      for (int c : profile) {
        if (c < 0 || c >= inst.num_candidates()) {
          report.violations.push_back("state " + std::to_string(s) +
                                      ": candidate index out of range");
          return report;
        }
      }
      if (!(p >= -kProbabilityTolerance && p <= 1.0 + kProbabilityTolerance)) {
        report.violations.push_back("state " + std::to_string(s) +
                                    ": probability outside [0, 1]");
      }
      sum += p;
    }
    if (std::abs(sum - 1.0) > kProbabilityTolerance) {
      std::ostringstream os;
      os.precision(12);
      os << "state " << s << ": row sums to " << sum << ", not 1";
      report.violations.push_back(os.str());
    }
  }
  return report;
}

}  // namespace

ValidationReport ValidateJointScheme(const Instance& inst,
                                     const JointScheme& scheme) {
  return ValidateRows(inst, scheme.rows);
}

ValidationReport ValidatePublicScheme(const Instance& inst,
                                      const PublicScheme& scheme) {
  return ValidateRows(inst, scheme.rows);
}

ValidationReport ValidateMarginalScheme(const Instance& inst,
                                        const MarginalScheme& scheme) {
  ValidationReport report;
  if (static_cast<int>(scheme.prob.size()) != inst.num_receivers()) {
    report.violations.push_back("marginal scheme receiver count mismatch");
    return report;
  }
  for (int r = 0; r < inst.num_receivers(); ++r) {
    if (static_cast<int>(scheme.prob[r].size()) != inst.num_states()) {
      report.violations.push_back("marginal scheme state count mismatch");
      return report;
    }
    for (int s = 0; s < inst.num_states(); ++s) {
      const auto& row = scheme.prob[r][s];
      if (static_cast<int>(row.size()) != inst.num_candidates()) {
        report.violations.push_back("marginal scheme candidate count mismatch");
        return report;
      }
      double sum = 0.0;
      for (double p : row) {
        if (!(p >= -kProbabilityTolerance &&
              p <= 1.0 + kProbabilityTolerance)) {
          report.violations.push_back("marginal probability outside [0, 1]");
        }
        sum += p;
      }
      if (std::abs(sum - 1.0) > kProbabilityTolerance) {
        report.violations.push_back(
            "receiver " + std::to_string(r) + " state " + std::to_string(s) +
            ": marginal row does not sum to 1");
      }
    }
  }
  return report;
}

// --- Sender utility ---------------------------------------------------------

SenderUtility SenderUtility::FromRule(const VotingRule& rule) {
  SenderUtility f;
  f.rule_ = rule;
  return f;
}

SenderUtility SenderUtility::Anonymous(std::vector<CountTable> per_state) {
  SenderUtility f;
  f.anonymous_ = true;
  f.tables_ = std::move(per_state);
  return f;
}

double SenderUtility::ValueOfCounts(int state, const CountVector& counts) const {
  if (!anonymous_) return RuleWins(rule_, counts) ? 1.0 : 0.0;
  const auto& table = tables_.at(state);
  auto it = table.find(counts);
  if (it == table.end()) {
    throw Error(ErrorCode::kInvalidArgument,
                "anonymous utility undefined for a count vector");
  }
  return it->second;
}

double SenderUtility::Value(int state, const Profile& profile,
                            int num_candidates) const {
  return ValueOfCounts(state, DeltaCounts(profile, num_candidates));
}

ValidationReport SenderUtility::Validate(const Instance& inst) const {
  ValidationReport report;
  if (!anonymous_) {
    if (rule_.is_kvoting() &&
        (rule_.k() < 1 || rule_.k() > inst.num_receivers())) {
      report.violations.push_back("rule threshold out of range");
    }
    return report;
  }
  if (static_cast<int>(tables_.size()) != inst.num_states()) {
    report.violations.push_back("anonymous utility needs one table per state");
    return report;
  }
  const int num_c = inst.num_candidates();
  const int num_r = inst.num_receivers();
  // Number of count vectors of length |C| summing to |R|.
  double expected = 1.0;
  for (int i = 1; i <= num_c - 1; ++i) {
    expected = expected * (num_r + i) / i;
  }
  for (int s = 0; s < inst.num_states(); ++s) {
    for (const auto& [counts, value] : tables_[s]) {
      if (static_cast<int>(counts.size()) != num_c ||
          std::accumulate(counts.begin(), counts.end(), 0) != num_r ||
          std::any_of(counts.begin(), counts.end(),
                      [](int x) { return x < 0; })) {
        report.violations.push_back("state " + std::to_string(s) +
                                    ": malformed count vector");
      }
      if (!std::isfinite(value)) {
        report.violations.push_back("state " + std::to_string(s) +
                                    ": non-finite utility value");
      }
    }
    if (std::llround(expected) != static_cast<long long>(tables_[s].size())) {
      report.violations.push_back("state " + std::to_string(s) +
                                  ": anonymous utility is not total (" +
                                  std::to_string(tables_[s].size()) + " of " +
                                  std::to_string(std::llround(expected)) +
                                  " count vectors)");
    }
  }
  return report;
}

SenderUtility RuleUtility(const Instance& inst) {
  return SenderUtility::FromRule(inst.rule);
}

SenderUtility AnonymousFromRule(const Instance& inst, const VotingRule& rule) {
  SenderUtility::CountTable table;
  const int num_c = inst.num_candidates();
  CountVector counts(num_c, 0);
  // Enumerate compositions of |R| into |C| parts.
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == num_c - 1) {
      counts[pos] = left;
      table[counts] = RuleWins(rule, counts) ? 1.0 : 0.0;
      return;
    }
    for (int x = left; x >= 0; --x) {
      counts[pos] = x;
      self(self, pos + 1, left - x);
    }
  };
  rec(rec, 0, inst.num_receivers());
  return SenderUtility::Anonymous(
      std::vector<SenderUtility::CountTable>(inst.num_states(), table));
}

// --- Counting and winning ---------------------------------------------------

CountVector DeltaCounts(const Profile& profile, int num_candidates) {
  CountVector counts(num_candidates, 0);
  for (int c : profile) {
    if (c < 0 || c >= num_candidates) {
      throw Error(ErrorCode::kInvalidArgument,
                  "profile entry out of candidate range");
    }
    ++counts[c];
  }
  return counts;
}

CountVector DeltaCounts(const Instance& inst, const Profile& profile) {
  if (static_cast<int>(profile.size()) != inst.num_receivers()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "profile length " + std::to_string(profile.size()) +
                    " does not match " + std::to_string(inst.num_receivers()) +
                    " receivers");
  }
  return DeltaCounts(profile, inst.num_candidates());
}

bool RuleWins(const VotingRule& rule, const CountVector& counts) {
  if (counts.empty()) return false;
  if (rule.is_kvoting()) return counts[kSenderCandidate] >= rule.k();
  for (std::size_t c = 1; c < counts.size(); ++c) {
    if (counts[c] >= counts[kSenderCandidate]) return false;
  }
  return true;
}

namespace {

template <typename Rows>
double RowsValue(const Instance& inst, const SenderUtility& f,
                 const Rows& rows) {
  if (static_cast<int>(rows.size()) != inst.num_states()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "scheme state count does not match the instance");
  }
  double value = 0.0;
  for (int s = 0; s < inst.num_states(); ++s) {
    double state_value = 0.0;
    for (const auto& [profile, p] : rows[s]) {
      state_value += p * f.ValueOfCounts(s, DeltaCounts(inst, profile));
    }
    value += inst.prior[s] * state_value;
  }
  return value;
}

}  // namespace

double SenderValue(const Instance& inst, const SenderUtility& f,
                   const JointScheme& scheme) {
  return RowsValue(inst, f, scheme.rows);
}

double SenderValue(const Instance& inst, const SenderUtility& f,
                   const PublicScheme& scheme) {
  return RowsValue(inst, f, scheme.rows);
}

// --- Receivers --------------------------------------------------------------

int BestResponse(const Instance& inst, int receiver,
                 std::span<const double> posterior, double tie_tolerance) {
  const int n = inst.num_states();
  const int num_c = inst.num_candidates();
  std::vector<double> expected(num_c, 0.0);
  for (int c = 0; c < num_c; ++c) {
    for (int s = 0; s < n; ++s) {
      expected[c] += posterior[s] * inst.utility(receiver, s, c);
    }
  }
  const double best = *std::max_element(expected.begin(), expected.end());
  for (int c = 0; c < num_c; ++c) {
    if (expected[c] >= best - tie_tolerance) return c;
  }
  return kSenderCandidate;
}

Profile StateBestResponses(const Instance& inst, int state) {
  std::vector<double> point(inst.num_states(), 0.0);
  point[state] = 1.0;
  Profile profile(inst.num_receivers());
  for (int r = 0; r < inst.num_receivers(); ++r) {
    profile[r] = BestResponse(inst, r, point);
  }
  return profile;
}

// --- Persuasiveness ---------------------------------------------------------

namespace {

// gain[r][c][c'] = sum_theta mu(theta) P(recommend c to r | theta)
//                  * (u_r(theta,c) - u_r(theta,c')).
using GainTable = std::vector<std::vector<std::vector<double>>>;

PersuasivenessReport WorstOf(const GainTable& gain, double tol) {
  PersuasivenessReport report;
  for (std::size_t r = 0; r < gain.size(); ++r) {
    for (std::size_t c = 0; c < gain[r].size(); ++c) {
      for (std::size_t d = 0; d < gain[r][c].size(); ++d) {
        if (c == d) continue;
        const double violation = -gain[r][c][d];
        if (violation > report.worst_violation) {
          report.worst_violation = violation;
          report.receiver = static_cast<int>(r);
          report.recommended = static_cast<int>(c);
          report.deviation = static_cast<int>(d);
        }
      }
    }
  }
  report.persuasive = report.worst_violation <= tol;
  return report;
}

GainTable GainsFromMarginals(const Instance& inst, const MarginalScheme& m) {
  const int num_c = inst.num_candidates();
  GainTable gain(inst.num_receivers(),
                 std::vector<std::vector<double>>(
                     num_c, std::vector<double>(num_c, 0.0)));
  for (int r = 0; r < inst.num_receivers(); ++r) {
    for (int s = 0; s < inst.num_states(); ++s) {
      for (int c = 0; c < num_c; ++c) {
        const double mass = inst.prior[s] * m.prob[r][s][c];
        if (mass == 0.0) continue;
        for (int d = 0; d < num_c; ++d) {
          gain[r][c][d] +=
              mass * (inst.utility(r, s, c) - inst.utility(r, s, d));
        }
      }
    }
  }
  return gain;
}

}  // namespace

PersuasivenessReport CheckPersuasiveMarginal(const Instance& inst,
                                             const MarginalScheme& scheme,
                                             double tol) {
  const ValidationReport shape = ValidateMarginalScheme(inst, scheme);
  if (!shape.ok()) {
    throw Error(ErrorCode::kDimensionMismatch, shape.violations.front());
  }
  return WorstOf(GainsFromMarginals(inst, scheme), tol);
}

PersuasivenessReport CheckPersuasiveJoint(const Instance& inst,
                                          const JointScheme& scheme,
                                          double tol) {
  // The joint obedience constraints only involve per-receiver marginals.
  return CheckPersuasiveMarginal(inst, MarginalsOf(inst, scheme), tol);
}

PersuasivenessReport CheckPersuasivePublic(const Instance& inst,
                                           const PublicScheme& scheme,
                                           double tol) {
  const int n = inst.num_states();
  const int num_c = inst.num_candidates();
  if (static_cast<int>(scheme.rows.size()) != n) {
    throw Error(ErrorCode::kDimensionMismatch,
                "scheme state count does not match the instance");
  }
  // Unnormalized posterior mass per signal.
  std::map<Profile, std::vector<double>> mass;
  for (int s = 0; s < n; ++s) {
    for (const auto& [profile, p] : scheme.rows[s]) {
      DeltaCounts(inst, profile);
      auto& v = mass[profile];
      v.resize(n, 0.0);
      v[s] += inst.prior[s] * p;
    }
  }
  PersuasivenessReport report;
  for (const auto& [signal, w] : mass) {
    for (int r = 0; r < inst.num_receivers(); ++r) {
      const int c = signal[r];
      for (int d = 0; d < num_c; ++d) {
        if (d == c) continue;
        double gain = 0.0;
        for (int s = 0; s < n; ++s) {
          gain += w[s] * (inst.utility(r, s, c) - inst.utility(r, s, d));
        }
        if (-gain > report.worst_violation) {
          report.worst_violation = -gain;
          report.receiver = r;
          report.recommended = c;
          report.deviation = d;
          report.signal = signal;
        }
      }
    }
  }
  report.persuasive = report.worst_violation <= tol;
  return report;
}

// --- Scheme transforms ------------------------------------------------------

MarginalScheme MarginalsOf(const Instance& inst, const JointScheme& scheme) {
  if (static_cast<int>(scheme.rows.size()) != inst.num_states()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "scheme state count does not match the instance");
  }
  MarginalScheme m;
  m.prob.assign(inst.num_receivers(),
                std::vector<std::vector<double>>(
                    inst.num_states(),
                    std::vector<double>(inst.num_candidates(), 0.0)));
  for (int s = 0; s < inst.num_states(); ++s) {
    for (const auto& [profile, p] : scheme.rows[s]) {
      DeltaCounts(inst, profile);
      for (int r = 0; r < inst.num_receivers(); ++r) {
        m.prob[r][s][profile[r]] += p;
      }
    }
  }
  return m;
}

JointScheme ProductScheme(const Instance& inst, const MarginalScheme& marginals,
                          std::uint64_t max_profiles) {
  const ProfileSpace space(inst.num_receivers(), inst.num_candidates(),
                           max_profiles);
  JointScheme scheme;
  scheme.rows.resize(inst.num_states());
  for (int s = 0; s < inst.num_states(); ++s) {
    Profile profile(inst.num_receivers(), 0);
    do {
      double p = 1.0;
      for (int r = 0; r < inst.num_receivers() && p > 0.0; ++r) {
        p *= marginals.prob[r][s][profile[r]];
      }
      if (p > 0.0) scheme.rows[s][profile] = p;
    } while (space.Next(profile));
  }
  return scheme;
}

JointScheme DeterministicScheme(const std::vector<Profile>& per_state) {
  JointScheme scheme;
  scheme.rows.resize(per_state.size());
  for (std::size_t s = 0; s < per_state.size(); ++s) {
    scheme.rows[s][per_state[s]] = 1.0;
  }
  return scheme;
}

}  // namespace persuasion
