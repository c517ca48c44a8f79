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

#include "persuasion/public_exact.h"

#include <gmpxx.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "persuasion/errors.h"
#include "persuasion/profile_space.h"

namespace persuasion {

namespace {

using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

void CheckInputs(const Instance& inst, const SenderUtility& f) {
  RequireValidInstance(inst);
  const ValidationReport report = f.Validate(inst);
  if (!report.ok()) {
    throw Error(ErrorCode::kInvalidArgument,
                "sender utility: " + report.violations.front());
  }
}

// Scales so the first nonzero entry is +1; two hyperplanes through the
// origin coincide iff their canonical forms match.
RationalVector Canonical(RationalVector a) {
  for (const Rational& x : a) {
    if (x != 0) {
      const Rational lead = x;
      for (Rational& y : a) y /= lead;
      break;
    }
  }
  return a;
}

// Solves the square system in place; false when singular.
bool SolveExact(std::vector<RationalVector> m, RationalVector rhs,
                RationalVector& x) {
  const int n = static_cast<int>(m.size());
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int row = col; row < n; ++row) {
      if (m[row][col] != 0) {
        pivot = row;
        break;
      }
    }
    if (pivot < 0) return false;
    std::swap(m[pivot], m[col]);
    std::swap(rhs[pivot], rhs[col]);
    for (int row = 0; row < n; ++row) {
      if (row == col || m[row][col] == 0) continue;
      const Rational factor = m[row][col] / m[col][col];
      for (int j = col; j < n; ++j) m[row][j] -= factor * m[col][j];
      rhs[row] -= factor * rhs[col];
    }
  }
  x.resize(n);
  for (int i = 0; i < n; ++i) x[i] = rhs[i] / m[i][i];
  return true;
}

std::uint64_t Binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t result = 1;
  for (int i = 1; i <= k; ++i) {
    const std::uint64_t factor = static_cast<std::uint64_t>(n - k + i);
    if (result > UINT64_MAX / factor) return UINT64_MAX;
    result = result * factor / static_cast<std::uint64_t>(i);
  }
  return result;
}

struct ScoredPosterior {
  RationalVector posterior;
  Profile profile;
  double score = 0.0;
};

// Best profile supported at `posterior`: every receiver picks from its exact
// best-response set, and the sender chooses among those profiles.
ScoredPosterior ScorePosterior(const Instance& inst, const SenderUtility& f,
                               const std::vector<std::vector<RationalVector>>&
                                   utility,  // [r][c][theta]
                               const RationalVector& posterior,
                               std::uint64_t max_profiles) {
  const int n = inst.num_states();
  const int num_r = inst.num_receivers();
  const int num_c = inst.num_candidates();
  std::vector<std::vector<int>> responses(num_r);
  std::uint64_t product = 1;
  for (int r = 0; r < num_r; ++r) {
    std::vector<Rational> expected(num_c, Rational(0));
    for (int c = 0; c < num_c; ++c) {
      for (int s = 0; s < n; ++s) {
        if (posterior[s] != 0) expected[c] += posterior[s] * utility[r][c][s];
      }
    }
    const Rational best = *std::max_element(expected.begin(), expected.end());
    for (int c = 0; c < num_c; ++c) {
      if (expected[c] == best) responses[r].push_back(c);
    }
    product *= responses[r].size();
    if (product > max_profiles) {
      throw Error(ErrorCode::kSizeGuard,
                  "too many tied best-response profiles at a posterior");
    }
  }
  std::vector<double> weights(n);
  for (int s = 0; s < n; ++s) weights[s] = posterior[s].get_d();

  ScoredPosterior out;
  out.posterior = posterior;
  bool have = false;
  std::vector<int> digit(num_r, 0);
  Profile profile(num_r);
  while (true) {
    for (int r = 0; r < num_r; ++r) profile[r] = responses[r][digit[r]];
    double score = 0.0;
    for (int s = 0; s < n; ++s) {
      if (weights[s] != 0.0) score += weights[s] * f.Value(s, profile, num_c);
    }
    if (!have || score > out.score) {
      have = true;
      out.score = score;
      out.profile = profile;
    }
    int r = num_r - 1;
    while (r >= 0 && ++digit[r] == static_cast<int>(responses[r].size())) {
      digit[r] = 0;
      --r;
    }
    if (r < 0) break;
  }
  return out;
}

}  // namespace

PublicResult SolvePublicExact(const Instance& inst, const SenderUtility& f,
                              const PublicOptions& options) {
  CheckInputs(inst, f);
  const int n = inst.num_states();
  const int num_r = inst.num_receivers();
  const int num_c = inst.num_candidates();
  if (CountProfiles(num_r, num_c) >
      options.max_columns / static_cast<std::uint64_t>(n)) {
    throw Error(ErrorCode::kSizeGuard,
                "public signaling instance exceeds the size guard of " +
                    std::to_string(options.max_columns) +
                    " state-profile pairs");
  }

  std::vector<std::vector<RationalVector>> utility(
      num_r, std::vector<RationalVector>(num_c, RationalVector(n)));
  for (int r = 0; r < num_r; ++r) {
    for (int c = 0; c < num_c; ++c) {
      for (int s = 0; s < n; ++s) {
        utility[r][c][s] = Rational(inst.utility(r, s, c));
      }
    }
  }

  // Hyperplanes through the origin: receiver indifferences and facets.
  std::set<RationalVector> unique;
  for (int r = 0; r < num_r; ++r) {
    for (int c = 0; c < num_c; ++c) {
      for (int d = c + 1; d < num_c; ++d) {
        RationalVector a(n);
        bool zero = true;
        for (int s = 0; s < n; ++s) {
          a[s] = utility[r][c][s] - utility[r][d][s];
          if (a[s] != 0) zero = false;
        }
        if (!zero) unique.insert(Canonical(std::move(a)));
      }
    }
  }
  for (int s = 0; s < n; ++s) {
    RationalVector e(n, Rational(0));
    e[s] = 1;
    unique.insert(std::move(e));
  }
  const std::vector<RationalVector> planes(unique.begin(), unique.end());
  const int h = static_cast<int>(planes.size());
  const std::uint64_t combos = Binomial(h, n - 1);
  if (combos > options.max_vertex_candidates) {
    throw Error(ErrorCode::kSizeGuard,
                "posterior vertex enumeration would examine " +
                    std::to_string(combos) + " hyperplane subsets");
  }

  std::set<RationalVector> vertices;
  {
    std::vector<int> pick(n - 1);
    for (int i = 0; i < n - 1; ++i) pick[i] = i;
    RationalVector ones(n, Rational(1));
    while (true) {
      std::vector<RationalVector> m;
      m.reserve(n);
      for (int i : pick) m.push_back(planes[i]);
      m.push_back(ones);
      RationalVector rhs(n, Rational(0));
      rhs[n - 1] = 1;
      RationalVector p;
      if (SolveExact(std::move(m), std::move(rhs), p) &&
          std::all_of(p.begin(), p.end(),
                      [](const Rational& x) { return x >= 0; })) {
        vertices.insert(std::move(p));
      }
      // Next (n-1)-combination of [0, h).
      int i = n - 2;
      while (i >= 0 && pick[i] == h - (n - 1) + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < n - 1; ++j) pick[j] = pick[j - 1] + 1;
    }
  }

  const std::uint64_t profile_guard =
      std::max<std::uint64_t>(1, options.max_columns / n);
  std::vector<ScoredPosterior> scored;
  scored.reserve(vertices.size());
  for (const RationalVector& v : vertices) {
    scored.push_back(ScorePosterior(inst, f, utility, v, profile_guard));
  }

  LpProblem lp;
  for (int s = 0; s < n; ++s) {
    lp.AddConstraint({}, Relation::kEqual, inst.prior[s],
                     "prior[" + inst.states[s] + "]");
  }
  for (std::size_t j = 0; j < scored.size(); ++j) {
    const int var = lp.AddVariable(0.0, kInfinity, scored[j].score,
                                   "lambda[" + std::to_string(j) + "]");
    for (int s = 0; s < n; ++s) {
      const double p = scored[j].posterior[s].get_d();
      if (p != 0.0) lp.AddTerm(s, var, p);
    }
  }
  const LpSolution sol = SolveLp(lp, options.lp);
  PublicResult result;
  result.status = sol.status;
  result.num_posteriors = static_cast<int>(scored.size());
  result.lp_iterations = sol.iterations;
  if (sol.status != LpStatus::kOptimal) return result;
  result.value = sol.objective;
  result.exact_value = sol.exact_objective;

  result.scheme.rows.resize(n);
  for (std::size_t j = 0; j < scored.size(); ++j) {
    const double lambda = sol.primal[j];
    if (lambda <= 1e-13) continue;
    for (int s = 0; s < n; ++s) {
      const double mass = lambda * scored[j].posterior[s].get_d();
      if (mass > 0.0) {
        result.scheme.rows[s][scored[j].profile] += mass / inst.prior[s];
      }
    }
  }
  for (auto& row : result.scheme.rows) {
    double total = 0.0;
    for (const auto& [profile, p] : row) total += p;
    if (total > 0.0) {
      for (auto& [profile, p] : row) p /= total;
    }
  }
  return result;
}

PublicResult SolvePublicDirectLp(const Instance& inst, const SenderUtility& f,
                                 const PublicOptions& options) {
  CheckInputs(inst, f);
  const int n = inst.num_states();
  const int num_r = inst.num_receivers();
  const int num_c = inst.num_candidates();
  const std::uint64_t per_state = CountProfiles(num_r, num_c);
  if (per_state > options.max_columns / static_cast<std::uint64_t>(n)) {
    throw Error(ErrorCode::kSizeGuard,
                "direct public LP exceeds the column guard");
  }
  const ProfileSpace space(num_r, num_c);
  LpProblem lp;
  for (int s = 0; s < n; ++s) {
    lp.AddConstraint({}, Relation::kEqual, inst.prior[s],
                     "prior[" + inst.states[s] + "]");
  }
  std::vector<std::pair<int, Profile>> columns;
  Profile profile(num_r, 0);
  do {
    std::vector<int> vars(n);
    for (int s = 0; s < n; ++s) {
      vars[s] = lp.AddVariable(0.0, kInfinity, f.Value(s, profile, num_c));
      lp.AddTerm(s, vars[s], 1.0);
      columns.emplace_back(s, profile);
    }
    for (int r = 0; r < num_r; ++r) {
      const int c = profile[r];
      for (int d = 0; d < num_c; ++d) {
        if (d == c) continue;
        std::vector<LpProblem::Term> terms;
        for (int s = 0; s < n; ++s) {
          const double gain = inst.utility(r, s, c) - inst.utility(r, s, d);
          if (gain != 0.0) terms.push_back({vars[s], gain});
        }
        if (!terms.empty()) {
          lp.AddConstraint(std::move(terms), Relation::kGreaterEqual, 0.0);
        }
      }
    }
  } while (space.Next(profile));

  const LpSolution sol = SolveLp(lp, options.lp);
  PublicResult result;
  result.status = sol.status;
  result.lp_iterations = sol.iterations;
  if (sol.status != LpStatus::kOptimal) return result;
  result.value = sol.objective;
  result.exact_value = sol.exact_objective;
  result.scheme.rows.resize(n);
  for (std::size_t j = 0; j < columns.size(); ++j) {
    const double x = sol.primal[j];
    if (x <= 1e-13) continue;
    const int s = columns[j].first;
    result.scheme.rows[s][columns[j].second] += x / inst.prior[s];
  }
  for (auto& row : result.scheme.rows) {
    double total = 0.0;
    for (const auto& [p_profile, p] : row) total += p;
    if (total > 0.0) {
      for (auto& [p_profile, p] : row) p /= total;
    }
  }
  return result;
}

}  // namespace persuasion
