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

#ifndef PERSUASION_TESTS_TEST_UTIL_H_
#define PERSUASION_TESTS_TEST_UTIL_H_

// Random instance generators and brute-force reference routines used by the
// unit and acceptance tests. Nothing here calls into the solvers under test.

#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "persuasion/model.h"

namespace ptest {

using persuasion::CountVector;
using persuasion::Instance;
using persuasion::Profile;

inline std::string DataPath(const std::string& name) {
  return std::string(PERSUASION_TEST_DATA_DIR) + "/" + name;
}

// Three voters, states A, B, C uniform; voter i gains 1 from c0 only in
// the i-th state and -1 otherwise, while c1 pays -1/4 everywhere.
inline Instance Example1(int k = 2) {
  Instance inst;
  inst.states = {"A", "B", "C"};
  inst.prior = {1.0 / 3, 1.0 / 3, 1.0 / 3};
  inst.candidates = {"c0", "c1"};
  for (int i = 0; i < 3; ++i) {
    persuasion::Receiver r;
    r.name = "voter" + std::to_string(i + 1);
    for (int s = 0; s < 3; ++s) r.utility.push_back({s == i ? 1.0 : -1.0, -0.25});
    inst.receivers.push_back(r);
  }
  inst.rule = persuasion::VotingRule::KVoting(k);
  return inst;
}

// Two uniform states; voter i wants c0 only in state i, and pays -2 for c0
// in the other state. c1 is worth 0.
inline Instance GapInstance() {
  Instance inst;
  inst.states = {"theta1", "theta2"};
  inst.prior = {0.5, 0.5};
  inst.candidates = {"c0", "c1"};
  inst.receivers = {{"voter1", {{1.0, 0.0}, {-2.0, 0.0}}},
                    {"voter2", {{-2.0, 0.0}, {1.0, 0.0}}}};
  inst.rule = persuasion::VotingRule::KVoting(2);
  return inst;
}

inline double Uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline int UniformInt(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Utilities on [-1, 1]; with `grid` > 0 they are rounded to multiples of
// 1/grid, which produces ties and degenerate LPs on purpose.
inline Instance RandomInstance(std::mt19937_64& rng, int states, int receivers,
                               int candidates, persuasion::VotingRule rule,
                               bool random_prior = true, int grid = 0) {
  Instance inst;
  for (int s = 0; s < states; ++s) inst.states.push_back("s" + std::to_string(s));
  for (int c = 0; c < candidates; ++c) {
    inst.candidates.push_back("c" + std::to_string(c));
  }
  double total = 0.0;
  for (int s = 0; s < states; ++s) {
    inst.prior.push_back(random_prior ? Uniform(rng, 0.1, 1.0) : 1.0);
    total += inst.prior.back();
  }
  for (double& p : inst.prior) p /= total;
  for (int r = 0; r < receivers; ++r) {
    persuasion::Receiver rec;
    rec.name = "r" + std::to_string(r);
    rec.utility.assign(states, std::vector<double>(candidates));
    for (auto& row : rec.utility) {
      for (double& u : row) {
        u = Uniform(rng, -1.0, 1.0);
        if (grid > 0) u = std::round(u * grid) / grid;
      }
    }
    inst.receivers.push_back(std::move(rec));
  }
  inst.rule = rule;
  return inst;
}

// Calls fn on every profile in C^R, receiver 0 varying slowest.
inline void ForEachProfile(int receivers, int candidates,
                           const std::function<void(const Profile&)>& fn) {
  Profile p(receivers, 0);
  while (true) {
    fn(p);
    int i = receivers - 1;
    while (i >= 0 && p[i] == candidates - 1) p[i--] = 0;
    if (i < 0) return;
    ++p[i];
  }
}

inline CountVector Counts(const Profile& p, int candidates) {
  CountVector counts(candidates, 0);
  for (int c : p) ++counts[c];
  return counts;
}

inline bool PluralityWins(const CountVector& counts) {
  for (std::size_t c = 1; c < counts.size(); ++c) {
    if (counts[c] >= counts[0]) return false;
  }
  return true;
}

// Sum of weights along `p`, in receiver order.
inline double WeightOf(const std::vector<std::vector<double>>& w,
                       const Profile& p) {
  double total = 0.0;
  for (std::size_t r = 0; r < p.size(); ++r) total += w[r][p[r]];
  return total;
}

// max_s f(counts(s)) + sum_r w_r(s_r) by enumeration.
inline double BruteMaxProfile(
    const std::vector<std::vector<double>>& w, int candidates,
    const std::function<double(const CountVector&)>& f) {
  double best = -INFINITY;
  ForEachProfile(static_cast<int>(w.size()), candidates, [&](const Profile& p) {
    best = std::max(best, f(Counts(p, candidates)) + WeightOf(w, p));
  });
  return best;
}

// A random anonymous table per state, total over every count vector.
inline std::vector<std::map<CountVector, double>> RandomAnonymousTables(
    std::mt19937_64& rng, const Instance& inst) {
  std::vector<std::map<CountVector, double>> tables(inst.num_states());
  for (auto& table : tables) {
    ForEachProfile(inst.num_receivers(), inst.num_candidates(),
                   [&](const Profile& p) {
                     const CountVector c = Counts(p, inst.num_candidates());
                     if (!table.count(c)) table[c] = Uniform(rng, 0.0, 1.0);
                   });
  }
  return tables;
}

inline std::vector<std::vector<double>> RandomWeights(std::mt19937_64& rng,
                                                      int receivers,
                                                      int candidates) {
  std::vector<std::vector<double>> w(receivers, std::vector<double>(candidates));
  for (auto& row : w) {
    for (double& x : row) x = Uniform(rng, -2.0, 2.0);
  }
  return w;
}

}  // namespace ptest

#endif  // PERSUASION_TESTS_TEST_UTIL_H_
