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


#ifndef PERSUASION_TESTS_CASES_H_
#define PERSUASION_TESTS_CASES_H_

// Seeded case generators shared by the property tests and the acceptance
// binary. Unlike test_util.h these may call solvers to build inputs.

#include <random>
#include <string>
#include <vector>

#include "persuasion/composition.h"
#include "persuasion/msi.h"
#include "persuasion/private_kvoting.h"
#include "test_util.h"

namespace ptest {

inline persuasion::MarginalScheme Mix(const persuasion::MarginalScheme& a,
                                      const persuasion::MarginalScheme& b, double t) {
  persuasion::MarginalScheme out = a;
  for (std::size_t r = 0; r < a.prob.size(); ++r) {
    for (std::size_t s = 0; s < a.prob[r].size(); ++s) {
      for (std::size_t c = 0; c < a.prob[r][s].size(); ++c) {
        out.prob[r][s][c] = (1 - t) * a.prob[r][s][c] + t * b.prob[r][s][c];
      }
    }
  }
  return out;
}

inline persuasion::MarginalScheme Informative(const Instance& inst) {
  persuasion::MarginalScheme m;
  m.prob.assign(inst.num_receivers(),
                std::vector<std::vector<double>>(
                    inst.num_states(), std::vector<double>(inst.num_candidates(), 0.0)));
  for (int s = 0; s < inst.num_states(); ++s) {
    const Profile best = persuasion::StateBestResponses(inst, s);
    for (int r = 0; r < inst.num_receivers(); ++r) m.prob[r][s][best[r]] = 1.0;
  }
  return m;
}

// Base: product of a persuasive mixture between the fully informative and
// the k-voting optimal marginals. Targets: a mixture further toward the
// optimum. Both are persuasive and the targets dominate on c0.
struct CompositionCase {
  Instance inst;
  int k = 1;
  persuasion::JointScheme base;
  persuasion::MarginalScheme targets;
  persuasion::LpStatus status = persuasion::LpStatus::kOptimal;
};

inline CompositionCase RandomCompositionCase(std::mt19937_64& rng) {
  using namespace persuasion;
  CompositionCase out;
  const int n = UniformInt(rng, 1, 3);
  const int R = UniformInt(rng, 1, 4);
  const int C = UniformInt(rng, 2, 3);
  out.k = UniformInt(rng, 1, R);
  out.inst = RandomInstance(rng, n, R, C, VotingRule::KVoting(out.k));
  const KVotingResult opt = SolvePrivateKVoting(out.inst, out.k);
  out.status = opt.status;
  const MarginalScheme best = CompleteMarginals(out.inst, opt.c0_marginals);
  const MarginalScheme low = Informative(out.inst);
  const double t1 = Uniform(rng, 0.0, 1.0);
  const double t2 = Uniform(rng, t1, 1.0);
  out.base = ProductScheme(out.inst, Mix(low, best, t1));
  out.targets = Mix(low, best, t2);
  return out;
}

// Each element joins each subset with probability 1/2.
inline persuasion::MsiInstance RandomMsi(std::mt19937_64& rng, int n, int m, int q) {
  persuasion::MsiInstance msi;
  for (int e = 0; e < n; ++e) msi.elements.push_back("e" + std::to_string(e));
  for (int i = 0; i < m; ++i) {
    std::vector<int> subset;
    for (int e = 0; e < n; ++e) {
      if (UniformInt(rng, 0, 1)) subset.push_back(e);
    }
    msi.subsets.push_back(subset);
  }
  msi.k = UniformInt(rng, 1, m);
  msi.q = q;
  return msi;
}

}  // namespace ptest

#endif  // PERSUASION_TESTS_CASES_H_
