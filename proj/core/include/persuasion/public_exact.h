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

#ifndef PERSUASION_PUBLIC_EXACT_H_
#define PERSUASION_PUBLIC_EXACT_H_

// Exact public signaling at desk scale.
//
// A direct public signal is a full recommendation profile s seen by every
// receiver; it is obeyed when, under the induced posterior p, each s_r is a
// best response for receiver r. Obedience is checked per signal on the
// posterior, which is strictly more demanding than the per-receiver marginal
// constraints of private signaling.
//
// SolvePublicExact works in posterior space. The obedience region of each
// profile is a polytope in the simplex cut out by receiver indifference
// hyperplanes, so an optimal scheme splits the prior over vertices of the
// arrangement {indifference hyperplanes, simplex facets}. All such vertices
// are enumerated in exact rational arithmetic, each is scored with the best
// profile it supports (ties resolved for the sender), and a small LP picks
// the split. SolvePublicDirectLp writes the literal LP over x(theta, s) with
// one obedience row per (s, r, c') and is kept as an independent route for
// small instances.

#include <cstdint>
#include <string>

#include "persuasion/lp.h"
#include "persuasion/model.h"

namespace persuasion {

struct PublicOptions {
  // Guard on n * |C|^|R| (profiles scored per vertex and direct-LP size).
  std::uint64_t max_columns = 20000;
  // Guard on the number of hyperplane subsets examined.
  std::uint64_t max_vertex_candidates = 2'000'000;
  LpOptions lp;
};

struct PublicResult {
  LpStatus status = LpStatus::kNumericalFailure;
  double value = 0.0;
  PublicScheme scheme;
  // Distinct posteriors offered to the final LP.
  int num_posteriors = 0;
  int lp_iterations = 0;
  std::string exact_value;
};

PublicResult SolvePublicExact(const Instance& inst, const SenderUtility& f,
                              const PublicOptions& options = {});

PublicResult SolvePublicDirectLp(const Instance& inst, const SenderUtility& f,
                                 const PublicOptions& options = {});

}  // namespace persuasion

#endif  // PERSUASION_PUBLIC_EXACT_H_
