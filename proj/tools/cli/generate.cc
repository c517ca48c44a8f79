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

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "cli/commands.h"
#include "cli/internal.h"
#include "persuasion/errors.h"

namespace persuade {

using persuasion::Error;
using persuasion::ErrorCode;

persuasion::Instance GenerateInstance(const RunConfig& cfg,
                                      std::mt19937_64& rng) {
  if (cfg.num_states < 1 || cfg.num_receivers < 1 || cfg.num_candidates < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "gen needs >= 1 state, >= 1 receiver and >= 2 candidates");
  }
  std::uniform_real_distribution<double> payoff(-1.0, 1.0);
  std::uniform_real_distribution<double> weight(0.05, 1.0);
  persuasion::Instance inst;
  for (int s = 0; s < cfg.num_states; ++s) {
    inst.states.push_back("s" + std::to_string(s));
  }
  for (int c = 0; c < cfg.num_candidates; ++c) {
    inst.candidates.push_back("c" + std::to_string(c));
  }
  if (cfg.random_prior) {
    double total = 0.0;
    for (int s = 0; s < cfg.num_states; ++s) {
      inst.prior.push_back(weight(rng));
      total += inst.prior.back();
    }
    for (double& p : inst.prior) p /= total;
  } else {
    inst.prior.assign(cfg.num_states, 1.0 / cfg.num_states);
  }
  for (int r = 0; r < cfg.num_receivers; ++r) {
    persuasion::Receiver receiver;
    receiver.name = "r" + std::to_string(r);
    receiver.utility.assign(cfg.num_states,
                            std::vector<double>(cfg.num_candidates));
    for (auto& row : receiver.utility) {
      for (double& u : row) u = payoff(rng);
    }
    inst.receivers.push_back(std::move(receiver));
  }
  if (cfg.rule == "plurality") {
    inst.rule = persuasion::VotingRule::Plurality();
  } else if (cfg.rule == "k-voting") {
    int k = cfg.k.value_or(0);
    if (!cfg.k) {
      k = std::uniform_int_distribution<int>(1, cfg.num_receivers)(rng);
    }
    inst.rule = persuasion::VotingRule::KVoting(k);
  } else {
    throw Error(ErrorCode::kInvalidArgument, "unknown rule '" + cfg.rule + "'");
  }
  persuasion::RequireValidInstance(inst);
  return inst;
}

persuasion::MsiInstance GenerateMsi(const RunConfig& cfg, std::mt19937_64& rng) {
  persuasion::MsiInstance msi;
  for (int e = 0; e < cfg.msi_elements; ++e) {
    msi.elements.push_back("e" + std::to_string(e + 1));
  }
  std::bernoulli_distribution member(0.5);
  std::uniform_int_distribution<int> any(0, std::max(0, cfg.msi_elements - 1));
  for (int i = 0; i < cfg.msi_subsets; ++i) {
    std::vector<int> subset;
    for (int e = 0; e < cfg.msi_elements; ++e) {
      if (member(rng)) subset.push_back(e);
    }
    if (subset.empty() && cfg.msi_elements > 0) subset.push_back(any(rng));
    msi.subsets.push_back(std::move(subset));
  }
  msi.q = cfg.msi_q;
  msi.k = cfg.k ? *cfg.k
                : std::uniform_int_distribution<int>(
                      1, std::max(1, cfg.msi_subsets))(rng);
  const persuasion::ValidationReport report = persuasion::ValidateMsi(msi);
  if (!report.ok()) {
    throw Error(ErrorCode::kInvalidArgument,
                "invalid MSI parameters: " + report.violations.front());
  }
  return msi;
}

int CmdGen(const RunConfig& cfg, std::ostream& out) {
  std::mt19937_64 rng(cfg.seed);
  auto one = [&]() {
    return cfg.msi ? persuasion::MsiToJson(GenerateMsi(cfg, rng))
                   : persuasion::InstanceToJson(GenerateInstance(cfg, rng));
  };
  if (cfg.count == 1) {
    Emit(one(), cfg.out, out);
    return kExitOk;
  }
  if (cfg.out.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "--out must name a directory when --count > 1");
  }
  std::error_code ec;
  std::filesystem::create_directories(cfg.out, ec);
  if (ec) {
    throw Error(ErrorCode::kIo, "cannot create '" + cfg.out + "': " + ec.message());
  }
  const char* prefix = cfg.msi ? "msi" : "instance";
  for (int i = 0; i < cfg.count; ++i) {
    char name[64];
    std::snprintf(name, sizeof(name), "%s_%04d.json", prefix, i);
    persuasion::WriteJsonFile((std::filesystem::path(cfg.out) / name).string(),
                              one());
  }
  out << "wrote " << cfg.count << " files to " << cfg.out << '\n';
  return kExitOk;
}

}  // namespace persuade
