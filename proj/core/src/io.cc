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

#include "persuasion/io.h"

#include <fstream>
#include <string>
#include <vector>

#include "persuasion/errors.h"

namespace persuasion {

namespace {

[[noreturn]] void ParseError(const std::string& what) {
  throw Error(ErrorCode::kParse, what);
}

// Resolves a name-or-index reference against `names`.
int Lookup(const Json& ref, const std::vector<std::string>& names,
           const char* kind) {
  if (ref.is_number_integer()) {
    const int idx = ref.get<int>();
    if (idx < 0 || idx >= static_cast<int>(names.size())) {
      ParseError(std::string(kind) + " index out of range");
    }
    return idx;
  }
  if (ref.is_string()) {
    const std::string name = ref.get<std::string>();
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (names[i] == name) return static_cast<int>(i);
    }
    ParseError(std::string("unknown ") + kind + " '" + name + "'");
  }
  ParseError(std::string(kind) + " must be a name or an index");
}

std::string AsName(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

std::vector<std::string> ReceiverNames(const Instance& inst) {
  std::vector<std::string> names;
  for (const auto& r : inst.receivers) names.push_back(r.name);
  return names;
}

Profile ParseProfile(const Instance& inst, const Json& j) {
  if (!j.is_array()) ParseError("profile must be an array");
  Profile profile;
  for (const auto& c : j) profile.push_back(Lookup(c, inst.candidates, "candidate"));
  if (static_cast<int>(profile.size()) != inst.num_receivers()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "profile length does not match the receiver count");
  }
  return profile;
}

Json ProfileToJson(const Instance& inst, const Profile& profile) {
  Json out = Json::array();
  for (int c : profile) out.push_back(inst.candidates[c]);
  return out;
}

template <typename Rows>
Json RowsToJson(const Instance& inst, const Rows& rows, const char* type) {
  Json entries = Json::array();
  for (int s = 0; s < static_cast<int>(rows.size()); ++s) {
    for (const auto& [profile, p] : rows[s]) {
      entries.push_back({{"state", inst.states[s]},
                         {"profile", ProfileToJson(inst, profile)},
                         {"prob", p}});
    }
  }
  return {{"type", type}, {"entries", entries}};
}

}  // namespace

const char* SchemeTypeName(SchemeType type) {
  switch (type) {
    case SchemeType::kJoint:
      return "joint";
    case SchemeType::kMarginal:
      return "marginal";
    case SchemeType::kPublic:
      return "public";
  }
  return "joint";
}

Instance InstanceFromJson(const Json& j) {
  try {
    Instance inst;
    for (const auto& s : j.at("states")) inst.states.push_back(AsName(s));
    inst.prior = j.at("prior").get<std::vector<double>>();
    for (const auto& c : j.at("candidates")) {
      inst.candidates.push_back(AsName(c));
    }
    int index = 0;
    for (const auto& r : j.at("receivers")) {
      Receiver receiver;
      receiver.name = r.contains("name") ? AsName(r.at("name"))
                                         : "r" + std::to_string(index);
      receiver.utility =
          r.at("utility").get<std::vector<std::vector<double>>>();
      inst.receivers.push_back(std::move(receiver));
      ++index;
    }
    const Json& rule = j.at("rule");
    const std::string type = rule.at("type").get<std::string>();
    if (type == "k-voting") {
      inst.rule = VotingRule::KVoting(rule.at("k").get<int>());
    } else if (type == "plurality") {
      inst.rule = VotingRule::Plurality();
    } else {
      ParseError("unknown rule type '" + type + "'");
    }
    return inst;
  } catch (const Json::exception& e) {
    ParseError(std::string("instance JSON: ") + e.what());
  }
}

Json InstanceToJson(const Instance& inst) {
  Json receivers = Json::array();
  for (const auto& r : inst.receivers) {
    receivers.push_back({{"name", r.name}, {"utility", r.utility}});
  }
  Json rule;
  if (inst.rule.is_kvoting()) {
    rule = {{"type", "k-voting"}, {"k", inst.rule.k()}};
  } else {
    rule = {{"type", "plurality"}};
  }
  return {{"states", inst.states},
          {"prior", inst.prior},
          {"candidates", inst.candidates},
          {"receivers", receivers},
          {"rule", rule}};
}

SchemeFile SchemeFromJson(const Instance& inst, const Json& j) {
  try {
    SchemeFile out;
    const std::string type = j.at("type").get<std::string>();
    const int n = inst.num_states();
    if (j.contains("value") && j.at("value").is_number()) {
      out.claimed_value = j.at("value").get<double>();
    }
    if (type == "joint" || type == "public") {
      std::vector<std::map<Profile, double>> rows(n);
      for (const auto& e : j.at("entries")) {
        const int s = Lookup(e.at("state"), inst.states, "state");
        rows[s][ParseProfile(inst, e.at("profile"))] +=
            e.at("prob").get<double>();
      }
      if (type == "joint") {
        out.type = SchemeType::kJoint;
        out.joint.rows = std::move(rows);
      } else {
        out.type = SchemeType::kPublic;
        out.public_scheme.rows = std::move(rows);
      }
    } else if (type == "marginal") {
      out.type = SchemeType::kMarginal;
      out.marginal.prob.assign(
          inst.num_receivers(),
          std::vector<std::vector<double>>(
              n, std::vector<double>(inst.num_candidates(), 0.0)));
      const auto receivers = ReceiverNames(inst);
      for (const auto& e : j.at("entries")) {
        const int s = Lookup(e.at("state"), inst.states, "state");
        const int r = Lookup(e.at("receiver"), receivers, "receiver");
        const int c = Lookup(e.at("candidate"), inst.candidates, "candidate");
        out.marginal.prob[r][s][c] += e.at("prob").get<double>();
      }
    } else {
      ParseError("unknown scheme type '" + type + "'");
    }
    return out;
  } catch (const Json::exception& e) {
    ParseError(std::string("scheme JSON: ") + e.what());
  }
}

Json JointSchemeToJson(const Instance& inst, const JointScheme& scheme) {
  return RowsToJson(inst, scheme.rows, "joint");
}

Json PublicSchemeToJson(const Instance& inst, const PublicScheme& scheme) {
  return RowsToJson(inst, scheme.rows, "public");
}

Json MarginalSchemeToJson(const Instance& inst, const MarginalScheme& scheme) {
  Json entries = Json::array();
  for (int r = 0; r < static_cast<int>(scheme.prob.size()); ++r) {
    for (int s = 0; s < static_cast<int>(scheme.prob[r].size()); ++s) {
      for (int c = 0; c < static_cast<int>(scheme.prob[r][s].size()); ++c) {
        const double p = scheme.prob[r][s][c];
        if (p == 0.0) continue;
        entries.push_back({{"state", inst.states[s]},
                           {"receiver", inst.receivers[r].name},
                           {"candidate", inst.candidates[c]},
                           {"prob", p}});
      }
    }
  }
  return {{"type", "marginal"}, {"entries", entries}};
}

SenderUtility AnonymousUtilityFromJson(const Instance& inst, const Json& j) {
  try {
    auto parse_table = [](const Json& list) {
      SenderUtility::CountTable table;
      for (const auto& e : list) {
        table[e.at("counts").get<CountVector>()] = e.at("value").get<double>();
      }
      return table;
    };
    std::vector<SenderUtility::CountTable> tables;
    if (j.contains("all_states")) {
      tables.assign(inst.num_states(), parse_table(j.at("all_states")));
    } else {
      for (const auto& list : j.at("per_state")) {
        tables.push_back(parse_table(list));
      }
    }
    SenderUtility f = SenderUtility::Anonymous(std::move(tables));
    const ValidationReport report = f.Validate(inst);
    if (!report.ok()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "anonymous utility: " + report.violations.front());
    }
    return f;
  } catch (const Json::exception& e) {
    ParseError(std::string("anonymous utility JSON: ") + e.what());
  }
}

Json AnonymousUtilityToJson(const Instance& inst, const SenderUtility& f) {
  Json per_state = Json::array();
  for (int s = 0; s < inst.num_states(); ++s) {
    Json list = Json::array();
    for (const auto& [counts, value] : f.tables().at(s)) {
      list.push_back({{"counts", counts}, {"value", value}});
    }
    per_state.push_back(list);
  }
  return {{"type", "anonymous"}, {"per_state", per_state}};
}

MsiInstance MsiFromJson(const Json& j) {
  try {
    MsiInstance msi;
    for (const auto& e : j.at("elements")) msi.elements.push_back(AsName(e));
    for (const auto& subset : j.at("subsets")) {
      std::vector<int> members;
      for (const auto& e : subset) {
        if (e.is_string()) {
          members.push_back(Lookup(e, msi.elements, "element"));
        } else {
          // Integer members refer to element names when those are numbers.
          const std::string name = e.dump();
          bool found = false;
          for (std::size_t i = 0; i < msi.elements.size(); ++i) {
            if (msi.elements[i] == name) {
              members.push_back(static_cast<int>(i));
              found = true;
              break;
            }
          }
          if (!found) ParseError("unknown element " + name);
        }
      }
      msi.subsets.push_back(std::move(members));
    }
    msi.k = j.at("k").get<int>();
    msi.q = j.at("q").get<int>();
    return msi;
  } catch (const Json::exception& e) {
    ParseError(std::string("MSI JSON: ") + e.what());
  }
}

Json MsiToJson(const MsiInstance& msi) {
  Json subsets = Json::array();
  for (const auto& subset : msi.subsets) {
    Json list = Json::array();
    for (int e : subset) list.push_back(msi.elements[e]);
    subsets.push_back(list);
  }
  return {{"elements", msi.elements},
          {"subsets", subsets},
          {"k", msi.k},
          {"q", msi.q}};
}

Json ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    ParseError("'" + path + "': " + e.what());
  }
}

void WriteJsonFile(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kIo, "cannot write '" + path + "'");
  out << j.dump(2) << '\n';
  if (!out) throw Error(ErrorCode::kIo, "failed writing '" + path + "'");
}

}  // namespace persuasion
