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

#ifndef PERSUASION_IO_H_
#define PERSUASION_IO_H_

// JSON interchange for instances, schemes, anonymous sender utilities and
// MSI instances.
//
// Instance:
//   {"states": [...], "prior": [...], "candidates": [...],
//    "receivers": [{"name": ..., "utility": [[per candidate] per state]}],
//    "rule": {"type": "k-voting", "k": 2} | {"type": "plurality"}}
// Scheme:
//   {"type": "joint" | "public",
//    "entries": [{"state": ..., "profile": [...], "prob": ...}]}
//   {"type": "marginal",
//    "entries": [{"state": ..., "receiver": ..., "candidate": ..., "prob": ...}]}
//   with an optional top-level "value" holding a claimed sender value.
// States, receivers and candidates may be referenced by name or index.
// Anonymous utility:
//   {"type": "anonymous", "per_state": [[{"counts": [...], "value": ...}]]}
//   or "all_states": [...] for a state-independent table.
// MSI: {"elements": [...], "subsets": [[...]], "k": 1, "q": 2}

#include <optional>
#include <string>

#include "json.hpp"
#include "persuasion/model.h"
#include "persuasion/msi.h"

namespace persuasion {

using Json = nlohmann::json;

Instance InstanceFromJson(const Json& j);
Json InstanceToJson(const Instance& inst);

enum class SchemeType { kJoint, kMarginal, kPublic };

const char* SchemeTypeName(SchemeType type);

struct SchemeFile {
  SchemeType type = SchemeType::kJoint;
  JointScheme joint;
  MarginalScheme marginal;
  PublicScheme public_scheme;
  std::optional<double> claimed_value;
};

SchemeFile SchemeFromJson(const Instance& inst, const Json& j);
Json JointSchemeToJson(const Instance& inst, const JointScheme& scheme);
Json PublicSchemeToJson(const Instance& inst, const PublicScheme& scheme);
Json MarginalSchemeToJson(const Instance& inst, const MarginalScheme& scheme);

SenderUtility AnonymousUtilityFromJson(const Instance& inst, const Json& j);
Json AnonymousUtilityToJson(const Instance& inst, const SenderUtility& f);

MsiInstance MsiFromJson(const Json& j);
Json MsiToJson(const MsiInstance& msi);

// Error(kIo) when the file cannot be opened, Error(kParse) on bad JSON.
Json ReadJsonFile(const std::string& path);
void WriteJsonFile(const std::string& path, const Json& j);

}  // namespace persuasion

#endif  // PERSUASION_IO_H_
