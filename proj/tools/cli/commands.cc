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

#include "cli/commands.h"

#include <chrono>
#include <cmath>
#include <exception>
#include <string>
#include <vector>

#include "cli/internal.h"
#include "persuasion/composition.h"
#include "persuasion/general_private.h"
#include "persuasion/private_kvoting.h"
#include "persuasion/public_exact.h"

namespace persuade {

using persuasion::Error;
using persuasion::ErrorCode;
using persuasion::Instance;
using persuasion::SchemeFile;
using persuasion::SchemeType;
using persuasion::SenderUtility;

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kIo:
      return kExitIo;
    case ErrorCode::kParse:
      return kExitParse;
    case ErrorCode::kInvalidArgument:
    case ErrorCode::kDimensionMismatch:
    case ErrorCode::kPrecondition:
      return kExitInvalidInput;
    case ErrorCode::kSizeGuard:
      return kExitSizeGuard;
    case ErrorCode::kSolverFailure:
      return kExitSolverFailure;
  }
  return kExitUnexpected;
}

void CheckConfig(const RunConfig& cfg) {
  auto bad = [](const std::string& what) {
    throw Error(ErrorCode::kInvalidArgument, what);
  };
  if (!(cfg.tol > 0.0) || !std::isfinite(cfg.tol)) bad("--tol must be positive");
  if (cfg.guard == 0) bad("--guard must be positive");
  if (cfg.k && *cfg.k < 1) bad("--k must be at least 1");
  if (cfg.count < 1) bad("--count must be at least 1");
}

Instance LoadInstance(const RunConfig& cfg) {
  if (cfg.input.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "an instance file is required");
  }
  Instance inst = persuasion::InstanceFromJson(persuasion::ReadJsonFile(cfg.input));
  if (cfg.k) inst.rule = persuasion::VotingRule::KVoting(*cfg.k);
  persuasion::RequireValidInstance(inst);
  return inst;
}

SenderUtility LoadUtility(const RunConfig& cfg, const Instance& inst) {
  if (cfg.utility.empty()) return persuasion::RuleUtility(inst);
  return persuasion::AnonymousUtilityFromJson(
      inst, persuasion::ReadJsonFile(cfg.utility));
}

void Emit(const Json& j, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << j.dump(2) << '\n';
  } else {
    persuasion::WriteJsonFile(path, j);
  }
}

Json SchemeToJson(const Instance& inst, const SchemeFile& scheme) {
  Json j;
  switch (scheme.type) {
    case SchemeType::kJoint:
      j = persuasion::JointSchemeToJson(inst, scheme.joint);
      break;
    case SchemeType::kPublic:
      j = persuasion::PublicSchemeToJson(inst, scheme.public_scheme);
      break;
    case SchemeType::kMarginal:
      j = persuasion::MarginalSchemeToJson(inst, scheme.marginal);
      break;
  }
  if (scheme.claimed_value) j["value"] = *scheme.claimed_value;
  return j;
}

namespace {

// Win probability implied by marginals under k-voting with the best
// coupling; there is no such closed form for other objectives.
std::optional<double> MarginalValue(const Instance& inst, const SenderUtility& f,
                                    const persuasion::MarginalScheme& m) {
  if (f.is_anonymous() || !f.rule().is_kvoting()) return std::nullopt;
  double value = 0.0;
  for (int s = 0; s < inst.num_states(); ++s) {
    std::vector<double> slice;
    for (int r = 0; r < inst.num_receivers(); ++r) {
      slice.push_back(m.prob[r][s][persuasion::kSenderCandidate]);
    }
    value += inst.prior[s] * persuasion::BetaFromMarginals(slice, f.rule().k());
  }
  return value;
}

Json ProfileNames(const Instance& inst, const persuasion::Profile& profile) {
  Json j = Json::array();
  for (int c : profile) j.push_back(inst.candidates[c]);
  return j;
}

}  // namespace

Json Verification::ToJson() const {
  Json j;
  j["ok"] = ok();
  j["scheme_violations"] = scheme_violations;
  j["persuasive"] = persuasion.persuasive;
  j["worst_violation"] = persuasion.worst_violation;
  if (!persuasion.persuasive) {
    j["violated_receiver"] = persuasion.receiver;
    j["violated_recommendation"] = persuasion.recommended;
    j["violated_deviation"] = persuasion.deviation;
  }
  j["value"] = value ? Json(*value) : Json(nullptr);
  j["claimed_value"] = claimed_value ? Json(*claimed_value) : Json(nullptr);
  j["value_matches"] = value_matches;
  return j;
}

Verification VerifyScheme(const Instance& inst, const SenderUtility& f,
                          const SchemeFile& scheme, double tol) {
  Verification v;
  v.claimed_value = scheme.claimed_value;
  persuasion::ValidationReport shape;
  switch (scheme.type) {
    case SchemeType::kJoint:
      shape = persuasion::ValidateJointScheme(inst, scheme.joint);
      break;
    case SchemeType::kPublic:
      shape = persuasion::ValidatePublicScheme(inst, scheme.public_scheme);
      break;
    case SchemeType::kMarginal:
      shape = persuasion::ValidateMarginalScheme(inst, scheme.marginal);
      break;
  }
  v.scheme_violations = shape.violations;
  if (!shape.ok()) {
    v.persuasion.persuasive = false;
    v.value_matches = false;
    return v;
  }
  switch (scheme.type) {
    case SchemeType::kJoint:
      v.persuasion = persuasion::CheckPersuasiveJoint(inst, scheme.joint, tol);
      v.value = persuasion::SenderValue(inst, f, scheme.joint);
      break;
    case SchemeType::kPublic:
      v.persuasion =
          persuasion::CheckPersuasivePublic(inst, scheme.public_scheme, tol);
      v.value = persuasion::SenderValue(inst, f, scheme.public_scheme);
      break;
    case SchemeType::kMarginal:
      v.persuasion =
          persuasion::CheckPersuasiveMarginal(inst, scheme.marginal, tol);
      v.value = MarginalValue(inst, f, scheme.marginal);
      break;
  }
  if (v.claimed_value && v.value) {
    v.value_matches = std::abs(*v.claimed_value - *v.value) <= tol;
  }
  return v;
}

SolveOutcome RunSolver(const std::string& solver, const RunConfig& cfg,
                       const Instance& inst, const SenderUtility& f) {
  const auto start = std::chrono::steady_clock::now();
  persuasion::LpOptions lp;
  lp.exact_arithmetic = cfg.exact_arith;
  SolveOutcome out;
  Json& d = out.details;

  if (solver == "kvoting-lp") {
    if (f.is_anonymous() || !f.rule().is_kvoting()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "kvoting-lp needs a k-voting rule (set one with --k)");
    }
    const auto r = persuasion::SolvePrivateKVoting(inst, f.rule().k(), lp);
    out.status = r.status;
    out.value = r.value;
    out.iterations = r.iterations;
    if (r.status == persuasion::LpStatus::kOptimal) {
      out.scheme.type = SchemeType::kMarginal;
      out.scheme.marginal = persuasion::CompleteMarginals(inst, r.c0_marginals);
      Json betas = Json::object();
      for (int s = 0; s < inst.num_states(); ++s) betas[inst.states[s]] = r.betas[s];
      d["betas"] = betas;
    }
    if (!r.exact_value.empty()) d["exact_value"] = r.exact_value;
  } else if (solver == "colgen-plurality" || solver == "colgen-anonymous") {
    const bool plurality = solver == "colgen-plurality";
    SenderUtility g = f;
    if (plurality) {
      if (f.is_anonymous() ||
          f.rule().kind() != persuasion::VotingRule::Kind::kPlurality) {
        throw Error(ErrorCode::kInvalidArgument,
                    "colgen-plurality needs the plurality rule");
      }
    } else if (!f.is_anonymous()) {
      g = persuasion::AnonymousFromRule(inst, f.rule());
    }
    persuasion::PrivateOptions options;
    options.lp = lp;
    const auto r = persuasion::SolvePrivateColgen(
        inst, g, persuasion::OracleFor(inst, g), options);
    out.status = r.status;
    if (r.status == persuasion::LpStatus::kOptimal && !r.converged) {
      out.status = persuasion::LpStatus::kIterationLimit;
    }
    out.value = r.value;
    out.iterations = r.lp_iterations;
    out.scheme.type = SchemeType::kJoint;
    out.scheme.joint = r.scheme;
    d["rounds"] = r.rounds;
    d["converged"] = r.converged;
    d["columns"] = r.num_columns;
    if (!r.exact_value.empty()) d["exact_value"] = r.exact_value;
  } else if (solver == "exact-private") {
    persuasion::PrivateOptions options;
    options.lp = lp;
    options.max_columns = cfg.guard;
    const auto r = persuasion::SolvePrivateExact(inst, f, options);
    out.status = r.status;
    out.value = r.value;
    out.iterations = r.lp_iterations;
    out.scheme.type = SchemeType::kJoint;
    out.scheme.joint = r.scheme;
    d["columns"] = r.num_columns;
    if (!r.exact_value.empty()) d["exact_value"] = r.exact_value;
  } else if (solver == "exact-public" || solver == "public-direct") {
    persuasion::PublicOptions options;
    options.lp = lp;
    options.max_columns = cfg.guard;
    const auto r = solver == "exact-public"
                       ? persuasion::SolvePublicExact(inst, f, options)
                       : persuasion::SolvePublicDirectLp(inst, f, options);
    out.status = r.status;
    out.value = r.value;
    out.iterations = r.lp_iterations;
    out.scheme.type = SchemeType::kPublic;
    out.scheme.public_scheme = r.scheme;
    d["posteriors"] = r.num_posteriors;
    if (!r.exact_value.empty()) d["exact_value"] = r.exact_value;
  } else {
    throw Error(ErrorCode::kInvalidArgument, "unknown solver '" + solver + "'");
  }
  out.scheme.claimed_value = out.value;
  out.wall_ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  return out;
}

int CmdValidate(const RunConfig& cfg, std::ostream& out) {
  if (cfg.input.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "an instance file is required");
  }
  Instance inst = persuasion::InstanceFromJson(persuasion::ReadJsonFile(cfg.input));
  if (cfg.k) inst.rule = persuasion::VotingRule::KVoting(*cfg.k);
  persuasion::ValidationReport report = persuasion::ValidateInstance(inst);
  if (report.ok() && !cfg.utility.empty()) {
    // AnonymousUtilityFromJson already rejects partial tables.
    LoadUtility(cfg, inst);
  }
  Json j;
  j["command"] = "validate";
  j["instance"] = cfg.input;
  j["valid"] = report.ok();
  j["violations"] = report.violations;
  Emit(j, cfg.report, out);
  if (!cfg.report.empty()) out << (report.ok() ? "valid\n" : "invalid\n");
  return report.ok() ? kExitOk : kExitInvalidInput;
}

int CmdSolve(const RunConfig& cfg, std::ostream& out) {
  const Instance inst = LoadInstance(cfg);
  const SenderUtility f = LoadUtility(cfg, inst);
  const SolveOutcome result = RunSolver(cfg.solver, cfg, inst, f);

  Json report;
  report["command"] = "solve";
  report["instance"] = cfg.input;
  report["solver"] = cfg.solver;
  report["rule"] = inst.rule.ToString();
  report["status"] = persuasion::LpStatusName(result.status);
  report["value"] = result.value;
  report["iterations"] = result.iterations;
  report["wall_time_ms"] = result.wall_ms;
  report["details"] = result.details;

  bool verified = false;
  if (result.optimal()) {
    report["scheme_type"] = persuasion::SchemeTypeName(result.scheme.type);
    const Verification v = VerifyScheme(inst, f, result.scheme, cfg.tol);
    report["verification"] = v.ToJson();
    verified = v.ok();
    if (!cfg.out.empty()) {
      persuasion::WriteJsonFile(cfg.out, SchemeToJson(inst, result.scheme));
      report["scheme_file"] = cfg.out;
    }
  }
  if (!cfg.report.empty()) persuasion::WriteJsonFile(cfg.report, report);
  out << report.dump(2) << '\n';
  if (!result.optimal()) return kExitSolverFailure;
  return verified ? kExitOk : kExitVerificationFailed;
}

int CmdVerify(const RunConfig& cfg, std::ostream& out) {
  const Instance inst = LoadInstance(cfg);
  const SenderUtility f = LoadUtility(cfg, inst);
  if (cfg.scheme.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "a scheme file is required");
  }
  const SchemeFile scheme =
      persuasion::SchemeFromJson(inst, persuasion::ReadJsonFile(cfg.scheme));
  const Verification v = VerifyScheme(inst, f, scheme, cfg.tol);

  Json report = v.ToJson();
  report["command"] = "verify";
  report["instance"] = cfg.input;
  report["scheme"] = cfg.scheme;
  report["scheme_type"] = persuasion::SchemeTypeName(scheme.type);
  if (v.persuasion.signal) {
    report["violated_signal"] = ProfileNames(inst, *v.persuasion.signal);
  }
  if (!cfg.report.empty()) persuasion::WriteJsonFile(cfg.report, report);
  out << report.dump(2) << '\n';
  return v.ok() ? kExitOk : kExitVerificationFailed;
}

int CmdReduceMsi(const RunConfig& cfg, std::ostream& out) {
  if (cfg.input.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "an MSI file is required");
  }
  const persuasion::MsiInstance msi =
      persuasion::MsiFromJson(persuasion::ReadJsonFile(cfg.input));
  const persuasion::MsiReduction red = persuasion::ReduceMsi(msi);
  Json j = persuasion::InstanceToJson(red.instance);
  Json element_voters = Json::array();
  const int m = msi.num_subsets();
  for (int e = 0; e < msi.num_elements(); ++e) {
    for (int copy = 0; copy < m; ++copy) {
      const int r = m + e * m + copy;
      element_voters.push_back({{"element", msi.elements[e]},
                                {"copy", copy},
                                {"receiver", red.instance.receivers[r].name}});
    }
  }
  Json set_voters = Json::array();
  for (int i = 0; i < m; ++i) {
    set_voters.push_back(
        {{"subset", i}, {"receiver", red.instance.receivers[red.set_voter[i]].name}});
  }
  j["provenance"] = {{"source", "msi"},
                     {"msi", persuasion::MsiToJson(msi)},
                     {"threshold", red.threshold},
                     {"set_voters", set_voters},
                     {"element_voters", element_voters}};
  Emit(j, cfg.out, out);
  return kExitOk;
}

int CmdPad(const RunConfig& cfg, std::ostream& out) {
  const Instance inst = LoadInstance(cfg);
  if (!inst.rule.is_kvoting()) {
    throw Error(ErrorCode::kInvalidArgument, "pad needs a k-voting instance");
  }
  const int k = inst.rule.k();
  const Instance padded = persuasion::PadKVotingToPlurality(inst, k);
  Json j = persuasion::InstanceToJson(padded);
  j["provenance"] = {
      {"source", "pad"},
      {"original_k", k},
      {"original_receivers", inst.num_receivers()},
      {"added_receivers", padded.num_receivers() - inst.num_receivers()}};
  Emit(j, cfg.out, out);
  return kExitOk;
}

int Run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    CheckConfig(cfg);
    if (cfg.command == "validate") return CmdValidate(cfg, out);
    if (cfg.command == "solve") return CmdSolve(cfg, out);
    if (cfg.command == "verify") return CmdVerify(cfg, out);
    if (cfg.command == "gen") return CmdGen(cfg, out);
    if (cfg.command == "bench") return CmdBench(cfg, out);
    if (cfg.command == "reduce-msi") return CmdReduceMsi(cfg, out);
    if (cfg.command == "pad") return CmdPad(cfg, out);
    err << "error: unknown command '" << cfg.command << "'\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error (" << persuasion::ErrorCodeName(e.code()) << "): " << e.what()
        << '\n';
    return ExitCodeFor(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUnexpected;
  }
}

}  // namespace persuade
