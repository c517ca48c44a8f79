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
#include <cmath>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cli/commands.h"
#include "cli/internal.h"
#include "persuasion/errors.h"

namespace persuade {

using persuasion::Error;
using persuasion::ErrorCode;
using persuasion::Instance;

namespace {

struct Row {
  std::string instance;
  std::string solver;
  std::string status;
  std::optional<double> value;
  int iterations = 0;
  double wall_ms = 0.0;
  std::string reference;
  std::optional<double> delta;
  bool ok = true;
  std::string note;
};

std::string Quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string Num(std::optional<double> v) {
  if (!v) return "";
  std::ostringstream os;
  os.precision(12);
  os << *v;
  return os.str();
}

Row RunOne(const std::string& name, const std::string& label,
           const std::string& solver, const RunConfig& cfg,
           const Instance& inst) {
  Row row;
  row.instance = name;
  row.solver = label;
  try {
    const persuasion::SenderUtility f = persuasion::RuleUtility(inst);
    const SolveOutcome res = RunSolver(solver, cfg, inst, f);
    row.status = persuasion::LpStatusName(res.status);
    row.iterations = res.iterations;
    row.wall_ms = res.wall_ms;
    if (!res.optimal()) {
      row.ok = false;
      return row;
    }
    row.value = res.value;
    const Verification v = VerifyScheme(inst, f, res.scheme, cfg.tol);
    if (!v.ok()) {
      row.ok = false;
      row.note = "emitted scheme failed verification";
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kSizeGuard) {
      row.status = "skipped";
      row.note = e.what();
    } else {
      row.status = "error";
      row.ok = false;
      row.note = e.what();
    }
  }
  return row;
}

void Compare(Row& row, const Row* ref, double tol) {
  if (ref == nullptr || !row.value || !ref->value) return;
  row.reference = ref->solver;
  row.delta = std::abs(*row.value - *ref->value);
  if (*row.delta > tol) {
    row.ok = false;
    row.note = "cross-solver delta above tolerance";
  }
}

const Row* Find(const std::vector<Row>& rows, const std::string& solver) {
  for (const Row& r : rows) {
    if (r.solver == solver && r.value) return &r;
  }
  return nullptr;
}

std::vector<Row> BenchInstance(const std::string& name, const Instance& inst,
                               const RunConfig& cfg) {
  std::vector<std::string> private_solvers;
  if (inst.rule.is_kvoting()) {
    private_solvers = {"kvoting-lp", "colgen-anonymous"};
  } else {
    private_solvers = {"colgen-plurality", "colgen-anonymous"};
  }
  std::vector<Row> rows;
  rows.push_back(RunOne(name, "exact-private", "exact-private", cfg, inst));
  for (const auto& s : private_solvers) {
    rows.push_back(RunOne(name, s, s, cfg, inst));
  }
  rows.push_back(RunOne(name, "exact-public", "exact-public", cfg, inst));
  rows.push_back(RunOne(name, "public-direct", "public-direct", cfg, inst));

  // Private references: the full LP when it ran, otherwise the first
  // polynomial solver that finished.
  const Row* private_ref = Find(rows, "exact-private");
  if (private_ref == nullptr) {
    for (const auto& s : private_solvers) {
      if ((private_ref = Find(rows, s)) != nullptr) break;
    }
  }
  const Row* public_exact = Find(rows, "exact-public");
  const Row* public_direct = Find(rows, "public-direct");
  std::vector<Row> done = rows;
  for (Row& row : done) {
    if (row.solver == "exact-public") {
      Compare(row, public_direct, cfg.tol);
      if (row.value && private_ref && *row.value > *private_ref->value + 1e-7) {
        row.ok = false;
        row.note = "public value exceeds private value";
      }
    } else if (row.solver == "public-direct") {
      Compare(row, public_exact, cfg.tol);
    } else if (private_ref != nullptr && row.solver != private_ref->solver) {
      Compare(row, private_ref, cfg.tol);
    }
  }

  if (cfg.k_sweep && inst.num_candidates() >= 2) {
    for (int k = 1; k <= inst.num_receivers(); ++k) {
      Instance at_k = inst;
      at_k.rule = persuasion::VotingRule::KVoting(k);
      const std::string tag = "@k=" + std::to_string(k);
      Row lp = RunOne(name, "kvoting-lp" + tag, "kvoting-lp", cfg, at_k);
      Row exact = RunOne(name, "exact-private" + tag, "exact-private", cfg, at_k);
      Compare(lp, exact.value ? &exact : nullptr, cfg.tol);
      done.push_back(lp);
      done.push_back(exact);
    }
  }
  return done;
}

}  // namespace

int CmdBench(const RunConfig& cfg, std::ostream& out) {
  namespace fs = std::filesystem;
  if (cfg.input.empty() || !fs::is_directory(cfg.input)) {
    throw Error(ErrorCode::kIo, "bench needs a corpus directory, got '" +
                                    cfg.input + "'");
  }
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(cfg.input)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end(), [](const fs::path& a, const fs::path& b) {
    return a.filename().string() < b.filename().string();
  });

  std::vector<Row> rows;
  for (const auto& path : files) {
    const std::string name = path.filename().string();
    try {
      RunConfig local = cfg;
      local.input = path.string();
      local.k.reset();
      const Instance inst = LoadInstance(local);
      const auto more = BenchInstance(name, inst, cfg);
      rows.insert(rows.end(), more.begin(), more.end());
    } catch (const Error& e) {
      Row row;
      row.instance = name;
      row.solver = "load";
      row.status = "error";
      row.ok = false;
      row.note = e.what();
      rows.push_back(row);
    }
  }

  std::ostringstream csv;
  csv << "instance,solver,status,value,iterations,wall_ms,reference,delta,ok,"
         "note\n";
  int failures = 0;
  for (const Row& r : rows) {
    if (!r.ok) ++failures;
    csv << Quote(r.instance) << ',' << r.solver << ',' << r.status << ','
        << Num(r.value) << ',' << r.iterations << ',' << Num(r.wall_ms) << ','
        << r.reference << ',' << Num(r.delta) << ',' << (r.ok ? 1 : 0) << ','
        << Quote(r.note) << '\n';
  }
  if (cfg.out.empty()) {
    out << csv.str();
  } else {
    std::ofstream file(cfg.out);
    if (!file) throw Error(ErrorCode::kIo, "cannot write '" + cfg.out + "'");
    file << csv.str();
    out << "bench: " << files.size() << " instances, " << rows.size()
        << " rows, " << failures << " flagged\n";
  }
  return kExitOk;
}

}  // namespace persuade
