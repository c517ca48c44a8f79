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

#include <cctype>
#include <cmath>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "persuasion/lp.h"

namespace persuasion {

namespace {

std::string Number(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

// LP-format identifiers may not start with a digit or contain spaces.
std::string Identifier(const std::string& name) {
  std::string out;
  for (char ch : name) {
    const bool ok = std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' ||
                    ch == '.' || ch == '[' || ch == ']';
    out.push_back(ok ? ch : '_');
  }
  if (out.empty() || std::isdigit(static_cast<unsigned char>(out[0]))) {
    out.insert(out.begin(), '_');
  }
  return out;
}

void WriteLinear(std::ostream& os, const LpProblem& problem,
                 const std::vector<LpProblem::Term>& terms) {
  bool first = true;
  for (const auto& t : terms) {
    if (t.coef == 0.0) continue;
    const double mag = std::abs(t.coef);
    os << (t.coef < 0 ? " - " : (first ? " " : " + ")) << Number(mag) << ' '
       << Identifier(problem.variables()[t.var].name);
    first = false;
  }
  if (first) os << " 0 " << Identifier(problem.variables().empty()
                                           ? std::string("x0")
                                           : problem.variables()[0].name);
}

}  // namespace

void WriteLpFormat(const LpProblem& problem, std::ostream& os) {
  const auto& vars = problem.variables();
  std::vector<LpProblem::Term> objective;
  for (std::size_t j = 0; j < vars.size(); ++j) {
    objective.push_back({static_cast<int>(j), vars[j].objective});
  }
  os << "\\ generated by persuasion::WriteLpFormat\n";
  os << "Maximize\n obj:";
  WriteLinear(os, problem, objective);
  os << "\nSubject To\n";
  for (const auto& c : problem.constraints()) {
    os << ' ' << Identifier(c.name) << ':';
    WriteLinear(os, problem, c.terms);
    switch (c.relation) {
      case Relation::kLessEqual:
        os << " <= ";
        break;
      case Relation::kGreaterEqual:
        os << " >= ";
        break;
      case Relation::kEqual:
        os << " = ";
        break;
    }
    os << Number(c.rhs) << '\n';
  }
  os << "Bounds\n";
  for (const auto& v : vars) {
    const std::string id = Identifier(v.name);
    if (v.lower == -kInfinity && v.upper == kInfinity) {
      os << ' ' << id << " free\n";
    } else if (v.lower == -kInfinity) {
      os << " -inf <= " << id << " <= " << Number(v.upper) << '\n';
    } else if (v.upper == kInfinity) {
      if (v.lower != 0.0) os << ' ' << id << " >= " << Number(v.lower) << '\n';
    } else {
      os << ' ' << Number(v.lower) << " <= " << id << " <= "
         << Number(v.upper) << '\n';
    }
  }
  os << "End\n";
}

}  // namespace persuasion
