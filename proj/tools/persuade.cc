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

// persuade: solve, verify and generate voting persuasion instances.
//
//   persuade validate example1.json
//   persuade solve --solver kvoting-lp --k 2 example1.json --out scheme.json
//   persuade verify example1.json scheme.json
//   persuade gen --seed 7 --receivers 4 --count 20 --out corpus/
//   persuade bench corpus/ --k-sweep --out bench.csv
//   persuade reduce-msi msi.json --out reduced.json
//   persuade pad example1.json --k 3

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "cli/commands.h"

int main(int argc, char** argv) {
  persuade::RunConfig cfg;
  CLI::App app{"Optimal signaling schemes for voting persuasion instances"};
  app.require_subcommand(1);

  auto add_common = [&cfg](CLI::App* sub) {
    sub->add_option("--k", cfg.k, "Use the k-voting rule with this threshold");
    sub->add_option("--tol", cfg.tol, "Persuasiveness and value tolerance")
        ->capture_default_str();
    sub->add_option("--utility", cfg.utility,
                    "Anonymous sender utility JSON (default: the voting rule)");
    sub->add_option("--report", cfg.report, "Also write the JSON report here");
  };

  auto* validate = app.add_subcommand("validate", "Check an instance file");
  validate->add_option("instance", cfg.input)->required();
  add_common(validate);

  auto* solve = app.add_subcommand("solve", "Compute an optimal scheme");
  solve->add_option("instance", cfg.input)->required();
  solve->add_option("--solver", cfg.solver)
      ->check(CLI::IsMember({"kvoting-lp", "colgen-plurality",
                             "colgen-anonymous", "exact-private",
                             "exact-public", "public-direct"}))
      ->capture_default_str();
  solve->add_option("--out", cfg.out, "Scheme JSON output");
  solve->add_option("--guard", cfg.guard, "Limit on states * |C|^|R|")
      ->capture_default_str();
  solve->add_option("--seed", cfg.seed, "Unused by the solvers; recorded");
  solve->add_flag("--exact-arith", cfg.exact_arith,
                  "Solve LPs in exact rational arithmetic");
  add_common(solve);

  auto* verify = app.add_subcommand("verify", "Check a scheme against an instance");
  verify->add_option("instance", cfg.input)->required();
  verify->add_option("scheme", cfg.scheme)->required();
  add_common(verify);

  auto* gen = app.add_subcommand("gen", "Generate seeded random instances");
  gen->add_option("--seed", cfg.seed)->capture_default_str();
  gen->add_option("--states", cfg.num_states)->capture_default_str();
  gen->add_option("--receivers", cfg.num_receivers)->capture_default_str();
  gen->add_option("--candidates", cfg.num_candidates)->capture_default_str();
  gen->add_option("--rule", cfg.rule)
      ->check(CLI::IsMember({"k-voting", "plurality"}))
      ->capture_default_str();
  gen->add_option("--k", cfg.k, "Threshold (default: uniform in 1..|R|)");
  gen->add_option("--count", cfg.count)->capture_default_str();
  gen->add_flag("--random-prior", cfg.random_prior);
  gen->add_flag("--msi", cfg.msi, "Generate MSI instances instead");
  gen->add_option("--elements", cfg.msi_elements)->capture_default_str();
  gen->add_option("--subsets", cfg.msi_subsets)->capture_default_str();
  gen->add_option("--q", cfg.msi_q)->capture_default_str();
  gen->add_option("--out", cfg.out, "File, or directory when --count > 1");

  auto* bench = app.add_subcommand("bench", "Run every solver over a corpus");
  bench->add_option("corpus", cfg.input)->required();
  bench->add_option("--out", cfg.out, "CSV output (default: stdout)");
  bench->add_option("--tol", cfg.tol)->capture_default_str();
  bench->add_option("--guard", cfg.guard)->capture_default_str();
  bench->add_flag("--k-sweep", cfg.k_sweep, "Also solve k = 1..|R|");
  bench->add_flag("--exact-arith", cfg.exact_arith);

  auto* reduce = app.add_subcommand("reduce-msi", "Build the public-voting "
                                                  "instance for an MSI input");
  reduce->add_option("msi", cfg.input)->required();
  reduce->add_option("--out", cfg.out);

  auto* pad = app.add_subcommand("pad", "Turn a two-candidate k-voting "
                                        "instance into a plurality one");
  pad->add_option("instance", cfg.input)->required();
  pad->add_option("--k", cfg.k);
  pad->add_option("--out", cfg.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : persuade::kExitUsage;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  return persuade::Run(cfg, std::cout, std::cerr);
}
