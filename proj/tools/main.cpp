// Copyright 2026 The splitcert Authors
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

#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"

namespace {

using splitcert::CertificateMode;
using namespace splitcert::cli;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "splitcert: splitting solver for quadratic objectives over polyhedra,\n"
      "with runtime convergence certificates and a brute-force reference "
      "oracle"};
  app.require_subcommand(1);

  // validate -------------------------------------------------------------
  std::string validate_path;
  auto* validate = app.add_subcommand(
      "validate", "Check the model assumptions of a problem file");
  validate->add_option("problem", validate_path, "problem JSON file")
      ->required();

  // solve ----------------------------------------------------------------
  RunManifest manifest;
  std::string solve_path, solve_out = "solve_run";
  std::string certificates = "cheap", reference = "none";
  auto* solve = app.add_subcommand("solve", "Run the splitting iteration");
  solve->add_option("problem", solve_path, "problem JSON file")->required();
  solve->add_option("--rho", manifest.config.rho, "penalty parameter (> 0)");
  solve->add_option("--max-iters", manifest.config.max_iters,
                    "iteration limit");
  solve->add_option("--eps-primal", manifest.config.eps_primal,
                    "threshold on ||r||");
  solve->add_option("--eps-dual", manifest.config.eps_dual,
                    "threshold on rho ||B dy||");
  solve->add_option("--certificates", certificates, "off | cheap | full");
  solve->add_option("--reference", reference, "none | oracle");
  solve->add_option("--seed", manifest.seed, "seed echoed into workflows");
  solve->add_option("--out", solve_out,
                    "output base path (writes .report.json and .trace.csv)");

  // oracle ---------------------------------------------------------------
  std::string oracle_path;
  auto* oracle = app.add_subcommand(
      "oracle", "Print the brute-force reference solution as JSON");
  oracle->add_option("problem", oracle_path, "problem JSON file")->required();

  // gen ------------------------------------------------------------------
  GenOptions gen_opts;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "Write a generated problem file");
  gen->add_option("--kind", gen_opts.kind, "random-qp | consensus");
  gen->add_option("--seed", gen_opts.seed, "generator seed");
  gen->add_option("--m", gen_opts.m, "coupling rows");
  gen->add_option("--n1", gen_opts.n1, "x dimension");
  gen->add_option("--n2", gen_opts.n2, "y dimension");
  gen->add_option("--ineq", gen_opts.ineq, "inequalities per set");
  gen->add_option("--eq", gen_opts.eq, "equalities per set");
  gen->add_flag("--rank-deficient-b", gen_opts.rank_deficient_b,
                "duplicate a column of B (violates assumption 4)");
  gen->add_option("--agents", gen_opts.agents, "consensus: local objectives");
  gen->add_option("--dim", gen_opts.dim, "consensus: shared dimension");
  gen->add_option("--out", gen_out, "output problem file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed()) {
      return cmd_validate(validate_path, std::cout, std::cerr);
    }
    if (solve->parsed()) {
      static const std::map<std::string, CertificateMode> modes = {
          {"off", CertificateMode::kOff},
          {"cheap", CertificateMode::kCheap},
          {"full", CertificateMode::kFull}};
      if (!modes.contains(certificates)) {
        std::cerr << "error: bad --certificates value '" << certificates
                  << "'\n";
        return kExitParse;
      }
      if (reference != "none" && reference != "oracle") {
        std::cerr << "error: bad --reference value '" << reference << "'\n";
        return kExitParse;
      }
      manifest.problem_path = solve_path;
      manifest.output_base = solve_out;
      manifest.config.certificate_mode = modes.at(certificates);
      manifest.reference_mode = reference == "oracle" ? ReferenceMode::kOracle
                                                      : ReferenceMode::kNone;
      return cmd_solve(manifest, std::cout, std::cerr);
    }
    if (oracle->parsed()) {
      return cmd_oracle(oracle_path, std::cout, std::cerr);
    }
    if (gen->parsed()) {
      gen_opts.out_path = gen_out;
      return cmd_gen(gen_opts, std::cout, std::cerr);
    }
  } catch (const splitcert::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const splitcert::CapacityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const splitcert::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitOk;
}
