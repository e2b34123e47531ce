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

#include "commands.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "splitcert/generator.hpp"
#include "splitcert/problem_io.hpp"

namespace splitcert::cli {

namespace {

// Groups the per-function checks of one assumption into a single line.
struct GroupedCheck {
  CheckResult result = CheckResult::kPass;
  std::string detail;
};

GroupedCheck group(const ValidationReport& report, int assumption) {
  GroupedCheck g;
  bool any = false;
  for (const auto& check : report.checks) {
    if (check.assumption != assumption) continue;
    any = true;
    if (check.result == CheckResult::kFail) {
      g.result = CheckResult::kFail;
    } else if (check.result == CheckResult::kUnknown &&
               g.result != CheckResult::kFail) {
      g.result = CheckResult::kUnknown;
    } else if (check.result == CheckResult::kDeferred &&
               g.result == CheckResult::kPass) {
      g.result = CheckResult::kDeferred;
    }
    if (!check.detail.empty()) {
      if (!g.detail.empty()) g.detail += "; ";
      g.detail += check.detail;
    }
  }
  if (!any) g.result = CheckResult::kUnknown;
  return g;
}

void print_assumption(std::ostream& out, int number, const std::string& label,
                      const GroupedCheck& g) {
  out << "assumption " << number << " (" << label << "): ";
  if (g.result == CheckResult::kDeferred) {
    out << "deferred";
  } else {
    out << to_string(g.result);
  }
  if (!g.detail.empty()) out << " (" << g.detail << ")";
  out << "\n";
}

}  // namespace

int cmd_validate(const std::filesystem::path& problem_path, std::ostream& out,
                 std::ostream& err) {
  SplitProblem prob;
  try {
    prob = load_problem(problem_path);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  }

  ValidationReport report;
  try {
    report = validate(prob);
  } catch (const DimensionError& e) {
    err << "structural error: " << e.what() << "\n";
    return kExitParse;
  }

  print_assumption(out, 1, "f, g convex", group(report, 1));
  print_assumption(out, 2, "X, Y nonempty polyhedral sets", group(report, 2));
  print_assumption(out, 3, "solvability", group(report, 3));
  print_assumption(out, 4, "A, B full column-rank", group(report, 4));
  const bool ok = report.all_decidable_pass();
  out << "validation: " << (ok ? "PASS" : "FAIL") << "\n";
  return ok ? kExitOk : kExitFailure;
}

int cmd_solve(const RunManifest& manifest, std::ostream& out,
              std::ostream& err) {
  SplitProblem prob;
  try {
    prob = load_problem(manifest.problem_path);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  }

  std::optional<ReferenceSolution> ref;
  if (manifest.reference_mode == ReferenceMode::kOracle) {
    try {
      ref = solve_split_bruteforce(prob);
    } catch (const CapacityError& e) {
      err << "oracle capacity: " << e.what() << "\n";
      return kExitCapacity;
    } catch (const InfeasibleError& e) {
      err << "instance not solvable: " << e.what() << "\n";
      return kExitFailure;
    }
  }

  SolverConfig cfg = manifest.config;
  if (cfg.certificate_mode == CertificateMode::kFull && !ref.has_value()) {
    err << "error: --certificates full requires --reference oracle\n";
    return kExitParse;
  }

  SolveReport report;
  try {
    report = solve(prob, cfg, std::nullopt, ref ? &*ref : nullptr);
  } catch (const Error& e) {
    err << "solve error: " << e.what() << "\n";
    return kExitFailure;
  }

  const std::filesystem::path report_path =
      manifest.output_base.string() + ".report.json";
  const std::filesystem::path trace_path =
      manifest.output_base.string() + ".trace.csv";
  write_text_atomic(
      serialize_solve_report_json(report, cfg, ref ? &*ref : nullptr),
      report_path);
  write_text_atomic(trace_to_csv(report.trace), trace_path);

  out << "status: " << to_string(report.status) << " after "
      << report.iterations << " iterations, ||r|| = " << report.final.r.norm()
      << ", p = " << report.final.p << "\n";
  out << "report: " << report_path.string() << "\n";
  out << "trace:  " << trace_path.string() << "\n";
  if (report.status == SolveStatus::kSubproblemError) {
    err << "subproblem error at iteration " << report.failed_iteration << ": "
        << report.error_message << "\n";
    return kExitFailure;
  }
  return kExitOk;
}

int cmd_oracle(const std::filesystem::path& problem_path, std::ostream& out,
               std::ostream& err) {
  SplitProblem prob;
  try {
    prob = load_problem(problem_path);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  }
  try {
    const ReferenceSolution ref = solve_split_bruteforce(prob);
    out << serialize_reference_json(ref);
  } catch (const CapacityError& e) {
    err << "oracle capacity: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const InfeasibleError& e) {
    err << "instance not solvable: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitOk;
}

int cmd_gen(const GenOptions& opts, std::ostream& out, std::ostream& err) {
  if (opts.out_path.empty()) {
    err << "error: gen requires --out\n";
    return kExitParse;
  }
  SplitProblem prob;
  try {
    if (opts.kind == "random-qp") {
      RandomSplitSpec spec;
      spec.m = opts.m;
      spec.n1 = opts.n1;
      spec.n2 = opts.n2;
      spec.ineq_per_set = opts.ineq;
      spec.eq_per_set = opts.eq;
      spec.rank_deficient_b = opts.rank_deficient_b;
      spec.seed = opts.seed;
      prob = generate_random_split(spec);
    } else if (opts.kind == "consensus") {
      ConsensusSpec spec;
      spec.agents = opts.agents;
      spec.dim = opts.dim;
      spec.ineq_per_set = opts.ineq;
      spec.seed = opts.seed;
      prob = generate_consensus(spec);
    } else {
      err << "error: unknown kind '" << opts.kind << "'\n";
      return kExitParse;
    }
  } catch (const Error& e) {
    err << "generation error: " << e.what() << "\n";
    return kExitParse;
  }
  save_problem(prob, opts.out_path);
  out << "wrote " << opts.out_path.string() << "\n";
  return kExitOk;
}

}  // namespace splitcert::cli
