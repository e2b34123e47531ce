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

#ifndef SPLITCERT_PROBLEM_IO_HPP_
#define SPLITCERT_PROBLEM_IO_HPP_

#include <filesystem>
#include <string>
#include <vector>

#include "splitcert/engine.hpp"
#include "splitcert/oracle.hpp"
#include "splitcert/problem.hpp"

namespace splitcert {

// Problem JSON schema: object with keys f:{P,q,r0}, g:{P,q,r0}, A, B, c,
// X:{G,h,E,d}, Y:{G,h,E,d}. Matrices are arrays of row arrays; absent G/E
// keys mean zero rows; an absent X or Y is the whole space.

/// Throws ParseError on malformed input and DimensionError on inconsistent
/// shapes.
SplitProblem parse_problem_json(const std::string& text);
std::string serialize_problem_json(const SplitProblem& prob);

SplitProblem load_problem(const std::filesystem::path& path);
void save_problem(const SplitProblem& prob, const std::filesystem::path& path);

/// Trace CSV: exactly these columns, one row per iteration, absent values
/// as empty cells, floats with 17 significant digits.
///   k,r_norm,p_k,dual_residual,V_k,ineq1_slack,ineq2_slack,lyap_slack,
///   inner_product,dual_gap
std::string trace_to_csv(const std::vector<CertificateRecord>& trace);

std::string serialize_reference_json(const ReferenceSolution& ref);

/// Solve report: status, iteration count, config echo, final iterate, and
/// the reference comparison when one was computed.
std::string serialize_solve_report_json(const SolveReport& report,
                                        const SolverConfig& cfg,
                                        const ReferenceSolution* ref);

/// Writes via a temporary file in the same directory plus rename, so
/// readers never observe a partial file.
void write_text_atomic(const std::string& text,
                       const std::filesystem::path& path);

}  // namespace splitcert

#endif  // SPLITCERT_PROBLEM_IO_HPP_
