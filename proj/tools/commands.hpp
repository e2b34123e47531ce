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

#ifndef SPLITCERT_TOOLS_COMMANDS_HPP_
#define SPLITCERT_TOOLS_COMMANDS_HPP_

#include <cstdint>
#include <filesystem>
#include <ostream>
#include <string>

#include "splitcert/engine.hpp"

namespace splitcert::cli {

// Exit codes shared by all subcommands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;   // assumption failure / solver error
inline constexpr int kExitParse = 2;     // malformed input file or usage
inline constexpr int kExitCapacity = 3;  // brute-force oracle over capacity

enum class ReferenceMode { kNone, kOracle };

/// Everything one solve invocation needs. Writes <output_base>.report.json
/// and <output_base>.trace.csv.
struct RunManifest {
  std::filesystem::path problem_path;
  SolverConfig config;
  std::filesystem::path output_base;
  ReferenceMode reference_mode = ReferenceMode::kNone;
  std::uint64_t seed = 0;  // reserved for randomized workflows; echoed only
};

struct GenOptions {
  std::string kind = "random-qp";  // random-qp | consensus
  std::uint64_t seed = 1;
  Index m = 2;
  Index n1 = 2;
  Index n2 = 2;
  Index ineq = 4;
  Index eq = 0;
  bool rank_deficient_b = false;
  Index agents = 2;
  Index dim = 2;
  std::filesystem::path out_path;
};

/// Prints one line per model assumption plus a summary; exit 0 iff every
/// decidable check passes.
int cmd_validate(const std::filesystem::path& problem_path, std::ostream& out,
                 std::ostream& err);

int cmd_solve(const RunManifest& manifest, std::ostream& out,
              std::ostream& err);

/// Prints the brute-force reference solution as JSON.
int cmd_oracle(const std::filesystem::path& problem_path, std::ostream& out,
               std::ostream& err);

/// Writes a generated problem file; byte-identical for identical options.
int cmd_gen(const GenOptions& opts, std::ostream& out, std::ostream& err);

}  // namespace splitcert::cli

#endif  // SPLITCERT_TOOLS_COMMANDS_HPP_
