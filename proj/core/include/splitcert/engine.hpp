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

#ifndef SPLITCERT_ENGINE_HPP_
#define SPLITCERT_ENGINE_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "splitcert/certificates.hpp"
#include "splitcert/oracle.hpp"
#include "splitcert/problem.hpp"
#include "splitcert/state.hpp"

namespace splitcert {

enum class CertificateMode { kOff, kCheap, kFull };

struct SolverConfig {
  double rho = 1.0;          // penalty parameter, > 0
  int max_iters = 10000;
  double eps_primal = 1e-8;  // threshold on ||r^k||
  double eps_dual = 1e-8;    // threshold on rho ||B (y^k - y^{k-1})||
  CertificateMode certificate_mode = CertificateMode::kCheap;
};

enum class SolveStatus { kConverged, kMaxIters, kSubproblemError };

std::string to_string(SolveStatus s);
std::string to_string(CertificateMode m);

struct SolveReport {
  SolveStatus status = SolveStatus::kMaxIters;
  IterateState final;
  std::vector<CertificateRecord> trace;  // one record per iteration
  int iterations = 0;
  /// All visited states including the initial one, retained whenever
  /// certificates are on (the self-referential Lyapunov check and post-hoc
  /// analyses need the history).
  std::vector<IterateState> states;
  /// Iteration at which a subproblem failed (subproblem-error status only).
  int failed_iteration = -1;
  std::string error_message;
};

/// Initial state from (y0, lambda0); defaults are zero vectors. x is not an
/// iteration input and starts at zero.
IterateState make_initial_state(const SplitProblem& prob,
                                const std::optional<Vector>& y0 = std::nullopt,
                                const std::optional<Vector>& lambda0 =
                                    std::nullopt);

/// One Gauss-Seidel sweep: minimize the augmented Lagrangian in x, then in
/// y, then take the dual ascent step lambda += rho (Ax + By - c). Both
/// subproblems are solved exactly; order is strictly x, then y, then lambda.
IterateState step(const SplitProblem& prob, const SolverConfig& cfg,
                  const IterateState& state);

/// lambda + rho r.
Vector dual_update(const Vector& lambda, double rho, const Vector& r);

/// Iterates step() until ||r|| <= eps_primal and rho||B dy|| <= eps_dual, or
/// max_iters. With certificate_mode != kOff the trace carries one record per
/// iteration; kFull additionally requires a reference solution.
SolveReport solve(const SplitProblem& prob, const SolverConfig& cfg,
                  const std::optional<std::pair<Vector, Vector>>& init =
                      std::nullopt,
                  const ReferenceSolution* ref = nullptr);

}  // namespace splitcert

#endif  // SPLITCERT_ENGINE_HPP_
