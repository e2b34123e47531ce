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

#include "splitcert/engine.hpp"

#include <utility>

#include "splitcert/subsolver.hpp"

namespace splitcert {

std::string to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::kConverged: return "converged";
    case SolveStatus::kMaxIters: return "max_iters";
    case SolveStatus::kSubproblemError: return "subproblem_error";
  }
  return "?";
}

std::string to_string(CertificateMode m) {
  switch (m) {
    case CertificateMode::kOff: return "off";
    case CertificateMode::kCheap: return "cheap";
    case CertificateMode::kFull: return "full";
  }
  return "?";
}

namespace {

void check_config(const SolverConfig& cfg) {
  if (cfg.rho <= 0.0) throw ParameterError("SolverConfig: rho must be > 0");
  if (cfg.eps_primal < 0.0 || cfg.eps_dual < 0.0) {
    throw ParameterError("SolverConfig: thresholds must be nonnegative");
  }
  if (cfg.max_iters < 1) {
    throw ParameterError("SolverConfig: max_iters must be positive");
  }
}

}  // namespace

IterateState make_initial_state(const SplitProblem& prob,
                                const std::optional<Vector>& y0,
                                const std::optional<Vector>& lambda0) {
  IterateState s;
  s.k = 0;
  s.x = Vector::Zero(prob.n1());
  s.y = y0.value_or(Vector::Zero(prob.n2()));
  s.lambda = lambda0.value_or(Vector::Zero(prob.m()));
  if (s.y.size() != prob.n2() || s.lambda.size() != prob.m()) {
    throw DimensionError("make_initial_state: init dimension mismatch");
  }
  s.y_prev = s.y;
  s.r = primal_residual(prob, s.x, s.y);
  s.p = evaluate_objective(prob, s.x, s.y);
  return s;
}

Vector dual_update(const Vector& lambda, double rho, const Vector& r) {
  if (lambda.size() != r.size()) {
    throw DimensionError("dual_update: dimension mismatch");
  }
  return lambda + rho * r;
}

IterateState step(const SplitProblem& prob, const SolverConfig& cfg,
                  const IterateState& state) {
  check_config(cfg);

  // Previous subproblem solutions are feasible, so they make valid
  // warm-start hints; they never change the (unique) minimizers.
  const QPSubproblem x_sub =
      assemble_x_subproblem(prob, cfg.rho, state.y, state.lambda);
  const Vector x_next = solve_qp(x_sub, state.x).z;

  const QPSubproblem y_sub =
      assemble_y_subproblem(prob, cfg.rho, x_next, state.lambda);
  const Vector y_next = solve_qp(y_sub, state.y).z;

  IterateState next;
  next.k = state.k + 1;
  next.x = x_next;
  next.y = y_next;
  next.y_prev = state.y;
  next.r = primal_residual(prob, next.x, next.y);
  next.lambda = dual_update(state.lambda, cfg.rho, next.r);
  next.p = evaluate_objective(prob, next.x, next.y);
  return next;
}

SolveReport solve(const SplitProblem& prob, const SolverConfig& cfg,
                  const std::optional<std::pair<Vector, Vector>>& init,
                  const ReferenceSolution* ref) {
  check_config(cfg);
  if (cfg.certificate_mode == CertificateMode::kFull && ref == nullptr) {
    throw ParameterError("solve: full certificate mode needs a reference");
  }

  SolveReport report;
  IterateState state =
      init.has_value()
          ? make_initial_state(prob, init->first, init->second)
          : make_initial_state(prob);

  const bool keep_records = cfg.certificate_mode != CertificateMode::kOff;
  const bool full = cfg.certificate_mode == CertificateMode::kFull;
  if (keep_records) report.states.push_back(state);

  for (int k = 1; k <= cfg.max_iters; ++k) {
    IterateState next;
    try {
      next = step(prob, cfg, state);
    } catch (const InfeasibleError& err) {
      report.status = SolveStatus::kSubproblemError;
      report.final = state;
      report.iterations = k - 1;
      report.failed_iteration = k - 1;
      report.error_message = err.what();
      return report;
    } catch (const BudgetError& err) {
      report.status = SolveStatus::kSubproblemError;
      report.final = state;
      report.iterations = k - 1;
      report.failed_iteration = k - 1;
      report.error_message = err.what();
      return report;
    }

    if (keep_records) {
      report.trace.push_back(
          make_certificate_record(prob, cfg.rho, state, next, full, ref));
      report.states.push_back(next);
    }

    const double primal_norm = next.r.norm();
    const double dual_norm =
        cfg.rho * (prob.B * (next.y - state.y)).norm();
    state = std::move(next);
    report.iterations = k;

    if (primal_norm <= cfg.eps_primal && dual_norm <= cfg.eps_dual) {
      report.status = SolveStatus::kConverged;
      report.final = state;
      return report;
    }
  }

  report.status = SolveStatus::kMaxIters;
  report.final = state;
  return report;
}

}  // namespace splitcert
