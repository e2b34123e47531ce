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

#ifndef SPLITCERT_SUBSOLVER_HPP_
#define SPLITCERT_SUBSOLVER_HPP_

#include <optional>
#include <vector>

#include "splitcert/problem.hpp"

namespace splitcert {

/// Strictly convex polyhedral QP: minimize 1/2 z'Hz + l'z over set.
struct QPSubproblem {
  Matrix H;
  Vector l;
  PolyhedralSet set;

  QPSubproblem() = default;
  QPSubproblem(Matrix H_in, Vector l_in, PolyhedralSet set_in);

  Index dim() const { return l.size(); }
  double objective(const Vector& z) const {
    return 0.5 * z.dot(H * z) + l.dot(z);
  }
};

/// Exact minimizer with its KKT certificate:
///   Hz + l + G'mu + E'nu = 0,  mu >= 0,  mu_i (G_i z - h_i) = 0.
struct QPSolution {
  Vector z;
  std::vector<Index> active;  // inequality rows active at z, ascending
  Vector ineq_multipliers;    // mu, one per inequality row (0 when inactive)
  Vector eq_multipliers;      // nu, one per equality row
  int iterations = 0;         // active-set steps taken
};

/// Infinity norm of the KKT residual of (z, mu, nu): stationarity,
/// feasibility, multiplier sign, and complementary slackness.
double kkt_residual(const QPSubproblem& sub, const QPSolution& sol);

/// x-update subproblem of the splitting iteration:
///   H = P_f + rho A'A,  l = q_f + A'lambda + rho A'(By - c),  set = X.
/// Minimizing 1/2 x'Hx + l'x over X is the augmented-Lagrangian x-step up to
/// an additive constant.
QPSubproblem assemble_x_subproblem(const SplitProblem& prob, double rho,
                                   const Vector& y, const Vector& lambda);

/// y-update subproblem, symmetric to the x-update:
///   H = P_g + rho B'B,  l = q_g + B'lambda + rho B'(Ax - c),  set = Y.
QPSubproblem assemble_y_subproblem(const SplitProblem& prob, double rho,
                                   const Vector& x, const Vector& lambda);

/// Primal active-set solve of a strictly convex polyhedral QP, starting from
/// a phase-1 feasible point (least-distance programming via nonnegative
/// least squares). A feasible warm-start hint skips phase 1; it never
/// changes the returned minimizer, which is unique by strict convexity.
///
/// Ties among blocking constraints break toward the smallest row index.
/// Throws InfeasibleError when the set is empty and BudgetError after
/// 50 * (n + p) active-set steps.
QPSolution solve_qp(const QPSubproblem& sub,
                    const std::optional<Vector>& hint = std::nullopt);

/// Feasible point of a polyhedron via least-distance programming, or
/// nullopt when the polyhedron is empty. Deterministic.
std::optional<Vector> phase1_feasible_point(const PolyhedralSet& set);

/// Nonnegative least squares min ||A u - b|| s.t. u >= 0 (Lawson-Hanson).
/// Exposed for tests; also the engine behind phase1_feasible_point.
Vector nnls(const Matrix& A, const Vector& b);

}  // namespace splitcert

#endif  // SPLITCERT_SUBSOLVER_HPP_
