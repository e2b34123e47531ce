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

#ifndef SPLITCERT_ORACLE_HPP_
#define SPLITCERT_ORACLE_HPP_

#include <optional>
#include <utility>

#include "splitcert/subsolver.hpp"

namespace splitcert {

/// Inequality-subset enumeration cap (2^20 candidate KKT systems).
inline constexpr Index kBruteforceMaxInequalities = 20;

/// Size cap for whole-instance reference solves.
inline constexpr Index kBruteforceMaxVariables = 40;

/// Ground-truth primal-dual solution of one splitting instance.
struct ReferenceSolution {
  Vector x_star;
  Vector y_star;
  Vector lambda_star;  // multiplier of Ax + By = c
  double p_star = 0.0;
  Vector x_ineq_multipliers;  // one per X.G row
  Vector y_ineq_multipliers;  // one per Y.G row
  /// False when the primal minimizer is (possibly) non-unique; coordinate
  /// comparisons against (x_star, y_star) should then be skipped.
  bool unique_primal = true;
};

/// Minimizer found by KKT active-set enumeration.
struct BruteforceSolution {
  Vector z;
  Vector ineq_multipliers;
  Vector eq_multipliers;
  bool unique = true;
};

/// Value of a partial dual function (an infimum that may be -infinity).
struct DualValue {
  double value = 0.0;
  bool bounded = true;
};

/// Independent reference solver: enumerates subsets of active inequality
/// constraints, solves each equality-KKT system, and returns the feasible,
/// sign-valid candidate with minimal objective (ties broken toward the
/// lexicographically smallest minimizer). Exhaustive, so it is a genuine
/// oracle for solve_qp.
///
/// Throws CapacityError past kBruteforceMaxInequalities and InfeasibleError
/// when the constraint set is empty.
BruteforceSolution solve_qp_bruteforce(const QPSubproblem& sub);

/// Solves the full instance as one QP in (x, y) with the coupling equality
/// Ax + By = c and the stacked X, Y constraints. The coupling multiplier is
/// returned as lambda_star. Throws CapacityError past the caps and
/// InfeasibleError when the instance is infeasible or unbounded below
/// (either way assumption "solvable" fails).
ReferenceSolution solve_split_bruteforce(const SplitProblem& prob);

/// F(lambda) = inf over X of f(x) + lambda'Ax and
/// G(lambda) = inf over Y of g(y) + lambda'By, each solved by brute force.
/// An unattained infimum is reported as unbounded (value meaningless).
std::pair<DualValue, DualValue> dual_function_value(const SplitProblem& prob,
                                                    const Vector& lambda);

/// Single sides of dual_function_value (the proof evaluates F and G at
/// different multipliers, so computing both at one point would be wasted).
DualValue dual_value_f(const SplitProblem& prob, const Vector& lambda);
DualValue dual_value_g(const SplitProblem& prob, const Vector& lambda);

/// Phase-1 feasibility probe by enumeration: a feasible point of the set, or
/// nullopt when it is empty. Throws CapacityError past the enumeration cap.
std::optional<Vector> probe_feasible_point(const PolyhedralSet& set);

}  // namespace splitcert

#endif  // SPLITCERT_ORACLE_HPP_
