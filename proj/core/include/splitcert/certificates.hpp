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

#ifndef SPLITCERT_CERTIFICATES_HPP_
#define SPLITCERT_CERTIFICATES_HPP_

#include <optional>
#include <utility>
#include <vector>

#include "splitcert/oracle.hpp"
#include "splitcert/problem.hpp"
#include "splitcert/state.hpp"

namespace splitcert {

/// Absolute tolerance on certificate slacks; bounded by the subsolver's KKT
/// residual, which contaminates every proof quantity.
inline constexpr double kCertificateTol = 1e-8;

/// Per-iteration proof quantities. Slacks are oriented so that a
/// nonnegative slack means the corresponding inequality holds. Fields that
/// need a reference solution are absent when none was supplied.
///
/// Transition quantities (dual_residual, inner_product, lyapunov_descent
/// slack, hat_lambda) describe the step from iterate k-1 to iterate k. The
/// inner-product and Lyapunov-descent certificates are guaranteed by the
/// convergence argument only when iterate k-1 itself came out of a solver
/// step; the transition out of an arbitrary initial point (k = 1) is
/// computed but not certified.
struct CertificateRecord {
  int k = 0;
  double r_norm = 0.0;         // ||r^k||_2
  double p_k = 0.0;            // f(x^k) + g(y^k)
  double dual_residual = 0.0;  // rho ||B (y^k - y^{k-1})||_2
  double inner_product = 0.0;  // (B (y^k - y^{k-1}))' r^k
  Vector hat_lambda;           // lambda^k - rho B (y^k - y^{k-1})
  std::optional<double> V_k;
  std::optional<double> ineq1_slack;      // objective-gap lower bound
  std::optional<double> ineq2_slack;      // objective-gap upper bound
  std::optional<double> lyapunov_descent_slack;
  std::optional<double> dual_value;       // F(hat) + G(lambda) - lambda'c
  std::optional<double> dual_gap;         // p_star - dual_value
  /// True when the transition is covered by the descent certificates
  /// (the earlier iterate was itself produced by a step).
  bool certified_transition = false;
};

/// Lyapunov function (1/rho)||lambda^k - lambda*||^2 + rho||B(y^k - y*)||^2.
double lyapunov(const SplitProblem& prob, double rho, const IterateState& state,
                const ReferenceSolution& ref);

/// Same Lyapunov value against an arbitrary anchor (y_ref, lambda_ref).
double lyapunov_at(const SplitProblem& prob, double rho,
                   const IterateState& state, const Vector& y_ref,
                   const Vector& lambda_ref);

/// Descent slack V^k - V^{k+1} - rho||r^{k+1}||^2 - rho||B dy||^2; the
/// convergence argument makes it nonnegative whenever prev is itself a
/// step-produced iterate and the subproblems are solved exactly.
double check_lyapunov_descent(const SplitProblem& prob, double rho,
                              const IterateState& prev,
                              const IterateState& next,
                              const ReferenceSolution& ref);

/// Slack of  p* - p^{k+1} <= lambda*' r^{k+1}  (nonnegative for every k).
double check_gap_lower(const IterateState& next, const ReferenceSolution& ref);

/// Slack of  p^{k+1} - p* <=
///   -lambda^{k+1}' r^{k+1} - rho (B dy)'(B(y^{k+1} - y*) - r^{k+1})
/// (nonnegative for every k when the subproblems are solved exactly).
double check_gap_upper(const SplitProblem& prob, double rho,
                       const IterateState& prev, const IterateState& next,
                       const ReferenceSolution& ref);

/// (B (y^{k+1} - y^k))' r^{k+1}. Nonpositive whenever prev is itself a
/// step-produced iterate; needs no reference solution, so it is checkable
/// online. The very first transition (from an arbitrary start) carries no
/// guarantee: on the canonical scalar instance it is +112/81.
double check_inner_product(const SplitProblem& prob, const IterateState& prev,
                           const IterateState& next);

/// Shifted multiplier lambda^k - rho B (y^k - y^{k-1}); the x-iterate
/// attains the partial dual function F at this point.
Vector hat_lambda(const SplitProblem& prob, double rho,
                  const IterateState& state);

/// Attainment slacks (f(x^k) + hat'Ax^k) - F(hat) and
/// (g(y^k) + lambda^k'By^k) - G(lambda^k), both evaluated by the brute-force
/// oracle. Zero (to tolerance) at step-produced iterates.
std::pair<double, double> check_dual_attainment(const SplitProblem& prob,
                                                const IterateState& state,
                                                const Vector& hat);

/// p* - [F(hat) + G(lambda) - lambda'c], the proof's pairing of the partial
/// dual functions. Converges to 0; a nonnegative-to-tolerance dual gap once
/// hat and lambda coincide (weak duality applies in that limit).
double dual_gap(const SplitProblem& prob, const Vector& hat,
                const Vector& lambda, const ReferenceSolution& ref);

/// Assembles the record for the transition prev -> next under the given
/// certificate mode ("cheap" = reference-free quantities only; "full" also
/// evaluates the reference-dependent ones and the oracle-backed dual pair).
CertificateRecord make_certificate_record(const SplitProblem& prob, double rho,
                                          const IterateState& prev,
                                          const IterateState& next, bool full,
                                          const ReferenceSolution* ref);

/// V^k for every state, anchored at the final iterate of the run itself
/// (the self-referential certificate: the run's own limit is a valid
/// reference, so this sequence must decay to zero).
std::vector<double> self_referential_lyapunov(
    const SplitProblem& prob, double rho,
    const std::vector<IterateState>& states);

}  // namespace splitcert

#endif  // SPLITCERT_CERTIFICATES_HPP_
