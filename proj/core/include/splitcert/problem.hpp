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

#ifndef SPLITCERT_PROBLEM_HPP_
#define SPLITCERT_PROBLEM_HPP_

#include <string>
#include <vector>

#include "splitcert/numerics.hpp"

namespace splitcert {

/// Convex quadratic 1/2 z'Pz + q'z + r0. Convexity (P symmetric PSD) is a
/// model assumption verified by validate(), not enforced at construction, so
/// that invalid instances can be represented and reported.
struct QuadraticFunction {
  Matrix P;
  Vector q;
  double r0 = 0.0;

  QuadraticFunction() = default;
  QuadraticFunction(Matrix P_in, Vector q_in, double r0_in = 0.0);

  /// Zero function on dimension n (P = 0, q = 0, r0 = 0).
  static QuadraticFunction zero(Index n);

  Index dim() const { return q.size(); }
  double value(const Vector& z) const;
  Vector gradient(const Vector& z) const;
};

/// Polyhedron {z : Gz <= h, Ez = d}. Zero rows of G and E encode the whole
/// space; the ambient dimension is stored explicitly so that unconstrained
/// sets keep their dimension.
struct PolyhedralSet {
  Matrix G;  // p x n
  Vector h;  // p
  Matrix E;  // e x n
  Vector d;  // e

  PolyhedralSet() = default;
  PolyhedralSet(Matrix G_in, Vector h_in, Matrix E_in, Vector d_in,
                Index dim);

  /// The whole space of dimension n.
  static PolyhedralSet free(Index n);

  Index dim() const { return dim_; }
  Index num_inequalities() const { return G.rows(); }
  Index num_equalities() const { return E.rows(); }
  bool is_free() const { return G.rows() == 0 && E.rows() == 0; }

  /// Gz <= h + tol and |Ez - d| <= tol componentwise.
  bool contains(const Vector& z, double tol = kMembershipTol) const;

  /// Largest constraint violation at z (0 when strictly inside).
  double violation(const Vector& z) const;

 private:
  Index dim_ = 0;
};

/// One splitting instance: minimize f(x) + g(y) over x in X, y in Y subject
/// to Ax + By = c.
struct SplitProblem {
  QuadraticFunction f;  // on R^{n1}
  QuadraticFunction g;  // on R^{n2}
  Matrix A;             // m x n1
  Matrix B;             // m x n2
  Vector c;             // m
  PolyhedralSet X;      // subset of R^{n1}
  PolyhedralSet Y;      // subset of R^{n2}

  SplitProblem() = default;
  SplitProblem(QuadraticFunction f_in, QuadraticFunction g_in, Matrix A_in,
               Matrix B_in, Vector c_in, PolyhedralSet X_in,
               PolyhedralSet Y_in);

  Index n1() const { return A.cols(); }
  Index n2() const { return B.cols(); }
  Index m() const { return A.rows(); }
};

enum class CheckResult { kPass, kFail, kUnknown, kDeferred };

std::string to_string(CheckResult r);

/// One verified model assumption.
struct AssumptionCheck {
  int assumption = 0;  // 1..4
  std::string label;
  CheckResult result = CheckResult::kUnknown;
  std::string detail;
};

struct ValidationReport {
  std::vector<AssumptionCheck> checks;

  /// True iff no decidable check failed (kUnknown and kDeferred do not
  /// count against the instance).
  bool all_decidable_pass() const;
};

/// Checks the four model assumptions: f, g convex (PSD), X and Y nonempty
/// (via the brute-force feasibility probe; kUnknown past its capacity),
/// A and B full column-rank. Solvability is reported kDeferred; it is
/// decided at solve time. Throws DimensionError on structurally
/// inconsistent instances.
ValidationReport validate(const SplitProblem& prob);

/// f(x) + g(y).
double evaluate_objective(const SplitProblem& prob, const Vector& x,
                          const Vector& y);

/// Ax + By - c.
Vector primal_residual(const SplitProblem& prob, const Vector& x,
                       const Vector& y);

/// f(x) + g(y) + lambda'(Ax + By - c) + (rho/2)||Ax + By - c||^2.
/// Throws ParameterError unless rho > 0.
double augmented_lagrangian(const SplitProblem& prob, double rho,
                            const Vector& x, const Vector& y,
                            const Vector& lambda);

/// Global-consensus instance: x stacks one copy of the shared variable per
/// local objective, y is the shared variable, A = I, B stacks -I blocks,
/// c = 0. The y-block of its solution minimizes the sum of the local
/// objectives over the intersection of the local sets.
SplitProblem build_consensus(const std::vector<QuadraticFunction>& local_fs,
                             const std::vector<PolyhedralSet>& local_sets);

}  // namespace splitcert

#endif  // SPLITCERT_PROBLEM_HPP_
