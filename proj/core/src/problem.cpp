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

#include "splitcert/problem.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "splitcert/oracle.hpp"

namespace splitcert {

namespace {

void require(bool cond, const std::string& what) {
  if (!cond) throw DimensionError(what);
}

void require_finite(const Matrix& m, const std::string& name) {
  if (!all_finite(m)) throw ParameterError(name + " has non-finite entries");
}

void require_finite(const Vector& v, const std::string& name) {
  if (!all_finite(v)) throw ParameterError(name + " has non-finite entries");
}

}  // namespace

QuadraticFunction::QuadraticFunction(Matrix P_in, Vector q_in, double r0_in)
    : P(std::move(P_in)), q(std::move(q_in)), r0(r0_in) {
  require(P.rows() == P.cols(), "QuadraticFunction: P must be square");
  require(P.rows() == q.size(), "QuadraticFunction: P and q dimensions differ");
  require_finite(P, "QuadraticFunction: P");
  require_finite(q, "QuadraticFunction: q");
  if (!std::isfinite(r0)) {
    throw ParameterError("QuadraticFunction: r0 is not finite");
  }
}

QuadraticFunction QuadraticFunction::zero(Index n) {
  return QuadraticFunction(Matrix::Zero(n, n), Vector::Zero(n), 0.0);
}

double QuadraticFunction::value(const Vector& z) const {
  require(z.size() == dim(), "QuadraticFunction::value: dimension mismatch");
  return 0.5 * z.dot(P * z) + q.dot(z) + r0;
}

Vector QuadraticFunction::gradient(const Vector& z) const {
  require(z.size() == dim(),
          "QuadraticFunction::gradient: dimension mismatch");
  return P * z + q;
}

PolyhedralSet::PolyhedralSet(Matrix G_in, Vector h_in, Matrix E_in,
                             Vector d_in, Index dim)
    : G(std::move(G_in)), h(std::move(h_in)), E(std::move(E_in)),
      d(std::move(d_in)), dim_(dim) {
  if (G.rows() == 0 && G.cols() == 0) G.resize(0, dim_);
  if (E.rows() == 0 && E.cols() == 0) E.resize(0, dim_);
  require(G.cols() == dim_, "PolyhedralSet: G column count != dimension");
  require(E.cols() == dim_, "PolyhedralSet: E column count != dimension");
  require(G.rows() == h.size(), "PolyhedralSet: G and h row counts differ");
  require(E.rows() == d.size(), "PolyhedralSet: E and d row counts differ");
  require_finite(G, "PolyhedralSet: G");
  require_finite(h, "PolyhedralSet: h");
  require_finite(E, "PolyhedralSet: E");
  require_finite(d, "PolyhedralSet: d");
}

PolyhedralSet PolyhedralSet::free(Index n) {
  return PolyhedralSet(Matrix(0, n), Vector(0), Matrix(0, n), Vector(0), n);
}

bool PolyhedralSet::contains(const Vector& z, double tol) const {
  return violation(z) <= tol;
}

double PolyhedralSet::violation(const Vector& z) const {
  require(z.size() == dim_, "PolyhedralSet::violation: dimension mismatch");
  double v = 0.0;
  if (G.rows() > 0) v = std::max(v, (G * z - h).maxCoeff());
  if (E.rows() > 0) v = std::max(v, (E * z - d).cwiseAbs().maxCoeff());
  return v;
}

SplitProblem::SplitProblem(QuadraticFunction f_in, QuadraticFunction g_in,
                           Matrix A_in, Matrix B_in, Vector c_in,
                           PolyhedralSet X_in, PolyhedralSet Y_in)
    : f(std::move(f_in)), g(std::move(g_in)), A(std::move(A_in)),
      B(std::move(B_in)), c(std::move(c_in)), X(std::move(X_in)),
      Y(std::move(Y_in)) {
  require(A.rows() == B.rows(), "SplitProblem: A and B row counts differ");
  require(A.rows() == c.size(), "SplitProblem: A rows != c size");
  require(f.dim() == A.cols(), "SplitProblem: f dimension != A columns");
  require(g.dim() == B.cols(), "SplitProblem: g dimension != B columns");
  require(X.dim() == A.cols(), "SplitProblem: X dimension != A columns");
  require(Y.dim() == B.cols(), "SplitProblem: Y dimension != B columns");
  require_finite(A, "SplitProblem: A");
  require_finite(B, "SplitProblem: B");
  require_finite(c, "SplitProblem: c");
}

std::string to_string(CheckResult r) {
  switch (r) {
    case CheckResult::kPass: return "PASS";
    case CheckResult::kFail: return "FAIL";
    case CheckResult::kUnknown: return "UNKNOWN";
    case CheckResult::kDeferred: return "DEFERRED";
  }
  return "?";
}

bool ValidationReport::all_decidable_pass() const {
  return std::none_of(checks.begin(), checks.end(), [](const auto& c) {
    return c.result == CheckResult::kFail;
  });
}

namespace {

AssumptionCheck convexity_check(const QuadraticFunction& fn,
                                const std::string& name) {
  AssumptionCheck check{1, name + " convex", CheckResult::kUnknown, ""};
  try {
    if (is_psd(fn.P)) {
      check.result = CheckResult::kPass;
    } else {
      check.result = CheckResult::kFail;
      check.detail = "P has a negative eigenvalue";
    }
  } catch (const SymmetryError&) {
    check.result = CheckResult::kFail;
    check.detail = "P is not symmetric";
  }
  return check;
}

AssumptionCheck nonempty_check(const PolyhedralSet& set,
                               const std::string& name) {
  AssumptionCheck check{2, name + " nonempty polyhedral", CheckResult::kUnknown,
                        ""};
  try {
    if (probe_feasible_point(set).has_value()) {
      check.result = CheckResult::kPass;
    } else {
      check.result = CheckResult::kFail;
      check.detail = name + " is empty";
    }
  } catch (const CapacityError&) {
    check.result = CheckResult::kUnknown;
    check.detail = "feasibility probe exceeded its budget";
  }
  return check;
}

AssumptionCheck rank_check(const Matrix& M, const std::string& name) {
  AssumptionCheck check{4, name + " full column-rank", CheckResult::kUnknown,
                        ""};
  const Index r = numerical_rank(M);
  if (r == M.cols()) {
    check.result = CheckResult::kPass;
  } else {
    check.result = CheckResult::kFail;
    check.detail = name + " has rank " + std::to_string(r) + " < " +
                   std::to_string(M.cols());
  }
  return check;
}

}  // namespace

ValidationReport validate(const SplitProblem& prob) {
  ValidationReport report;
  report.checks.push_back(convexity_check(prob.f, "f"));
  report.checks.push_back(convexity_check(prob.g, "g"));
  report.checks.push_back(nonempty_check(prob.X, "X"));
  report.checks.push_back(nonempty_check(prob.Y, "Y"));
  report.checks.push_back({3, "solvability", CheckResult::kDeferred,
                           "checked at solve time"});
  report.checks.push_back(rank_check(prob.A, "A"));
  report.checks.push_back(rank_check(prob.B, "B"));
  return report;
}

double evaluate_objective(const SplitProblem& prob, const Vector& x,
                          const Vector& y) {
  return prob.f.value(x) + prob.g.value(y);
}

Vector primal_residual(const SplitProblem& prob, const Vector& x,
                       const Vector& y) {
  require(x.size() == prob.n1(), "primal_residual: x dimension mismatch");
  require(y.size() == prob.n2(), "primal_residual: y dimension mismatch");
  return prob.A * x + prob.B * y - prob.c;
}

double augmented_lagrangian(const SplitProblem& prob, double rho,
                            const Vector& x, const Vector& y,
                            const Vector& lambda) {
  if (rho <= 0.0) throw ParameterError("augmented_lagrangian: rho must be > 0");
  require(lambda.size() == prob.m(),
          "augmented_lagrangian: lambda dimension mismatch");
  const Vector r = primal_residual(prob, x, y);
  return evaluate_objective(prob, x, y) + lambda.dot(r) +
         0.5 * rho * r.squaredNorm();
}

SplitProblem build_consensus(const std::vector<QuadraticFunction>& local_fs,
                             const std::vector<PolyhedralSet>& local_sets) {
  if (local_fs.empty() || local_fs.size() != local_sets.size()) {
    throw DimensionError(
        "build_consensus: need equally many local objectives and sets");
  }
  const Index n = local_fs.front().dim();
  const auto N = static_cast<Index>(local_fs.size());
  for (std::size_t i = 0; i < local_fs.size(); ++i) {
    if (local_fs[i].dim() != n || local_sets[i].dim() != n) {
      throw DimensionError("build_consensus: local dimensions differ");
    }
  }

  Matrix P = Matrix::Zero(N * n, N * n);
  Vector q = Vector::Zero(N * n);
  double r0 = 0.0;
  Index total_ineq = 0;
  Index total_eq = 0;
  for (Index i = 0; i < N; ++i) {
    P.block(i * n, i * n, n, n) = local_fs[i].P;
    q.segment(i * n, n) = local_fs[i].q;
    r0 += local_fs[i].r0;
    total_ineq += local_sets[i].num_inequalities();
    total_eq += local_sets[i].num_equalities();
  }

  Matrix G = Matrix::Zero(total_ineq, N * n);
  Vector h(total_ineq);
  Matrix E = Matrix::Zero(total_eq, N * n);
  Vector d(total_eq);
  Index gi = 0, ei = 0;
  for (Index i = 0; i < N; ++i) {
    const auto& s = local_sets[i];
    if (s.num_inequalities() > 0) {
      G.block(gi, i * n, s.num_inequalities(), n) = s.G;
      h.segment(gi, s.num_inequalities()) = s.h;
      gi += s.num_inequalities();
    }
    if (s.num_equalities() > 0) {
      E.block(ei, i * n, s.num_equalities(), n) = s.E;
      d.segment(ei, s.num_equalities()) = s.d;
      ei += s.num_equalities();
    }
  }

  Matrix B(N * n, n);
  for (Index i = 0; i < N; ++i) {
    B.block(i * n, 0, n, n) = -Matrix::Identity(n, n);
  }

  return SplitProblem(
      QuadraticFunction(std::move(P), std::move(q), r0),
      QuadraticFunction::zero(n), Matrix::Identity(N * n, N * n), std::move(B),
      Vector::Zero(N * n),
      PolyhedralSet(std::move(G), std::move(h), std::move(E), std::move(d),
                    N * n),
      PolyhedralSet::free(n));
}

}  // namespace splitcert
