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

#include "splitcert/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

namespace splitcert {

namespace {

constexpr double kPrimalFeasTol = 1e-9;
constexpr double kSignTol = 1e-10;      // accept mu >= -kSignTol
constexpr double kObjectiveTieTol = 1e-9;
constexpr double kDistinctTol = 1e-7;   // minimizers further apart count as distinct

struct Candidate {
  Vector z;
  Vector mu;       // full-length inequality multipliers
  Vector nu;       // full-length equality multipliers
  double objective = 0.0;
  bool from_singular_kkt = false;
};

// Enumerates subsets of active inequalities and collects every feasible,
// sign-valid KKT candidate. Any such candidate is a global minimizer of the
// convex QP, so the list is a list of optima (empty iff none exists, i.e.
// the problem is infeasible or unbounded below).
std::optional<Candidate> enumerate_best(const QPSubproblem& sub,
                                        bool* distinct_minimizers) {
  const Index n = sub.dim();
  const auto& set = sub.set;
  const Index p = set.num_inequalities();
  const Index e = set.num_equalities();
  if (p > kBruteforceMaxInequalities) {
    throw CapacityError("bruteforce: more than 20 inequality constraints");
  }

  const double rhs_scale = std::max(
      {1.0, sub.l.size() > 0 ? sub.l.cwiseAbs().maxCoeff() : 0.0,
       set.h.size() > 0 ? set.h.cwiseAbs().maxCoeff() : 0.0,
       set.d.size() > 0 ? set.d.cwiseAbs().maxCoeff() : 0.0});
  const double feas_scale =
      std::max(1.0, set.h.size() > 0 ? set.h.cwiseAbs().maxCoeff() : 0.0);

  std::optional<Candidate> best;
  bool distinct = false;

  const std::uint64_t masks = std::uint64_t{1} << p;
  std::vector<Index> active;
  active.reserve(static_cast<std::size_t>(p));
  for (std::uint64_t mask = 0; mask < masks; ++mask) {
    // Caratheodory: an optimal multiplier set never needs more than n
    // linearly independent active rows, so larger subsets add nothing.
    if (std::popcount(mask) > static_cast<int>(n)) continue;
    active.clear();
    for (Index i = 0; i < p; ++i) {
      if (mask & (std::uint64_t{1} << i)) active.push_back(i);
    }
    const Index k = static_cast<Index>(active.size());

    const Index rows = k + e;
    Matrix kkt = Matrix::Zero(n + rows, n + rows);
    kkt.topLeftCorner(n, n) = sub.H;
    Matrix act(rows, n);
    for (Index j = 0; j < k; ++j) act.row(j) = set.G.row(active[j]);
    if (e > 0) act.bottomRows(e) = set.E;
    if (rows > 0) {
      kkt.block(0, n, n, rows) = act.transpose();
      kkt.block(n, 0, rows, n) = act;
    }
    Vector rhs(n + rows);
    rhs.head(n) = -sub.l;
    for (Index j = 0; j < k; ++j) rhs(n + j) = set.h(active[j]);
    if (e > 0) rhs.tail(e) = set.d;

    Vector sol;
    bool singular = false;
    Eigen::FullPivLU<Matrix> lu(kkt);
    if (lu.isInvertible()) {
      sol = lu.solve(rhs);
    } else {
      // Singular but possibly consistent (flat directions or redundant
      // rows): take the minimum-norm solution and keep it only if it
      // actually solves the system.
      Eigen::CompleteOrthogonalDecomposition<Matrix> cod(kkt);
      sol = cod.solve(rhs);
      if ((kkt * sol - rhs).cwiseAbs().maxCoeff() > 1e-9 * rhs_scale) {
        continue;
      }
      singular = true;
    }

    Vector z = sol.head(n);
    if (!all_finite(z)) continue;
    if (set.violation(z) > kPrimalFeasTol * feas_scale) continue;
    bool sign_ok = true;
    for (Index j = 0; j < k; ++j) {
      if (sol(n + j) < -kSignTol) {
        sign_ok = false;
        break;
      }
    }
    if (!sign_ok) continue;

    Candidate cand;
    cand.z = std::move(z);
    cand.mu = Vector::Zero(p);
    for (Index j = 0; j < k; ++j) {
      cand.mu(active[j]) = std::max(0.0, sol(n + j));
    }
    cand.nu = e > 0 ? Vector(sol.tail(e)) : Vector(0);
    cand.objective = sub.objective(cand.z);
    cand.from_singular_kkt = singular;

    if (!best.has_value()) {
      best = std::move(cand);
      continue;
    }
    const double tie = kObjectiveTieTol * std::max(1.0, std::abs(best->objective));
    if (cand.objective < best->objective - tie) {
      best = std::move(cand);
    } else if (cand.objective <= best->objective + tie) {
      if ((cand.z - best->z).cwiseAbs().maxCoeff() > kDistinctTol) {
        distinct = true;
      }
      if (std::lexicographical_compare(cand.z.data(), cand.z.data() + n,
                                       best->z.data(), best->z.data() + n)) {
        cand.from_singular_kkt |= best->from_singular_kkt;
        best = std::move(cand);
      } else {
        best->from_singular_kkt |= cand.from_singular_kkt;
      }
    }
  }

  if (distinct_minimizers != nullptr) *distinct_minimizers = distinct;
  return best;
}

}  // namespace

std::optional<Vector> probe_feasible_point(const PolyhedralSet& set) {
  QPSubproblem probe(Matrix::Identity(set.dim(), set.dim()),
                     Vector::Zero(set.dim()), set);
  const auto cand = enumerate_best(probe, nullptr);
  if (!cand.has_value()) return std::nullopt;
  return cand->z;
}

BruteforceSolution solve_qp_bruteforce(const QPSubproblem& sub) {
  bool distinct = false;
  const auto cand = enumerate_best(sub, &distinct);
  if (!cand.has_value()) {
    throw InfeasibleError("solve_qp_bruteforce: no feasible KKT candidate");
  }
  BruteforceSolution out;
  out.z = cand->z;
  out.ineq_multipliers = cand->mu;
  out.eq_multipliers = cand->nu;
  out.unique = !(distinct || cand->from_singular_kkt);
  return out;
}

namespace {

// Stacks an instance into one QP over w = (x, y): the coupling equality
// Ax + By = c goes last so its multiplier block is lambda.
QPSubproblem stack_split(const SplitProblem& prob) {
  const Index n1 = prob.n1();
  const Index n2 = prob.n2();
  const Index n = n1 + n2;
  const Index m = prob.m();

  Matrix H = Matrix::Zero(n, n);
  H.topLeftCorner(n1, n1) = 0.5 * (prob.f.P + prob.f.P.transpose());
  H.bottomRightCorner(n2, n2) = 0.5 * (prob.g.P + prob.g.P.transpose());
  Vector l(n);
  l.head(n1) = prob.f.q;
  l.tail(n2) = prob.g.q;

  const Index pX = prob.X.num_inequalities();
  const Index pY = prob.Y.num_inequalities();
  Matrix G = Matrix::Zero(pX + pY, n);
  Vector h(pX + pY);
  if (pX > 0) {
    G.block(0, 0, pX, n1) = prob.X.G;
    h.head(pX) = prob.X.h;
  }
  if (pY > 0) {
    G.block(pX, n1, pY, n2) = prob.Y.G;
    h.tail(pY) = prob.Y.h;
  }

  const Index eX = prob.X.num_equalities();
  const Index eY = prob.Y.num_equalities();
  Matrix E = Matrix::Zero(eX + eY + m, n);
  Vector d(eX + eY + m);
  if (eX > 0) {
    E.block(0, 0, eX, n1) = prob.X.E;
    d.head(eX) = prob.X.d;
  }
  if (eY > 0) {
    E.block(eX, n1, eY, n2) = prob.Y.E;
    d.segment(eX, eY) = prob.Y.d;
  }
  E.block(eX + eY, 0, m, n1) = prob.A;
  E.block(eX + eY, n1, m, n2) = prob.B;
  d.tail(m) = prob.c;

  return QPSubproblem(std::move(H), std::move(l),
                      PolyhedralSet(std::move(G), std::move(h), std::move(E),
                                    std::move(d), n));
}

}  // namespace

ReferenceSolution solve_split_bruteforce(const SplitProblem& prob) {
  const Index n1 = prob.n1();
  const Index n2 = prob.n2();
  const Index m = prob.m();
  if (n1 + n2 + m > kBruteforceMaxVariables) {
    throw CapacityError("solve_split_bruteforce: instance too large");
  }
  const QPSubproblem stacked = stack_split(prob);

  bool distinct = false;
  const auto cand = enumerate_best(stacked, &distinct);
  if (!cand.has_value()) {
    if (probe_feasible_point(stacked.set).has_value()) {
      throw InfeasibleError(
          "solve_split_bruteforce: objective unbounded below (not solvable)");
    }
    throw InfeasibleError("solve_split_bruteforce: instance infeasible");
  }

  const Index pX = prob.X.num_inequalities();
  const Index eX = prob.X.num_equalities();
  const Index eY = prob.Y.num_equalities();

  ReferenceSolution ref;
  ref.x_star = cand->z.head(n1);
  ref.y_star = cand->z.tail(n2);
  ref.lambda_star = cand->nu.tail(m);
  ref.p_star = cand->objective + prob.f.r0 + prob.g.r0;
  ref.x_ineq_multipliers = cand->mu.head(pX);
  ref.y_ineq_multipliers = cand->mu.tail(cand->mu.size() - pX);
  (void)eX;
  (void)eY;

  // The minimizer is unique iff no nonzero direction is flat for the
  // objective and all equalities at once.
  Matrix flat(stacked.H.rows() + stacked.set.E.rows(), n1 + n2);
  flat.topRows(stacked.H.rows()) = stacked.H;
  flat.bottomRows(stacked.set.E.rows()) = stacked.set.E;
  const bool kernel_trivial = numerical_rank(flat) == n1 + n2;
  ref.unique_primal = kernel_trivial && !distinct && !cand->from_singular_kkt;
  return ref;
}

namespace {

DualValue partial_dual(const QuadraticFunction& fn, const Matrix& M,
                       const Vector& lam, const PolyhedralSet& set) {
  QPSubproblem sub(fn.P, fn.q + M.transpose() * lam, set);
  const auto cand = enumerate_best(sub, nullptr);
  if (cand.has_value()) {
    return {cand->objective + fn.r0, true};
  }
  if (!probe_feasible_point(set).has_value()) {
    throw InfeasibleError("dual_function_value: constraint set is empty");
  }
  return {-std::numeric_limits<double>::infinity(), false};
}

}  // namespace

DualValue dual_value_f(const SplitProblem& prob, const Vector& lambda) {
  if (lambda.size() != prob.m()) {
    throw DimensionError("dual_value_f: lambda dimension mismatch");
  }
  return partial_dual(prob.f, prob.A, lambda, prob.X);
}

DualValue dual_value_g(const SplitProblem& prob, const Vector& lambda) {
  if (lambda.size() != prob.m()) {
    throw DimensionError("dual_value_g: lambda dimension mismatch");
  }
  return partial_dual(prob.g, prob.B, lambda, prob.Y);
}

std::pair<DualValue, DualValue> dual_function_value(const SplitProblem& prob,
                                                    const Vector& lambda) {
  return {dual_value_f(prob, lambda), dual_value_g(prob, lambda)};
}

}  // namespace splitcert
