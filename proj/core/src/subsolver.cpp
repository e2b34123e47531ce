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

#include "splitcert/subsolver.hpp"

#include <Eigen/Cholesky>

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

namespace splitcert {

namespace {

constexpr double kFeasTol = 1e-9;        // phase-1 / warm-start feasibility
constexpr double kStepTol = 1e-11;       // ||p|| below this counts as zero
constexpr double kMultiplierTol = 1e-10; // accept mu >= -kMultiplierTol
constexpr double kDirectionTol = 1e-13;  // G_i p above this can block

}  // namespace

QPSubproblem::QPSubproblem(Matrix H_in, Vector l_in, PolyhedralSet set_in)
    : H(std::move(H_in)), l(std::move(l_in)), set(std::move(set_in)) {
  if (H.rows() != H.cols() || H.rows() != l.size() || set.dim() != l.size()) {
    throw DimensionError("QPSubproblem: inconsistent dimensions");
  }
}

QPSubproblem assemble_x_subproblem(const SplitProblem& prob, double rho,
                                   const Vector& y, const Vector& lambda) {
  if (rho <= 0.0) throw ParameterError("assemble_x_subproblem: rho must be > 0");
  if (y.size() != prob.n2() || lambda.size() != prob.m()) {
    throw DimensionError("assemble_x_subproblem: dimension mismatch");
  }
  Matrix H = prob.f.P + rho * prob.A.transpose() * prob.A;
  Vector l = prob.f.q + prob.A.transpose() * lambda +
             rho * prob.A.transpose() * (prob.B * y - prob.c);
  return QPSubproblem(std::move(H), std::move(l), prob.X);
}

QPSubproblem assemble_y_subproblem(const SplitProblem& prob, double rho,
                                   const Vector& x, const Vector& lambda) {
  if (rho <= 0.0) throw ParameterError("assemble_y_subproblem: rho must be > 0");
  if (x.size() != prob.n1() || lambda.size() != prob.m()) {
    throw DimensionError("assemble_y_subproblem: dimension mismatch");
  }
  Matrix H = prob.g.P + rho * prob.B.transpose() * prob.B;
  Vector l = prob.g.q + prob.B.transpose() * lambda +
             rho * prob.B.transpose() * (prob.A * x - prob.c);
  return QPSubproblem(std::move(H), std::move(l), prob.Y);
}

double kkt_residual(const QPSubproblem& sub, const QPSolution& sol) {
  const auto& set = sub.set;
  Vector stat = sub.H * sol.z + sub.l;
  if (set.num_inequalities() > 0) {
    stat += set.G.transpose() * sol.ineq_multipliers;
  }
  if (set.num_equalities() > 0) {
    stat += set.E.transpose() * sol.eq_multipliers;
  }
  double res = stat.size() > 0 ? stat.cwiseAbs().maxCoeff() : 0.0;
  res = std::max(res, set.violation(sol.z));
  if (set.num_inequalities() > 0) {
    res = std::max(res, -std::min(0.0, sol.ineq_multipliers.minCoeff()));
    const Vector slack = set.h - set.G * sol.z;
    res = std::max(res,
                   (sol.ineq_multipliers.array() * slack.array()).abs().maxCoeff());
  }
  return res;
}

// ---------------------------------------------------------------------------
// Phase 1: feasible point via least-distance programming (Lawson-Hanson).
// ---------------------------------------------------------------------------

Vector nnls(const Matrix& A, const Vector& b) {
  if (A.rows() != b.size()) throw DimensionError("nnls: dimension mismatch");
  const Index n = A.cols();
  Vector u = Vector::Zero(n);
  if (n == 0) return u;

  const double scale = std::max({1.0, A.cwiseAbs().maxCoeff(),
                                 b.size() > 0 ? b.cwiseAbs().maxCoeff() : 0.0});
  const double grad_tol = 1e-11 * scale * scale;

  std::vector<bool> passive(n, false);
  Index passive_count = 0;
  const int max_outer = 3 * static_cast<int>(n) + 10;

  for (int outer = 0; outer < max_outer; ++outer) {
    const Vector w = A.transpose() * (b - A * u);
    Index enter = -1;
    double w_best = grad_tol;
    for (Index i = 0; i < n; ++i) {
      if (!passive[i] && w(i) > w_best) {
        w_best = w(i);
        enter = i;
      }
    }
    if (enter < 0) break;
    passive[enter] = true;
    ++passive_count;

    // Inner loop: restrict to the passive set, back off until nonnegative.
    for (int inner = 0; inner <= max_outer; ++inner) {
      Matrix Ap(A.rows(), passive_count);
      std::vector<Index> idx;
      idx.reserve(passive_count);
      for (Index i = 0; i < n; ++i) {
        if (passive[i]) {
          Ap.col(static_cast<Index>(idx.size())) = A.col(i);
          idx.push_back(i);
        }
      }
      const Vector s_p = Ap.colPivHouseholderQr().solve(b);

      double alpha = 1.0;
      bool all_positive = true;
      for (std::size_t j = 0; j < idx.size(); ++j) {
        if (s_p(static_cast<Index>(j)) <= 0.0) {
          all_positive = false;
          const double uj = u(idx[j]);
          const double denom = uj - s_p(static_cast<Index>(j));
          if (denom > 0.0) alpha = std::min(alpha, uj / denom);
        }
      }
      if (all_positive) {
        u.setZero();
        for (std::size_t j = 0; j < idx.size(); ++j) {
          u(idx[j]) = s_p(static_cast<Index>(j));
        }
        break;
      }
      Vector s_full = Vector::Zero(n);
      for (std::size_t j = 0; j < idx.size(); ++j) {
        s_full(idx[j]) = s_p(static_cast<Index>(j));
      }
      u += alpha * (s_full - u);
      for (Index i = 0; i < n; ++i) {
        if (passive[i] && u(i) <= 1e-14 * scale) {
          u(i) = 0.0;
          passive[i] = false;
          --passive_count;
        }
      }
      if (passive_count == 0) break;
    }
  }
  return u;
}

namespace {

// Least-distance program: min ||w|| s.t. C w >= b. Returns nullopt when the
// region is empty.
std::optional<Vector> least_distance_point(const Matrix& C, const Vector& b) {
  const Index n = C.cols();
  const Index q = C.rows();
  if (q == 0) return Vector::Zero(n);

  Matrix Emat(n + 1, q);
  Emat.topRows(n) = C.transpose();
  Emat.row(n) = b.transpose();
  Vector f = Vector::Zero(n + 1);
  f(n) = 1.0;

  const Vector u = nnls(Emat, f);
  const Vector r = Emat * u - f;
  if (std::abs(r(n)) < 1e-10) return std::nullopt;
  return Vector(-r.head(n) / r(n));
}

}  // namespace

std::optional<Vector> phase1_feasible_point(const PolyhedralSet& set) {
  const Index n = set.dim();

  Vector z_part = Vector::Zero(n);
  Matrix null_basis = Matrix::Identity(n, n);
  if (set.num_equalities() > 0) {
    z_part = set.E.colPivHouseholderQr().solve(set.d);
    const double res = (set.E * z_part - set.d).cwiseAbs().maxCoeff();
    if (res > kFeasTol * std::max(1.0, set.d.cwiseAbs().maxCoeff())) {
      return std::nullopt;  // inconsistent equalities
    }
    Eigen::FullPivLU<Matrix> lu(set.E);
    null_basis = lu.kernel();
    if (lu.dimensionOfKernel() == 0) {
      null_basis.resize(n, 0);
    }
  }

  Vector z = z_part;
  if (set.num_inequalities() > 0) {
    if (null_basis.cols() == 0) {
      if (!set.contains(z_part, kFeasTol)) return std::nullopt;
      return z_part;
    }
    const Matrix C = -(set.G * null_basis);
    const Vector b = set.G * z_part - set.h;
    const auto w = least_distance_point(C, b);
    if (!w.has_value()) return std::nullopt;
    z = z_part + null_basis * (*w);
  }
  if (!set.contains(z, 1e-7)) return std::nullopt;
  return z;
}

// ---------------------------------------------------------------------------
// Primal active-set loop.
// ---------------------------------------------------------------------------

namespace {

// Equality rows that are linearly independent, kept in ascending order;
// later dependent rows are dropped (their multipliers are reported as 0).
std::vector<Index> independent_equality_rows(const Matrix& E) {
  std::vector<Index> kept;
  if (E.rows() == 0) return kept;
  Matrix stacked(0, E.cols());
  for (Index i = 0; i < E.rows(); ++i) {
    Matrix trial(stacked.rows() + 1, E.cols());
    trial.topRows(stacked.rows()) = stacked;
    trial.row(stacked.rows()) = E.row(i);
    if (numerical_rank(trial) == trial.rows()) {
      stacked = std::move(trial);
      kept.push_back(i);
    }
  }
  return kept;
}

}  // namespace

QPSolution solve_qp(const QPSubproblem& sub, const std::optional<Vector>& hint) {
  const Index n = sub.dim();
  const auto& set = sub.set;
  const Index p = set.num_inequalities();
  const Index e = set.num_equalities();

  {
    Eigen::LLT<Matrix> llt(0.5 * (sub.H + sub.H.transpose()));
    if (n > 0 && llt.info() != Eigen::Success) {
      throw ParameterError("solve_qp: H is not positive definite");
    }
  }

  const std::vector<Index> eq_rows = independent_equality_rows(set.E);
  const Index ek = static_cast<Index>(eq_rows.size());
  Matrix E_red(ek, n);
  for (Index j = 0; j < ek; ++j) E_red.row(j) = set.E.row(eq_rows[j]);

  Vector z;
  if (hint.has_value() && hint->size() == n && set.contains(*hint, kFeasTol)) {
    z = *hint;
  } else {
    auto start = phase1_feasible_point(set);
    if (!start.has_value()) {
      throw InfeasibleError("solve_qp: constraint set is empty");
    }
    z = std::move(*start);
  }

  std::vector<Index> working;  // active inequality rows, ascending
  const int budget = 50 * static_cast<int>(n + p);
  int iter = 0;

  while (true) {
    if (++iter > budget) {
      throw BudgetError("solve_qp: active-set budget exceeded");
    }

    const Index wk = static_cast<Index>(working.size());
    const Index rows = wk + ek;
    Matrix kkt = Matrix::Zero(n + rows, n + rows);
    kkt.topLeftCorner(n, n) = sub.H;
    Matrix act(rows, n);
    for (Index j = 0; j < wk; ++j) act.row(j) = set.G.row(working[j]);
    if (ek > 0) act.bottomRows(ek) = E_red;
    if (rows > 0) {
      kkt.block(0, n, n, rows) = act.transpose();
      kkt.block(n, 0, rows, n) = act;
    }
    Vector rhs(n + rows);
    rhs.head(n) = -(sub.H * z + sub.l);
    rhs.tail(rows).setZero();

    Eigen::FullPivLU<Matrix> lu(kkt);
    if (!lu.isInvertible()) {
      // Linearly dependent working set: drop the newest row and retry.
      if (!working.empty()) {
        working.pop_back();
        continue;
      }
      throw SingularSystemError("solve_qp: singular KKT system");
    }
    const Vector sol = lu.solve(rhs);
    const Vector pstep = sol.head(n);
    const Vector mults = sol.tail(rows);

    const double step_scale = std::max(1.0, z.cwiseAbs().maxCoeff());
    if (pstep.cwiseAbs().maxCoeff() <= kStepTol * step_scale) {
      // Minimizer over the working set; check multiplier signs.
      Index worst = -1;
      double worst_mu = -kMultiplierTol;
      for (Index j = 0; j < wk; ++j) {
        if (mults(j) < worst_mu) {
          worst_mu = mults(j);
          worst = j;
        }
      }
      if (worst < 0) {
        QPSolution out;
        out.z = z;
        out.active = working;
        out.ineq_multipliers = Vector::Zero(p);
        for (Index j = 0; j < wk; ++j) {
          out.ineq_multipliers(working[j]) = std::max(0.0, mults(j));
        }
        out.eq_multipliers = Vector::Zero(e);
        for (Index j = 0; j < ek; ++j) {
          out.eq_multipliers(eq_rows[j]) = mults(wk + j);
        }
        out.iterations = iter;
        return out;
      }
      working.erase(working.begin() + worst);
      continue;
    }

    // Ratio test over inequalities not in the working set; smallest row
    // index wins exact ties (ascending scan keeps the first minimizer).
    double alpha = 1.0;
    Index blocker = -1;
    for (Index i = 0; i < p; ++i) {
      if (std::binary_search(working.begin(), working.end(), i)) continue;
      const double si = set.G.row(i).dot(pstep);
      if (si <= kDirectionTol * step_scale) continue;
      const double slack = std::max(0.0, set.h(i) - set.G.row(i).dot(z));
      const double ratio = slack / si;
      if (ratio < alpha) {
        alpha = ratio;
        blocker = i;
      }
    }

    z += alpha * pstep;
    if (blocker >= 0 && alpha < 1.0) {
      working.insert(
          std::upper_bound(working.begin(), working.end(), blocker), blocker);
    }
  }
}

}  // namespace splitcert
