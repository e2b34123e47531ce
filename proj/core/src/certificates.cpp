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

#include "splitcert/certificates.hpp"

#include <cmath>
#include <limits>

namespace splitcert {

double lyapunov_at(const SplitProblem& prob, double rho,
                   const IterateState& state, const Vector& y_ref,
                   const Vector& lambda_ref) {
  if (rho <= 0.0) throw ParameterError("lyapunov: rho must be > 0");
  if (state.lambda.size() != lambda_ref.size() ||
      state.y.size() != y_ref.size()) {
    throw DimensionError("lyapunov: reference dimension mismatch");
  }
  const double dual_term = (state.lambda - lambda_ref).squaredNorm() / rho;
  const double primal_term = rho * (prob.B * (state.y - y_ref)).squaredNorm();
  return dual_term + primal_term;
}

double lyapunov(const SplitProblem& prob, double rho, const IterateState& state,
                const ReferenceSolution& ref) {
  return lyapunov_at(prob, rho, state, ref.y_star, ref.lambda_star);
}

double check_lyapunov_descent(const SplitProblem& prob, double rho,
                              const IterateState& prev,
                              const IterateState& next,
                              const ReferenceSolution& ref) {
  const double v_prev = lyapunov(prob, rho, prev, ref);
  const double v_next = lyapunov(prob, rho, next, ref);
  const double r_term = rho * next.r.squaredNorm();
  const double dy_term = rho * (prob.B * (next.y - prev.y)).squaredNorm();
  return v_prev - v_next - r_term - dy_term;
}

double check_gap_lower(const IterateState& next, const ReferenceSolution& ref) {
  return ref.lambda_star.dot(next.r) - (ref.p_star - next.p);
}

double check_gap_upper(const SplitProblem& prob, double rho,
                       const IterateState& prev, const IterateState& next,
                       const ReferenceSolution& ref) {
  const Vector b_dy = prob.B * (next.y - prev.y);
  const Vector b_dev = prob.B * (next.y - ref.y_star);
  const double rhs =
      -next.lambda.dot(next.r) - rho * b_dy.dot(b_dev - next.r);
  const double lhs = next.p - ref.p_star;
  return rhs - lhs;
}

double check_inner_product(const SplitProblem& prob, const IterateState& prev,
                           const IterateState& next) {
  return (prob.B * (next.y - prev.y)).dot(next.r);
}

Vector hat_lambda(const SplitProblem& prob, double rho,
                  const IterateState& state) {
  return state.lambda - rho * (prob.B * (state.y - state.y_prev));
}

std::pair<double, double> check_dual_attainment(const SplitProblem& prob,
                                                const IterateState& state,
                                                const Vector& hat) {
  const DualValue f_dual = dual_value_f(prob, hat);
  const DualValue g_dual = dual_value_g(prob, state.lambda);
  if (!f_dual.bounded || !g_dual.bounded) {
    throw ParameterError(
        "check_dual_attainment: partial dual function unbounded at iterate");
  }
  const double f_attained =
      prob.f.value(state.x) + hat.dot(prob.A * state.x);
  const double g_attained =
      prob.g.value(state.y) + state.lambda.dot(prob.B * state.y);
  return {f_attained - f_dual.value, g_attained - g_dual.value};
}

double dual_gap(const SplitProblem& prob, const Vector& hat,
                const Vector& lambda, const ReferenceSolution& ref) {
  const DualValue f_dual = dual_value_f(prob, hat);
  const DualValue g_dual = dual_value_g(prob, lambda);
  if (!f_dual.bounded || !g_dual.bounded) {
    return std::numeric_limits<double>::infinity();
  }
  const double dual_value = f_dual.value + g_dual.value - lambda.dot(prob.c);
  return ref.p_star - dual_value;
}

CertificateRecord make_certificate_record(const SplitProblem& prob, double rho,
                                          const IterateState& prev,
                                          const IterateState& next, bool full,
                                          const ReferenceSolution* ref) {
  CertificateRecord rec;
  rec.k = next.k;
  rec.r_norm = next.r.norm();
  rec.p_k = next.p;
  rec.dual_residual = rho * (prob.B * (next.y - prev.y)).norm();
  rec.inner_product = check_inner_product(prob, prev, next);
  rec.hat_lambda = hat_lambda(prob, rho, next);
  rec.certified_transition = prev.k >= 1;

  if (full && ref != nullptr) {
    rec.V_k = lyapunov(prob, rho, next, *ref);
    rec.ineq1_slack = check_gap_lower(next, *ref);
    rec.ineq2_slack = check_gap_upper(prob, rho, prev, next, *ref);
    rec.lyapunov_descent_slack =
        check_lyapunov_descent(prob, rho, prev, next, *ref);
    const DualValue f_dual = dual_value_f(prob, rec.hat_lambda);
    const DualValue g_dual = dual_value_g(prob, next.lambda);
    if (f_dual.bounded && g_dual.bounded) {
      const double dv =
          f_dual.value + g_dual.value - next.lambda.dot(prob.c);
      rec.dual_value = dv;
      rec.dual_gap = ref->p_star - dv;
    }
  }
  return rec;
}

std::vector<double> self_referential_lyapunov(
    const SplitProblem& prob, double rho,
    const std::vector<IterateState>& states) {
  std::vector<double> out;
  out.reserve(states.size());
  if (states.empty()) return out;
  const IterateState& last = states.back();
  for (const auto& s : states) {
    out.push_back(lyapunov_at(prob, rho, s, last.y, last.lambda));
  }
  return out;
}

}  // namespace splitcert
