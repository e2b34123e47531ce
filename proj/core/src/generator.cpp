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

#include "splitcert/generator.hpp"

#include <cmath>
#include <random>
#include <tuple>
#include <utility>
#include <vector>

#include "splitcert/oracle.hpp"

namespace splitcert {

namespace {

Matrix gaussian_matrix(std::mt19937_64& rng, Index rows, Index cols) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix m(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    for (Index j = 0; j < cols; ++j) m(i, j) = normal(rng);
  }
  return m;
}

Vector gaussian_vector(std::mt19937_64& rng, Index n) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Vector v(n);
  for (Index i = 0; i < n; ++i) v(i) = normal(rng);
  return v;
}

// Positive definite with spectrum in [1, 4]; wilder spectra combined with a
// small penalty parameter push the iteration count past any fixed budget.
Matrix random_pd(std::mt19937_64& rng, Index n) {
  const Matrix r = gaussian_matrix(rng, n, n);
  Matrix gram = r.transpose() * r;
  const double top = gram.eigenvalues().real().maxCoeff();
  if (top > 1e-12) gram *= 3.0 / top;
  return gram + Matrix::Identity(n, n);
}

// Rank repair: floor the singular values so the matrix keeps full rank with
// a bounded condition number.
Matrix svd_floor(const Matrix& m, double rel_floor) {
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  Vector sigma = svd.singularValues();
  const double floor = rel_floor * std::max(sigma(0), 1.0);
  for (Index i = 0; i < sigma.size(); ++i) sigma(i) = std::max(sigma(i), floor);
  return svd.matrixU() * sigma.asDiagonal() * svd.matrixV().transpose();
}

// Coupling pair (A, B). Three things decide how fast the splitting
// iteration moves: the conditioning of each block (full column rank with
// entries of order one) and the conditioning of the stacked [A B] (a
// near-singular stack makes the ranges of A and B nearly aligned, which
// slows the iteration arbitrarily even when each block looks fine).
std::pair<Matrix, Matrix> coupling_pair(std::mt19937_64& rng, Index m,
                                        Index n1, Index n2) {
  for (int attempt = 0; attempt < 256; ++attempt) {
    const Matrix stacked = svd_floor(gaussian_matrix(rng, m, n1 + n2), 0.35);
    Matrix A = svd_floor(stacked.leftCols(n1), 0.55);
    Matrix B = svd_floor(stacked.rightCols(n2), 0.55);
    Matrix repaired(m, n1 + n2);
    repaired << A, B;
    Eigen::JacobiSVD<Matrix> svd(repaired);
    const auto& sigma = svd.singularValues();
    if (sigma.tail(1)(0) >= 0.3 * std::max(sigma(0), 1.0)) {
      return {std::move(A), std::move(B)};
    }
  }
  throw Error("coupling_pair: resampling failed");
}

// Halfspaces g'z <= g'anchor + margin (anchor strictly inside) plus
// optional equalities through the anchor.
PolyhedralSet set_around(std::mt19937_64& rng, const Vector& anchor,
                         Index ineq, Index eq) {
  const Index n = anchor.size();
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix G(ineq, n);
  Vector h(ineq);
  for (Index i = 0; i < ineq; ++i) {
    Vector g = gaussian_vector(rng, n);
    const double norm = g.norm();
    if (norm > 1e-12) g /= norm;
    const double margin = 0.1 + std::abs(normal(rng));
    G.row(i) = g.transpose();
    h(i) = g.dot(anchor) + margin;
  }
  Matrix E = gaussian_matrix(rng, eq, n);
  Vector d = eq > 0 ? Vector(E * anchor) : Vector(0);
  return PolyhedralSet(std::move(G), std::move(h), std::move(E), std::move(d),
                       n);
}

// Tangent basis of the face of the set active at z (kernel of the active
// rows); identity when nothing is active.
Matrix face_tangent(const PolyhedralSet& set, const Vector& z) {
  std::vector<Index> active;
  for (Index i = 0; i < set.num_inequalities(); ++i) {
    if (set.h(i) - set.G.row(i).dot(z) < 1e-7) active.push_back(i);
  }
  const Index rows = static_cast<Index>(active.size()) + set.num_equalities();
  if (rows == 0) return Matrix::Identity(set.dim(), set.dim());
  Matrix act(rows, set.dim());
  for (std::size_t j = 0; j < active.size(); ++j) {
    act.row(static_cast<Index>(j)) = set.G.row(active[j]);
  }
  if (set.num_equalities() > 0) act.bottomRows(set.num_equalities()) = set.E;
  Eigen::FullPivLU<Matrix> lu(act);
  if (lu.dimensionOfKernel() == 0) return Matrix(set.dim(), 0);
  return lu.kernel();
}

// The tail of the iteration is governed by the solution's geometry: its
// rate by the coupling restricted to the active faces (near-singular
// restrictions are arbitrarily slow) and its length by the size of the
// optimal multiplier the dual ascent has to crawl to. Instances within
// oracle capacity are filtered on both.
bool well_conditioned_at_solution(const SplitProblem& prob) {
  const Index total_ineq =
      prob.X.num_inequalities() + prob.Y.num_inequalities();
  if (total_ineq > kBruteforceMaxInequalities ||
      prob.n1() + prob.n2() + prob.m() > kBruteforceMaxVariables) {
    return true;  // out of probe range; accept as-is
  }
  ReferenceSolution ref;
  try {
    ref = solve_split_bruteforce(prob);
  } catch (const Error&) {
    return true;
  }
  if (ref.lambda_star.cwiseAbs().maxCoeff() > 12.0) return false;

  const Matrix tx = face_tangent(prob.X, ref.x_star);
  const Matrix ty = face_tangent(prob.Y, ref.y_star);
  if (tx.cols() + ty.cols() == 0) return true;
  Matrix restricted(prob.m(), tx.cols() + ty.cols());
  if (tx.cols() > 0) restricted.leftCols(tx.cols()) = prob.A * tx;
  if (ty.cols() > 0) restricted.rightCols(ty.cols()) = prob.B * ty;
  // Tangent bases are not orthonormal; normalize columns before reading
  // singular values.
  for (Index j = 0; j < restricted.cols(); ++j) {
    const double norm = restricted.col(j).norm();
    if (norm > 1e-12) restricted.col(j) /= norm;
  }
  Eigen::JacobiSVD<Matrix> svd(restricted);
  const auto& sigma = svd.singularValues();
  return sigma.tail(1)(0) >= 0.35 * std::max(sigma(0), 1.0);
}

}  // namespace

SplitProblem generate_random_split(const RandomSplitSpec& spec) {
  if (spec.m < 1 || spec.n1 < 1 || spec.n2 < 1) {
    throw ParameterError("generate_random_split: sizes must be positive");
  }
  if (!spec.rank_deficient_b && (spec.n1 > spec.m || spec.n2 > spec.m)) {
    throw ParameterError(
        "generate_random_split: full column-rank needs n1, n2 <= m");
  }
  if (spec.rank_deficient_b && spec.n2 < 2) {
    throw ParameterError("generate_random_split: rank-deficient B needs n2 >= 2");
  }
  std::mt19937_64 rng(spec.seed);

  // Linear terms of order one; much stronger pulls blow up the optimal
  // multipliers and with them the dual-accumulation phase at small rho.
  QuadraticFunction f(random_pd(rng, spec.n1),
                      0.8 * gaussian_vector(rng, spec.n1), 0.0);
  QuadraticFunction g(random_pd(rng, spec.n2),
                      0.8 * gaussian_vector(rng, spec.n2), 0.0);

  for (int attempt = 0; attempt < 64; ++attempt) {
    Matrix A, B;
    if (spec.rank_deficient_b) {
      auto [A_ok, B_thin] = coupling_pair(rng, spec.m, spec.n1, spec.n2 - 1);
      A = std::move(A_ok);
      B = std::move(B_thin);
      B.conservativeResize(Eigen::NoChange, spec.n2);
      B.col(spec.n2 - 1) = B.col(0);  // duplicated column: rank < n2
    } else {
      std::tie(A, B) = coupling_pair(rng, spec.m, spec.n1, spec.n2);
    }

    const Vector x0 = gaussian_vector(rng, spec.n1);
    const Vector y0 = gaussian_vector(rng, spec.n2);
    PolyhedralSet X = set_around(rng, x0, spec.ineq_per_set, spec.eq_per_set);
    PolyhedralSet Y = set_around(rng, y0, spec.ineq_per_set, spec.eq_per_set);
    Vector c = A * x0 + B * y0;

    SplitProblem prob(f, g, std::move(A), std::move(B), std::move(c),
                      std::move(X), std::move(Y));
    // The duplicated column makes the restricted coupling singular by
    // construction; its thin pair was already conditioned above.
    if (spec.rank_deficient_b || well_conditioned_at_solution(prob)) {
      return prob;
    }
  }
  throw Error("generate_random_split: resampling failed");
}

SplitProblem generate_random_split_sized(std::uint64_t seed) {
  std::mt19937_64 size_rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::uniform_int_distribution<int> m_dist(1, 4);
  RandomSplitSpec spec;
  spec.m = m_dist(size_rng);
  spec.n1 = std::uniform_int_distribution<int>(1, static_cast<int>(spec.m))(
      size_rng);
  spec.n2 = std::uniform_int_distribution<int>(1, static_cast<int>(spec.m))(
      size_rng);
  spec.ineq_per_set = std::uniform_int_distribution<int>(0, 6)(size_rng);
  spec.eq_per_set = 0;  // halfspaces only; equality rows are opt-in
  spec.seed = seed;
  return generate_random_split(spec);
}

SplitProblem generate_consensus(const ConsensusSpec& spec) {
  if (spec.agents < 1 || spec.dim < 1) {
    throw ParameterError("generate_consensus: sizes must be positive");
  }
  std::mt19937_64 rng(spec.seed);
  const Vector anchor = gaussian_vector(rng, spec.dim);
  std::vector<QuadraticFunction> fs;
  std::vector<PolyhedralSet> sets;
  fs.reserve(spec.agents);
  sets.reserve(spec.agents);
  for (Index i = 0; i < spec.agents; ++i) {
    fs.emplace_back(random_pd(rng, spec.dim), gaussian_vector(rng, spec.dim),
                    0.0);
    sets.push_back(set_around(rng, anchor, spec.ineq_per_set, 0));
  }
  return build_consensus(fs, sets);
}

QPSubproblem generate_random_qp(Index n, Index ineq, Index eq,
                                std::uint64_t seed) {
  if (n < 1) throw ParameterError("generate_random_qp: n must be positive");
  std::mt19937_64 rng(seed);
  Matrix H = random_pd(rng, n);
  Vector l = 2.0 * gaussian_vector(rng, n);
  const Vector anchor = gaussian_vector(rng, n);
  const Index eq_eff = eq >= n ? n - 1 : eq;
  PolyhedralSet set = set_around(rng, anchor, ineq, eq_eff);
  return QPSubproblem(std::move(H), std::move(l), std::move(set));
}

}  // namespace splitcert
