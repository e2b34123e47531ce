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

#include "splitcert/numerics.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <string>

namespace splitcert {

bool all_finite(const Matrix& m) { return m.allFinite(); }
bool all_finite(const Vector& v) { return v.allFinite(); }

Index numerical_rank(const Matrix& m, double tol) {
  if (m.rows() == 0 || m.cols() == 0) {
    throw DimensionError("numerical_rank: empty matrix");
  }
  if (tol < 0.0) {
    throw ParameterError("numerical_rank: tol must be nonnegative");
  }
  Eigen::JacobiSVD<Matrix> svd(m);
  const auto& sigma = svd.singularValues();
  if (sigma.size() == 0) return 0;
  const double cutoff = tol * sigma(0);
  Index rank = 0;
  for (Index i = 0; i < sigma.size(); ++i) {
    if (sigma(i) > cutoff) ++rank;
  }
  return rank;
}

bool is_psd(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) {
    throw DimensionError("is_psd: matrix is not square (" +
                         std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()) + ")");
  }
  if (m.rows() == 0) return true;
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  const double asym = (m - m.transpose()).cwiseAbs().maxCoeff();
  if (asym > tol * scale) {
    throw SymmetryError("is_psd: asymmetry " + std::to_string(asym) +
                        " exceeds tolerance");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (m + m.transpose()),
                                           Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff() >= -tol;
}

Vector solve_linear(const Matrix& m, const Vector& b) {
  if (m.rows() != m.cols()) {
    throw DimensionError("solve_linear: matrix is not square");
  }
  if (m.rows() != b.size()) {
    throw DimensionError("solve_linear: rhs size does not match");
  }
  if (m.rows() == 0) return Vector(0);
  Eigen::FullPivLU<Matrix> lu(m);
  if (!lu.isInvertible()) {
    throw SingularSystemError("solve_linear: matrix is numerically singular");
  }
  return lu.solve(b);
}

}  // namespace splitcert
