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

#ifndef SPLITCERT_NUMERICS_HPP_
#define SPLITCERT_NUMERICS_HPP_

#include <Eigen/Dense>

#include "splitcert/errors.hpp"

namespace splitcert {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Relative tolerance for rank decisions (singular values below
/// kRankTol * sigma_max count as zero).
inline constexpr double kRankTol = 1e-10;

/// Absolute tolerance on the smallest eigenvalue in PSD checks.
inline constexpr double kPsdTol = 1e-10;

/// Absolute tolerance for polyhedral membership tests.
inline constexpr double kMembershipTol = 1e-8;

/// True iff every entry of m is finite (no NaN/Inf).
bool all_finite(const Matrix& m);
bool all_finite(const Vector& v);

/// Number of singular values of m exceeding tol * sigma_max.
/// Deterministic for fixed input. Throws DimensionError on an empty matrix.
Index numerical_rank(const Matrix& m, double tol = kRankTol);

/// True iff m is symmetric (to tol, relative to its magnitude) with minimum
/// eigenvalue >= -tol. Throws DimensionError if m is not square and
/// SymmetryError if the asymmetry exceeds tolerance.
bool is_psd(const Matrix& m, double tol = kPsdTol);

/// Solves m z = b for square m. Throws DimensionError on shape mismatch and
/// SingularSystemError when m is numerically rank-deficient.
Vector solve_linear(const Matrix& m, const Vector& b);

}  // namespace splitcert

#endif  // SPLITCERT_NUMERICS_HPP_
