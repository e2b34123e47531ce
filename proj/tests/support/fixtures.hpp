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

#ifndef SPLITCERT_TESTS_SUPPORT_FIXTURES_HPP_
#define SPLITCERT_TESTS_SUPPORT_FIXTURES_HPP_

#include "splitcert/problem.hpp"

namespace splitcert::testing {

// Canonical scalar instance: f = (x-1)^2, g = (y-2)^2, constraint x = y,
// free sets. Solution (1.5, 1.5), multiplier -1, optimal value 0.5.
inline SplitProblem make_p1() {
  Matrix Pf(1, 1), Pg(1, 1), A(1, 1), B(1, 1);
  Pf << 2.0;
  Pg << 2.0;
  A << 1.0;
  B << -1.0;
  Vector qf(1), qg(1), c(1);
  qf << -2.0;
  qg << -4.0;
  c << 0.0;
  return SplitProblem(QuadraticFunction(Pf, qf, 1.0),
                      QuadraticFunction(Pg, qg, 4.0), A, B, c,
                      PolyhedralSet::free(1), PolyhedralSet::free(1));
}

// P1 with X = {x <= 1}. Solution x = y = 1, multiplier -2, value 1.
inline SplitProblem make_p2() {
  SplitProblem p1 = make_p1();
  Matrix G(1, 1);
  G << 1.0;
  Vector h(1);
  h << 1.0;
  return SplitProblem(p1.f, p1.g, p1.A, p1.B, p1.c,
                      PolyhedralSet(G, h, Matrix(0, 1), Vector(0), 1),
                      PolyhedralSet::free(1));
}

}  // namespace splitcert::testing

#endif  // SPLITCERT_TESTS_SUPPORT_FIXTURES_HPP_
