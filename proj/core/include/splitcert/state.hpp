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

#ifndef SPLITCERT_STATE_HPP_
#define SPLITCERT_STATE_HPP_

#include "splitcert/numerics.hpp"

namespace splitcert {

/// One splitting iterate (x^k, y^k, lambda^k) with its derived residual and
/// objective. x is not an input of the iteration (the x-update depends only
/// on y and lambda); the initial state carries x = 0 for bookkeeping.
struct IterateState {
  int k = 0;
  Vector x;
  Vector y;
  Vector lambda;
  Vector y_prev;   // y^{k-1}; equals y at k = 0
  Vector r;        // Ax + By - c
  double p = 0.0;  // f(x) + g(y)
};

}  // namespace splitcert

#endif  // SPLITCERT_STATE_HPP_
