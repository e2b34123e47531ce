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

#ifndef SPLITCERT_GENERATOR_HPP_
#define SPLITCERT_GENERATOR_HPP_

#include <cstdint>

#include "splitcert/problem.hpp"
#include "splitcert/subsolver.hpp"

namespace splitcert {

/// Seeded random solvable instances: positive definite quadratics,
/// full-column-rank A and B (random matrix plus rank repair), and constraint
/// sets built around a sampled feasible anchor so they are nonempty by
/// construction. c = A x0 + B y0 for the sampled anchor, so assumption
/// "solvable" holds by construction. Deterministic per seed.
struct RandomSplitSpec {
  Index m = 2;
  Index n1 = 2;
  Index n2 = 2;
  Index ineq_per_set = 4;   // random halfspaces through the anchor's margin
  Index eq_per_set = 0;
  bool rank_deficient_b = false;  // duplicate a column of B (needs n2 >= 2)
  std::uint64_t seed = 1;
};

SplitProblem generate_random_split(const RandomSplitSpec& spec);

/// Sizes drawn at random (full-column-rank feasible: n1, n2 <= m <= 4,
/// up to 6 inequalities per set, occasionally one equality row).
SplitProblem generate_random_split_sized(std::uint64_t seed);

struct ConsensusSpec {
  Index agents = 2;
  Index dim = 2;
  Index ineq_per_set = 2;
  std::uint64_t seed = 1;
};

SplitProblem generate_consensus(const ConsensusSpec& spec);

/// Random strictly convex polyhedral QP with a nonempty set.
QPSubproblem generate_random_qp(Index n, Index ineq, Index eq,
                                std::uint64_t seed);

}  // namespace splitcert

#endif  // SPLITCERT_GENERATOR_HPP_
