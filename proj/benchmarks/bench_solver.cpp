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

#include <benchmark/benchmark.h>

#include "splitcert/engine.hpp"
#include "splitcert/generator.hpp"
#include "splitcert/oracle.hpp"

namespace {

using namespace splitcert;

void BM_SolveQp(benchmark::State& state) {
  const QPSubproblem sub = generate_random_qp(
      static_cast<Index>(state.range(0)), 6, 0, 12345);
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_qp(sub));
  }
}
BENCHMARK(BM_SolveQp)->Arg(2)->Arg(4)->Arg(8);

void BM_SolveQpBruteforce(benchmark::State& state) {
  const QPSubproblem sub = generate_random_qp(
      4, static_cast<Index>(state.range(0)), 0, 999);
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_qp_bruteforce(sub));
  }
}
BENCHMARK(BM_SolveQpBruteforce)->Arg(4)->Arg(8)->Arg(12);

void BM_EngineStep(benchmark::State& state) {
  const SplitProblem prob = generate_random_split_sized(7);
  SolverConfig cfg;
  const IterateState s0 = make_initial_state(prob);
  for (auto _ : state) {
    benchmark::DoNotOptimize(step(prob, cfg, s0));
  }
}
BENCHMARK(BM_EngineStep);

void BM_SolveToConvergence(benchmark::State& state) {
  const SplitProblem prob = generate_random_split_sized(7);
  SolverConfig cfg;
  cfg.certificate_mode = CertificateMode::kOff;
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve(prob, cfg));
  }
}
BENCHMARK(BM_SolveToConvergence);

void BM_SolveWithFullCertificates(benchmark::State& state) {
  const SplitProblem prob = generate_random_split_sized(7);
  const ReferenceSolution ref = solve_split_bruteforce(prob);
  SolverConfig cfg;
  cfg.certificate_mode = CertificateMode::kFull;
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve(prob, cfg, std::nullopt, &ref));
  }
}
BENCHMARK(BM_SolveWithFullCertificates);

void BM_OracleSplit(benchmark::State& state) {
  const SplitProblem prob = generate_random_split_sized(7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_split_bruteforce(prob));
  }
}
BENCHMARK(BM_OracleSplit);

}  // namespace

BENCHMARK_MAIN();
