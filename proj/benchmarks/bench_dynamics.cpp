/*
   Copyright 2026 the fockdyn authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <benchmark/benchmark.h>

#include "fockdyn/dynamics.hpp"

using namespace fockdyn;

static void BM_ShiftNormExact(benchmark::State& state) {
  const SpaceParams s{2.0, 1.0, 1.0};
  const auto J = make_integration();
  MonomialNormCache cache(s);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        shift_norm_exact_p2(s, J, state.range(0), {}, &cache).log_norm);
}
BENCHMARK(BM_ShiftNormExact)->Arg(1)->Arg(10)->Arg(50);

static void BM_OperatorNormPowerIteration(benchmark::State& state) {
  const SpaceParams s{2.0, 1.0, 2.0};
  const auto V = make_volterra(
      SymbolPolynomial({cplx(0.0), cplx(1.0), cplx(0.5)}));
  for (auto _ : state)
    benchmark::DoNotOptimize(operator_norm_p2(s, V, state.range(0)).value);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_OperatorNormPowerIteration)->Arg(64)->Arg(128)->Arg(256)->Complexity();

static void BM_CesaroReport(benchmark::State& state) {
  const SpaceParams s{2.0, 0.5, 2.0};
  ProbeConfig cfg;
  cfg.trunc_dim = 64;
  for (auto _ : state)
    benchmark::DoNotOptimize(
        cesaro_report(s, make_hardy(), state.range(0), cfg).residuals.size());
}
BENCHMARK(BM_CesaroReport)->Arg(32)->Arg(64);

static void BM_RittDiagonal(benchmark::State& state) {
  const SpaceParams s{2.0, 0.5, 2.0};
  for (auto _ : state)
    benchmark::DoNotOptimize(
        ritt_sequence(s, make_hardy(), state.range(0)).sup_estimate);
}
BENCHMARK(BM_RittDiagonal)->Arg(25)->Arg(100);

static void BM_TrichotomySequence(benchmark::State& state) {
  const SpaceParams s{2.0, 1.0, 1.0};
  for (auto _ : state)
    benchmark::DoNotOptimize(d_hypercyclicity_sequence(s, 400).tail_slope);
}
BENCHMARK(BM_TrichotomySequence);

BENCHMARK_MAIN();
