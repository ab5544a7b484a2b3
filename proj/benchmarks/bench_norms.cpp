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

#include <random>

#include "fockdyn/norms.hpp"

using namespace fockdyn;

namespace {

TaylorSeries random_series(long degree) {
  std::mt19937 rng(99);
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<cplx> c(static_cast<std::size_t>(degree) + 1);
  for (auto& a : c) a = cplx(g(rng), g(rng));
  return TaylorSeries(std::move(c));
}

}  // namespace

static void BM_MonomialNormLog(benchmark::State& state) {
  const SpaceParams s{2.0, 1.0, 1.0};
  long n = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(monomial_norm_log(s, n % 500));
    ++n;
  }
}
BENCHMARK(BM_MonomialNormLog);

static void BM_NormQuadratureMonomial(benchmark::State& state) {
  const SpaceParams s{2.0, 1.0, 1.0};
  const TaylorSeries f = TaylorSeries::monomial(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(norm_quadrature_log(s, f));
}
BENCHMARK(BM_NormQuadratureMonomial)->Arg(5)->Arg(20)->Arg(60);

static void BM_NormQuadratureDense(benchmark::State& state) {
  const SpaceParams s{2.0, 1.0, 1.0};
  const TaylorSeries f = random_series(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(norm_quadrature_log(s, f));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_NormQuadratureDense)->Arg(8)->Arg(16)->Arg(32)->Complexity();

static void BM_NormParseval(benchmark::State& state) {
  const SpaceParams s{2.0, 1.0, 1.0};
  const TaylorSeries f = random_series(64);
  for (auto _ : state)
    benchmark::DoNotOptimize(norm_parseval_log(s, f));
}
BENCHMARK(BM_NormParseval);

static void BM_SupNormGrid(benchmark::State& state) {
  const SpaceParams s{SpaceParams::infinite_p, 1.0, 1.0};
  const TaylorSeries f = random_series(15);
  for (auto _ : state)
    benchmark::DoNotOptimize(norm_sup(s, f).value);
}
BENCHMARK(BM_SupNormGrid);

BENCHMARK_MAIN();
