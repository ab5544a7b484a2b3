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

#include <doctest.h>

#include <cmath>

#include "fockdyn/operator_norms.hpp"
#include "oracles.hpp"

using namespace fockdyn;

TEST_SUITE_BEGIN("opnorm");

TEST_CASE("hardy powers have norm exactly 1 with the sup at k=0") {
  for (const SpaceParams& s :
       {SpaceParams{2.0, 0.5, 2.0}, SpaceParams{2.0, 1.0, 1.0}}) {
    for (long n : {1L, 5L, 40L}) {
      const auto r = shift_norm_exact_p2(s, make_hardy(), n);
      CHECK(r.log_norm == 0.0);
      CHECK(r.certified);
      CHECK(r.argmax_k == 0);
    }
  }
}

TEST_CASE("integration operator norm on p=2, m=1, alpha=1") {
  // Entry(k) = sqrt((2k+3)/(2k+2)), sup at k=0: sqrt(3/2) = sqrt(6)/2.
  const SpaceParams s{2.0, 1.0, 1.0};
  const auto r = shift_norm_exact_p2(s, make_integration(), 1);
  CHECK(r.certified);
  CHECK(r.argmax_k == 0);
  CHECK(r.log_norm == doctest::Approx(0.5 * std::log(1.5)).epsilon(1e-12));
}

TEST_CASE("differentiation entries increase to alpha^n") {
  const SpaceParams s{2.0, 0.8, 1.0};
  const auto r1 = shift_norm_exact_p2(s, make_differentiation(), 1);
  CHECK(r1.certified);
  CHECK(std::exp(r1.log_norm) <= 0.8 + 1e-12);
  CHECK(std::exp(r1.log_norm) >= 0.8 * (1.0 - 1e-3));
  const auto r5 = shift_norm_exact_p2(s, make_differentiation(), 5);
  CHECK(std::fabs(r5.log_norm - 5.0 * std::log(0.8)) < 1e-3);
}

TEST_CASE("closed-form oracle for integration powers (sup at k=0)") {
  // ||J^n|| = ||z^n|| / (n! ||1||) on p=2, m=1, alpha=1:
  // log = 0.5 lgamma(2n+2) - n log 2 - lgamma(n+1).
  const SpaceParams s{2.0, 1.0, 1.0};
  MonomialNormCache cache(s);
  for (long n : {1L, 4L, 12L}) {
    const auto r = shift_norm_exact_p2(s, make_integration(), n, {}, &cache);
    const double oracle = 0.5 * (std::lgamma(2.0 * n + 2.0) -
                                 n * std::log(4.0)) -
                          std::lgamma(n + 1.0);
    CHECK(r.log_norm == doctest::Approx(oracle).epsilon(1e-12));
    CHECK(r.argmax_k == 0);
  }
}

TEST_CASE("shift_norm rejections") {
  const SpaceParams s{2.0, 1.0, 1.0};
  CHECK_THROWS_AS((shift_norm_exact_p2({4.0, 1.0, 1.0}, make_hardy(), 1)),
                  std::invalid_argument);
  const auto V = make_volterra(
      SymbolPolynomial({cplx(0.0), cplx(1.0), cplx(1.0)}));
  CHECK_THROWS_AS(shift_norm_exact_p2(s, V, 1), std::invalid_argument);
}

TEST_CASE("power iteration matches the exact shift norm") {
  const SpaceParams s{2.0, 1.0, 1.0};
  const auto hardy = operator_norm_p2(s, make_hardy(), 200);
  CHECK(hardy.converged);
  CHECK(hardy.value == doctest::Approx(1.0).epsilon(1e-9));

  const auto j_exact = shift_norm_exact_p2(s, make_integration(), 1);
  const auto j_section = operator_norm_p2(s, make_integration(), 200);
  CHECK(j_section.converged);
  CHECK(j_section.value ==
        doctest::Approx(std::exp(j_exact.log_norm)).epsilon(1e-8));
}

TEST_CASE("multi-term norm dominates its single terms and test vectors") {
  const SpaceParams s{2.0, 1.0, 2.0};
  const auto Vg = make_volterra(
      SymbolPolynomial({cplx(0.0), cplx(1.0), cplx(1.0)}));  // g = z + z^2
  const auto norm = operator_norm_p2(s, Vg, 220);
  REQUIRE(norm.converged);

  const auto V1 = make_volterra(SymbolPolynomial({cplx(0.0), cplx(1.0)}));
  const auto V2 = make_volterra(SymbolPolynomial({cplx(0.0), cplx(0.0), cplx(1.0)}));
  for (const auto* op : {&V1, &V2}) {
    const auto single = shift_norm_exact_p2(s, *op, 1);
    CHECK(norm.value >= std::exp(single.log_norm) * (1.0 - 1e-9));
  }

  std::vector<TaylorSeries> testset;
  for (long k = 0; k <= 40; ++k) testset.push_back(TaylorSeries::monomial(k));
  const auto lower = operator_norm_lower(s, Vg, testset);
  CHECK(norm.value >= lower.value * (1.0 - 1e-9));
}

TEST_CASE("volterra power ratios approach (|a|/alpha)^n at high index") {
  // The orthonormal-basis entry of V_{a z}^n at column k tends to
  // (|a|/alpha)^n from above as k grows; the low-k entries carry the extra
  // n^{1/4}-type factor that makes the norm larger.
  const SpaceParams s{2.0, 1.0, 1.0};
  MonomialNormCache cache(s);
  const cplx a(0.9, 0.0);
  const long n = 6;
  auto entry_log = [&](long k) {
    const auto closed = volterra_monomial_iterate_closed(a, 1, n, k);
    return closed.log_abs + cache.log_norm(k + n) - cache.log_norm(k);
  };
  const double limit_log = n * std::log(0.9);
  CHECK(entry_log(0) > limit_log);  // norm exceeds the limit value
  double prev = entry_log(100);
  for (long k : {400L, 1600L, 6400L}) {
    const double cur = entry_log(k);
    CHECK(cur <= prev + 1e-12);  // settling downward
    prev = cur;
  }
  CHECK(std::fabs(entry_log(6400) - limit_log) < 0.01);
}

TEST_CASE("operator_norm_lower basics") {
  const SpaceParams s{2.0, 1.0, 1.0};
  const auto H = make_hardy();
  const auto r = operator_norm_lower(s, H, {TaylorSeries::monomial(0)});
  CHECK(r.value == doctest::Approx(1.0).epsilon(1e-14));

  // ||J 1|| / ||1|| = ||z|| / ||1|| = sqrt(3/2).
  const auto J = make_integration();
  const auto rj = operator_norm_lower(s, J, {TaylorSeries::monomial(0)});
  CHECK(rj.value == doctest::Approx(std::sqrt(1.5)).epsilon(1e-13));
}

TEST_CASE("coordinate operator matches coefficient-space action") {
  const SpaceParams s{2.0, 1.0, 1.0};
  MonomialNormCache cache(s);
  const auto J = make_integration();
  CoordOperator coord(s, J, 64, &cache);
  // J e_3 = (1/4) ||z^4||/||z^3|| e_4.
  std::vector<cplx> e(8, cplx(0.0));
  e[3] = cplx(1.0);
  const auto y = coord.apply(e);
  const double want =
      0.25 * std::exp(cache.log_norm(4) - cache.log_norm(3));
  CHECK(std::abs(y[4] - cplx(want)) < 1e-15);
  for (std::size_t i = 0; i < y.size(); ++i)
    if (i != 4) CHECK(std::abs(y[i]) == 0.0);
}

TEST_SUITE_END();
