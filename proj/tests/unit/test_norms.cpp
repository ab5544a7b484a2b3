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
#include <numbers>
#include <random>

#include "fockdyn/norms.hpp"
#include "oracles.hpp"

using namespace fockdyn;
constexpr double kInf = SpaceParams::infinite_p;

TEST_SUITE_BEGIN("norms");

TEST_CASE("integral mean: circle identities") {
  const TaylorSeries one = TaylorSeries::monomial(0);
  CHECK(integral_mean(one, 3.7, 2.0) == doctest::Approx(1.0).epsilon(1e-15));
  const TaylorSeries z = TaylorSeries::monomial(1);
  CHECK(integral_mean(z, 2.0, 2.0) == doctest::Approx(2.0).epsilon(1e-15));
  const TaylorSeries onez({cplx(1.0), cplx(1.0)});
  CHECK(integral_mean(onez, 1.0, 2.0) ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
}

TEST_CASE("integral mean: p=2 grid equals Parseval on the circle") {
  std::mt19937 rng(11);
  const TaylorSeries f = test::random_series(rng, 12);
  for (double r : {0.4, 1.0, 2.7}) {
    double parseval = 0.0;
    for (long k = 0; k <= f.degree(); ++k)
      parseval += std::norm(f.coeff(k)) * std::pow(r, 2.0 * k);
    CHECK(integral_mean(f, r, 2.0) ==
          doctest::Approx(std::sqrt(parseval)).epsilon(1e-13));
  }
}

TEST_CASE("integral mean: rejections") {
  const TaylorSeries f({cplx(1.0), cplx(1.0), cplx(1.0)});
  CHECK_THROWS_AS(integral_mean(f, -1.0, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(integral_mean(f, 1.0, 2.0, 4), std::invalid_argument);
  CHECK_NOTHROW(integral_mean(f, 1.0, 2.0, 6));
}

TEST_CASE("norm_quadrature: monomials against the closed Gamma form") {
  for (double p : {1.0, 2.0, 4.0})
    for (double m : {0.5, 1.0, 2.0})
      for (double alpha : {0.5, 1.0, 2.0})
        for (long n : {0L, 1L, 5L, 17L, 40L}) {
          const SpaceParams s{p, alpha, m};
          const double quad =
              norm_quadrature_log(s, TaylorSeries::monomial(n));
          const double closed = monomial_norm_log(s, n);
          CHECK_MESSAGE(std::fabs(std::expm1(quad - closed)) <= 1e-8, "p=", p,
                        " m=", m, " alpha=", alpha, " n=", n);
        }
}

TEST_CASE("norm_quadrature: pinned example values") {
  // ||z^3|| = sqrt(6 pi) on the classical space.
  const SpaceParams fock{2.0, 0.5, 2.0};
  CHECK(norm_quadrature(fock, TaylorSeries::monomial(3)) ==
        doctest::Approx(std::sqrt(6.0 * std::numbers::pi)).epsilon(1e-9));
  // ||1|| = 2 pi on p=1, m=1, alpha=1.
  const SpaceParams s11{1.0, 1.0, 1.0};
  CHECK(norm_quadrature(s11, TaylorSeries::monomial(0)) ==
        doctest::Approx(2.0 * std::numbers::pi).epsilon(1e-9));
}

TEST_CASE("norm_quadrature equals norm_parseval at p=2 on random polynomials") {
  std::mt19937 rng(23);
  for (const SpaceParams& s :
       {SpaceParams{2.0, 1.0, 1.0}, SpaceParams{2.0, 0.5, 2.0},
        SpaceParams{2.0, 2.0, 0.5}}) {
    for (int trial = 0; trial < 4; ++trial) {
      const TaylorSeries f = test::random_series(rng, 40);
      const double q = norm_quadrature_log(s, f);
      const double pv = norm_parseval_log(s, f);
      CHECK(std::fabs(std::expm1(q - pv)) <= 1e-8);
    }
  }
}

TEST_CASE("norm_parseval: basics and homogeneity") {
  const SpaceParams fock{2.0, 0.5, 2.0};
  CHECK(norm_parseval(fock, TaylorSeries{}) == 0.0);
  // ||1 + z||^2 = pi + pi = 2 pi.
  const TaylorSeries onez({cplx(1.0), cplx(1.0)});
  CHECK(norm_parseval(fock, onez) ==
        doctest::Approx(std::sqrt(2.0 * std::numbers::pi)).epsilon(1e-13));
  CHECK_THROWS_AS((norm_parseval({4.0, 0.5, 2.0}, onez)), std::invalid_argument);

  std::mt19937 rng(5);
  const TaylorSeries f = test::random_series(rng, 25);
  const cplx c(1.75, -0.5);
  CHECK(norm_parseval(fock, f.scaled(c)) ==
        doctest::Approx(std::abs(c) * norm_parseval(fock, f)).epsilon(1e-13));
}

TEST_CASE("homogeneity of the quadrature route") {
  const SpaceParams s{3.0, 1.0, 1.0};
  std::mt19937 rng(7);
  const TaylorSeries f = test::random_series(rng, 10);
  const cplx c(0.0, -2.5);
  const double a = norm_quadrature_log(s, f.scaled(c));
  const double b = std::log(std::abs(c)) + norm_quadrature_log(s, f);
  CHECK(std::fabs(a - b) < 1e-12);
}

TEST_CASE("homogeneity of the sup route") {
  const SpaceParams s{kInf, 1.0, 2.0};
  std::mt19937 rng(13);
  const TaylorSeries f = test::random_series(rng, 8);
  const cplx c(1.5, 2.0);
  CHECK(norm_sup(s, f.scaled(c)).value ==
        doctest::Approx(std::abs(c) * norm_sup(s, f).value).epsilon(1e-10));
}

TEST_CASE("config-shaped integral_mean wrapper") {
  QuadratureConfig cfg;
  cfg.theta_points = 8;
  const TaylorSeries onez({cplx(1.0), cplx(1.0)});
  CHECK(integral_mean(onez, 1.0, 2.0, cfg) ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
}

TEST_CASE("norm_quadrature: extreme monomial representable only in logs") {
  const SpaceParams s{4.0, 0.5, 0.5};
  const double q = norm_quadrature_log(s, TaylorSeries::monomial(60));
  const double closed = monomial_norm_log(s, 60);
  CHECK(std::isfinite(q));
  CHECK(std::fabs(std::expm1(q - closed)) <= 1e-8);
}

TEST_CASE("norm_sup: examples and closed-form agreement") {
  const SpaceParams e1{kInf, 1.0, 1.0};
  CHECK(norm_sup(e1, TaylorSeries::monomial(0)).value ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(norm_sup(e1, TaylorSeries::monomial(1)).value ==
        doctest::Approx(1.0 / std::numbers::e).epsilon(1e-4));
  const SpaceParams g{kInf, 0.5, 2.0};
  for (long n : {2L, 5L, 9L}) {
    const auto est = norm_sup(g, TaylorSeries::monomial(n));
    const double closed = std::exp(monomial_norm_sup_log(g, n));
    CHECK(est.value == doctest::Approx(closed).epsilon(1e-4));
    CHECK(est.value <= closed * (1.0 + 1e-12));  // lower-biased
  }
}

TEST_CASE("norm_sup: rejects finite p, reports grid metadata") {
  CHECK_THROWS_AS((norm_sup({2.0, 1.0, 1.0}, TaylorSeries::monomial(1))),
                  std::invalid_argument);
  const auto est =
      norm_sup({kInf, 1.0, 1.0}, TaylorSeries({cplx(1.0), cplx(0.0, 2.0)}));
  CHECK(est.radial_points == 512);
  CHECK(est.theta_points == 256);
  CHECK(est.radius_limit > 0.0);
}

TEST_CASE("zero series has zero norm in all routes") {
  const SpaceParams s{2.0, 1.0, 1.0};
  CHECK(norm_parseval(s, TaylorSeries{}) == 0.0);
  const auto r = norm_quadrature_detailed(s, TaylorSeries{});
  CHECK(r.converged);
  CHECK(std::isinf(r.log_value));
  CHECK(norm_sup({kInf, 1.0, 1.0}, TaylorSeries{}).value == 0.0);
}

TEST_SUITE_END();
