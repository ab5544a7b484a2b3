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
#include <vector>

#include "fockdyn/quadrature.hpp"
#include "fockdyn/special.hpp"

using namespace fockdyn;

TEST_SUITE_BEGIN("special");

TEST_CASE("log_sum_exp basics") {
  std::vector<double> v{std::log(2.0), std::log(3.0)};
  CHECK(log_sum_exp(v) == doctest::Approx(std::log(5.0)).epsilon(1e-14));
  std::vector<double> big{1000.0, 1000.0};
  CHECK(log_sum_exp(big) ==
        doctest::Approx(1000.0 + std::log(2.0)).epsilon(1e-14));
  std::vector<double> empty;
  CHECK(std::isinf(log_sum_exp(empty)));
}

TEST_CASE("gamma_q closed forms") {
  // Q(1, x) = e^{-x}, Q(1/2, x) = erfc(sqrt x).
  for (double x : {0.1, 1.0, 3.5, 20.0}) {
    CHECK(gamma_q(1.0, x) == doctest::Approx(std::exp(-x)).epsilon(1e-12));
    CHECK(gamma_q(0.5, x) ==
          doctest::Approx(std::erfc(std::sqrt(x))).epsilon(1e-12));
  }
  CHECK(gamma_q(7.0, 0.0) == 1.0);
}

TEST_CASE("gamma_q against direct quadrature") {
  // Q(s, x) = int_x^inf t^{s-1} e^{-t} dt / Gamma(s), integrated far enough
  // that the remaining tail is negligible.
  for (double s : {2.5, 7.0, 31.0}) {
    for (double x : {1.0, 5.0, 40.0, 90.0}) {
      auto f = [&](double t) { return std::pow(t, s - 1.0) * std::exp(-t); };
      const double upper = x + 60.0 + 4.0 * s;
      const auto integral = integrate_adaptive(f, x, upper, 1e-13, 4000);
      REQUIRE(integral.converged);
      const double expected = integral.value / std::tgamma(s);
      CHECK(gamma_q(s, x) == doctest::Approx(expected).epsilon(1e-9));
    }
  }
}

TEST_CASE("gauss-kronrod smoke: exact on smooth integrals") {
  auto f = [](double x) { return std::sin(3.0 * x) + x * x; };
  const auto r = integrate_adaptive(f, 0.0, 2.0, 1e-12, 2000);
  const double exact = (1.0 - std::cos(6.0)) / 3.0 + 8.0 / 3.0;
  CHECK(r.converged);
  CHECK(r.value == doctest::Approx(exact).epsilon(1e-12));
}

TEST_SUITE_END();
