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

#include "fockdyn/dynamics.hpp"

using namespace fockdyn;

namespace {
SymbolPolynomial az(double a) { return SymbolPolynomial({cplx(0.0), cplx(a)}); }
}  // namespace

TEST_SUITE_BEGIN("dynamics");

TEST_CASE("orbit: differentiation decays geometrically when alpha < 1") {
  const SpaceParams s{2.0, 0.8, 1.0};
  const auto report = iterate_norm_sequence(s, make_differentiation(), 30,
                                            NormMethod::exact_shift);
  CHECK(report.verdict == OrbitTrend::decaying);
  for (const auto& smp : report.norms) {
    CHECK(smp.certified);
    CHECK(std::fabs(smp.log_norm - smp.n * std::log(0.8)) < 1e-3);
    // Consistent with the envelope C k^{p/2} e^{-(1-alpha)k} (C = 2, p = 2).
    CHECK(smp.log_norm <=
          std::log(2.0) + std::log(double(smp.n)) - 0.2 * smp.n);
  }
  CHECK(report.sup_log_norm == report.norms.front().log_norm);
}

TEST_CASE("orbit: hardy is flat at norm one") {
  const SpaceParams s{2.0, 0.5, 2.0};
  const auto report =
      iterate_norm_sequence(s, make_hardy(), 20, NormMethod::exact_shift);
  CHECK(report.verdict == OrbitTrend::bounded_so_far);
  for (const auto& smp : report.norms) CHECK(smp.log_norm == 0.0);
}

TEST_CASE("orbit: integration grows like (1/4) log n at the critical line") {
  const SpaceParams s{2.0, 1.0, 1.0};
  const auto report = iterate_norm_sequence(s, make_integration(), 200,
                                            NormMethod::exact_shift);
  CHECK(report.verdict == OrbitTrend::growing);
  // Closed form: ||J^n|| = ||z^n|| / (n! ||1||), sup at k = 0.
  for (long n : {10L, 100L, 200L}) {
    const double oracle =
        0.5 * (std::lgamma(2.0 * n + 2.0) - n * std::log(4.0)) -
        std::lgamma(n + 1.0);
    CHECK(report.norms[n - 1].log_norm ==
          doctest::Approx(oracle).epsilon(1e-12));
  }
  const double spread_vs_quarter_log =
      (report.norms[199].log_norm - report.norms[99].log_norm) /
      (0.25 * std::log(200.0 / 100.0));
  CHECK(spread_vs_quarter_log == doctest::Approx(1.0).epsilon(0.05));
}

TEST_CASE("orbit: matrix route agrees with the exact shift route") {
  const SpaceParams s{2.0, 1.0, 1.0};
  ProbeConfig cfg;
  cfg.trunc_dim = 96;
  const auto exact = iterate_norm_sequence(s, make_integration(), 12,
                                           NormMethod::exact_shift, cfg);
  const auto matrix = iterate_norm_sequence(s, make_integration(), 12,
                                            NormMethod::matrix_section, cfg);
  for (std::size_t i = 0; i < exact.norms.size(); ++i) {
    CHECK(std::fabs(matrix.norms[i].log_norm - exact.norms[i].log_norm) < 1e-8);
    CHECK_FALSE(matrix.norms[i].certified);
  }
}

TEST_CASE("orbit: test-vector route bounds from below and detects growth") {
  const SpaceParams s{2.0, 1.2, 1.0};
  const auto report = iterate_norm_sequence(s, make_differentiation(), 60,
                                            NormMethod::test_vector);
  CHECK(report.verdict == OrbitTrend::growing);
  // The z^n witness: ||D^n z^n|| / ||z^n|| = n! ||1|| / ||z^n||.
  MonomialNormCache cache(s);
  for (long n : {20L, 60L}) {
    const double witness = std::lgamma(n + 1.0) + cache.log_norm(0) -
                           cache.log_norm(n);
    CHECK(report.norms[n - 1].log_norm >= witness - 1e-12);
  }
}

TEST_CASE("gelfand: volterra radius |a|/alpha within 5 percent") {
  const SpaceParams s{2.0, 1.0, 1.0};
  for (double a : {0.3, 0.9, 1.5}) {
    const auto rep = gelfand_estimate(s, make_volterra(az(a)), 96);
    CHECK(rep.extrapolation_valid);
    CHECK_FALSE(rep.quasi_nilpotent);
    CHECK(rep.extrapolated_radius == doctest::Approx(a).epsilon(0.05));
    // Successive estimates stabilize: values at n and 2n differ below 5%
    // beyond n = 50.
    const double g48 = std::exp(rep.gelfand[47].log_gelfand);
    const double g96 = std::exp(rep.gelfand[95].log_gelfand);
    CHECK(std::fabs(g96 / g48 - 1.0) < 0.05);
  }
}

TEST_CASE("gelfand: hardy has radius one") {
  const SpaceParams s{2.0, 0.5, 2.0};
  const auto rep = gelfand_estimate(s, make_hardy(), 32);
  CHECK(rep.extrapolated_radius == doctest::Approx(1.0).epsilon(1e-9));
  CHECK_FALSE(rep.quasi_nilpotent);
}

TEST_CASE("gelfand: integration on m=2 is quasi-nilpotent (log-divergent)") {
  const SpaceParams s{2.0, 1.0, 2.0};
  const auto rep = gelfand_estimate(s, make_integration(), 96);
  CHECK(rep.quasi_nilpotent);
  CHECK(rep.extrapolated_radius == 0.0);
  // The raw sequence decreases but is still far from zero at n ~ 100:
  // ||J^n||^{1/n} = (2^n n!)^{-1/(2n)}.
  const double at96 = std::exp(rep.gelfand.back().log_gelfand);
  const double closed =
      std::exp(-(96.0 * std::log(2.0) + std::lgamma(97.0)) / 192.0);
  CHECK(at96 == doctest::Approx(closed).epsilon(1e-10));
}

TEST_CASE("cesaro: differentiation with alpha<1 averages to zero") {
  // The limit candidate carries a geometric remainder ~ alpha^{nmax/2}, so
  // the range must be long enough for it to drop below the idempotence gate.
  const SpaceParams s{2.0, 0.8, 1.0};
  ProbeConfig cfg;
  cfg.trunc_dim = 96;
  const auto rep = cesaro_report(s, make_differentiation(), 128, cfg);
  CHECK(rep.limit_description == "zero");
  CHECK(rep.ume_verdict == ProbeVerdict::yes);
  CHECK(rep.residuals.back().value < 0.1);
  CHECK(rep.idempotence_residual < 1e-6);
}

TEST_CASE("cesaro: hardy averages to the coefficient-0 projection at rate 1/n") {
  const SpaceParams s{2.0, 0.5, 2.0};
  ProbeConfig cfg;
  cfg.trunc_dim = 96;
  const auto rep = cesaro_report(s, make_hardy(), 96, cfg);
  CHECK(rep.limit_description == "coefficient-0 projection");
  CHECK(rep.ume_verdict == ProbeVerdict::yes);
  CHECK(rep.idempotence_residual < 1e-10);
  CHECK(rep.fitted_rate_exponent == doctest::Approx(1.0).epsilon(0.2));
  // Exact residual: ||A_n - P|| = (1 - 2^{-n})/n at the j=1 diagonal slot.
  const auto& last = rep.residuals.back();
  CHECK(last.value == doctest::Approx(1.0 / last.n).epsilon(1e-6));
}

TEST_CASE("cesaro: contractive volterra averages to zero") {
  const SpaceParams s{2.0, 1.0, 1.0};
  ProbeConfig cfg;
  cfg.trunc_dim = 80;
  const auto rep = cesaro_report(s, make_volterra(az(0.5)), 64, cfg);
  CHECK(rep.limit_description == "zero");
  CHECK(rep.ume_verdict == ProbeVerdict::yes);
}

TEST_CASE("cesaro: growing iterates yield a negative verdict") {
  const SpaceParams s{2.0, 1.2, 1.0};
  ProbeConfig cfg;
  cfg.trunc_dim = 72;
  const auto rep = cesaro_report(s, make_differentiation(), 48, cfg);
  CHECK(rep.ume_verdict == ProbeVerdict::no);
}

TEST_CASE("cesaro: vector-level residuals decay for hardy on p=1") {
  const SpaceParams s{1.0, 1.0, 1.0};
  const auto res = cesaro_vector_residuals(
      s, make_hardy(), 48, TaylorSeries({cplx(1.0), cplx(2.0), cplx(0.5)}));
  CHECK(res.back().value < 0.7 * res[res.size() / 2].value);
  CHECK(res.back().value < 0.1 * res.front().value);
}

TEST_CASE("ritt: hardy closed diagonal values") {
  const SpaceParams s{2.0, 0.5, 2.0};
  const auto rep = ritt_sequence(s, make_hardy(), 50);
  CHECK(rep.certified);
  CHECK(rep.verdict == ProbeVerdict::yes);
  // n=1: sup_k k/(k+1)^2 = 1/4; n=3: 3 * 1/16.
  CHECK(rep.quantities[0].value == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(rep.quantities[2].value == doctest::Approx(0.1875).epsilon(1e-12));
  CHECK(rep.sup_estimate == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(rep.quantities.back().value < 1e-10);
}

TEST_CASE("ritt: differentiation passes for alpha<1, fails for alpha>1") {
  ProbeConfig cfg;
  cfg.trunc_dim = 64;
  const auto good =
      ritt_sequence({2.0, 0.8, 1.0}, make_differentiation(), 40, cfg);
  CHECK(good.verdict == ProbeVerdict::yes);
  CHECK(good.quantities.back().value < 0.05);
  const auto bad =
      ritt_sequence({2.0, 1.2, 1.0}, make_differentiation(), 40, cfg);
  CHECK(bad.verdict == ProbeVerdict::no);
}

TEST_CASE("trichotomy sequence: all five regimes") {
  auto run = [](double alpha, double p) {
    return d_hypercyclicity_sequence({p, alpha, 1.0}, 400);
  };
  CHECK(run(1.5, 2.0).trend == RatioTrend::to_zero);
  CHECK(run(1.0, 4.0).trend == RatioTrend::to_zero);
  CHECK(run(1.0, 2.0).trend == RatioTrend::to_infinity);
  CHECK(run(0.8, 2.0).trend == RatioTrend::to_infinity);
  CHECK(run(1.0, 3.0).trend == RatioTrend::bounded);
  CHECK_THROWS_AS((d_hypercyclicity_sequence({2.0, 1.0, 2.0}, 100)),
                  std::invalid_argument);
}

TEST_CASE("invariant: quasi-nilpotent implies decaying orbit and zero limit") {
  const SpaceParams s{2.0, 1.0, 2.0};
  ProbeConfig cfg;
  cfg.trunc_dim = 80;
  const auto spectral = gelfand_estimate(s, make_integration(), 64, cfg);
  REQUIRE(spectral.quasi_nilpotent);
  const auto orbit = iterate_norm_sequence(s, make_integration(), 64,
                                           NormMethod::exact_shift, cfg);
  CHECK(orbit.verdict == OrbitTrend::decaying);
  const auto ergodic = cesaro_report(s, make_integration(), 64, cfg);
  CHECK(ergodic.limit_description == "zero");
}

TEST_SUITE_END();
