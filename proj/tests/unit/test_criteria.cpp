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

#include "fockdyn/criteria.hpp"

using namespace fockdyn;
constexpr double kInf = SpaceParams::infinite_p;

namespace {
SymbolPolynomial az(double a, long l = 1) {
  std::vector<cplx> c(static_cast<std::size_t>(l) + 1, cplx(0.0));
  c.back() = cplx(a);
  return SymbolPolynomial(c);
}
}  // namespace

TEST_SUITE_BEGIN("criteria");

TEST_CASE("differentiation: hypercyclic and power-bounded regions") {
  auto c = classify_differentiation({2.0, 1.5, 1.0});
  c.check_consistency();
  CHECK(c.hypercyclic == Verdict::yes);
  CHECK(c.power_bounded == Verdict::no);
  CHECK(c.supercyclic == Verdict::yes);

  c = classify_differentiation({2.0, 0.5, 1.0});
  c.check_consistency();
  CHECK(c.hypercyclic == Verdict::no);
  CHECK(c.power_bounded == Verdict::yes);
  CHECK(c.ritt == Verdict::yes);

  c = classify_differentiation({2.0, 1.0, 0.5});
  c.check_consistency();
  CHECK(c.bounded == Verdict::yes);
  CHECK(c.compact == Verdict::yes);
  CHECK(c.power_bounded == Verdict::yes);
  CHECK(c.hypercyclic == Verdict::no);

  // Boundary p > 3 strictly, at alpha = 1.
  CHECK(classify_differentiation({4.0, 1.0, 1.0}).hypercyclic == Verdict::yes);
  CHECK(classify_differentiation({3.0, 1.0, 1.0}).hypercyclic == Verdict::no);

  // Unbounded when m > 1: dynamical fields are not covered.
  c = classify_differentiation({2.0, 1.0, 2.0});
  c.check_consistency();
  CHECK(c.bounded == Verdict::no);
  CHECK(c.power_bounded == Verdict::not_covered);

  // Sup-norm spaces are outside the characterized range.
  CHECK(classify_differentiation({kInf, 1.0, 1.0}).bounded ==
        Verdict::not_covered);
}

TEST_CASE("volterra: sup-norm characterizations and finite-p necessity") {
  auto c = classify_volterra({kInf, 1.0, 1.0}, az(0.5));
  c.check_consistency();
  CHECK(c.power_bounded == Verdict::yes);
  CHECK(c.uniformly_mean_ergodic == Verdict::yes);

  c = classify_volterra({kInf, 1.0, 1.0}, az(1.0));
  CHECK(c.power_bounded == Verdict::yes);
  CHECK(c.uniformly_mean_ergodic == Verdict::no);  // boundary |a_l| = alpha

  c = classify_volterra({kInf, 1.0, 1.0}, az(1.5));
  CHECK(c.power_bounded == Verdict::no);

  c = classify_volterra({2.0, 1.0, 2.0}, az(1.0));
  c.check_consistency();
  CHECK(c.compact == Verdict::yes);
  CHECK(c.power_bounded == Verdict::yes);
  CHECK(c.uniformly_mean_ergodic == Verdict::yes);

  c = classify_volterra({2.0, 1.0, 1.0}, az(0.9));
  CHECK(c.power_bounded == Verdict::necessary_only);
  CHECK(c.uniformly_mean_ergodic == Verdict::necessary_only);
  c = classify_volterra({2.0, 1.0, 1.0}, az(1.5));
  CHECK(c.power_bounded == Verdict::no);

  // Unbounded symbol degree.
  c = classify_volterra({2.0, 1.0, 1.0}, az(1.0, 2));
  CHECK(c.bounded == Verdict::no);
  CHECK(c.power_bounded == Verdict::not_covered);

  // Cyclicity: characterized for a z^l + b only.
  CHECK(classify_volterra({2.0, 1.0, 3.0}, az(1.0, 1)).cyclic == Verdict::yes);
  CHECK(classify_volterra({2.0, 1.0, 3.0}, az(1.0, 2)).cyclic == Verdict::no);
  CHECK(classify_volterra({2.0, 1.0, 3.0},
                          SymbolPolynomial({cplx(0.0), cplx(1.0), cplx(1.0)}))
            .cyclic == Verdict::not_covered);

  // Non-integer m with l = floor(m) < m: compact.
  c = classify_volterra({2.0, 1.0, 2.5}, az(1.0, 2));
  CHECK(c.bounded == Verdict::yes);
  CHECK(c.compact == Verdict::yes);
  CHECK(c.power_bounded == Verdict::yes);

  CHECK_THROWS_AS((classify_volterra({2.0, 1.0, 1.0},
                                     SymbolPolynomial({cplx(0.0)}))),
                  std::invalid_argument);
}

TEST_CASE("integration specializes the volterra classifier at g = z") {
  for (double p : {1.0, 2.0, kInf})
    for (double alpha : {0.5, 1.0, 2.0})
      for (double m : {0.5, 1.0, 2.0, 3.0}) {
        const SpaceParams s{p, alpha, m};
        const auto ci = classify_integration(s);
        const auto cv = classify_volterra(s, az(1.0));
        CHECK(ci.bounded == cv.bounded);
        CHECK(ci.compact == cv.compact);
        CHECK(ci.hypercyclic == cv.hypercyclic);
        CHECK(ci.supercyclic == cv.supercyclic);
        CHECK(ci.cyclic == cv.cyclic);
        CHECK(ci.power_bounded == cv.power_bounded);
        CHECK(ci.uniformly_mean_ergodic == cv.uniformly_mean_ergodic);
        CHECK(ci.ritt == cv.ritt);
      }

  // Pinned examples.
  auto c = classify_integration({kInf, 2.0, 1.0});
  CHECK(c.power_bounded == Verdict::yes);
  CHECK(c.uniformly_mean_ergodic == Verdict::yes);
  c = classify_integration({2.0, 1.0, 1.0});
  CHECK(c.power_bounded == Verdict::necessary_only);
  c = classify_integration({1.0, 1.0, 3.0});
  CHECK(c.compact == Verdict::yes);
  CHECK(c.power_bounded == Verdict::yes);
  // J is bounded iff m >= 1.
  CHECK(classify_integration({2.0, 1.0, 0.5}).bounded == Verdict::no);
}

TEST_CASE("hardy: constant verdicts for finite p") {
  for (const SpaceParams& s :
       {SpaceParams{2.0, 0.5, 2.0}, SpaceParams{1.0, 1.0, 1.0},
        SpaceParams{4.0, 2.0, 0.7}}) {
    const auto c = classify_hardy(s);
    c.check_consistency();
    CHECK(c.bounded == Verdict::yes);
    CHECK(c.power_bounded == Verdict::yes);
    CHECK(c.uniformly_mean_ergodic == Verdict::yes);
    CHECK(c.ritt == Verdict::yes);
    CHECK(c.supercyclic == Verdict::no);
    CHECK(c.hypercyclic == Verdict::no);
  }
  CHECK(classify_hardy({kInf, 1.0, 1.0}).bounded == Verdict::not_covered);
}

TEST_CASE("volterra spectral radius |a_l|/alpha") {
  CHECK(volterra_spectrum_radius({2.0, 1.0, 1.0}, az(0.3)) ==
        doctest::Approx(0.3));
  CHECK(volterra_spectrum_radius({kInf, 2.0, 2.0}, az(4.0, 2)) ==
        doctest::Approx(2.0));
  CHECK(volterra_spectrum_radius({2.0, 1.0, 1.0}, az(1.0)) ==
        doctest::Approx(1.0));
  CHECK_THROWS_AS((volterra_spectrum_radius({2.0, 1.0, 2.0}, az(1.0))),
                  std::invalid_argument);
}

TEST_CASE("k-operator norm bound") {
  CHECK(k_lambda_norm_bound(cplx(1.0), cplx(0.0), 2.0) == doctest::Approx(0.5));
  CHECK(k_lambda_norm_bound(cplx(2.0), cplx(0.5), 1.0) == doctest::Approx(4.0));
  CHECK(k_lambda_norm_bound(cplx(0.0), cplx(5.0), 1.0) == 0.0);
  CHECK_THROWS_AS(k_lambda_norm_bound(cplx(1.0), cplx(1.0), 1.0),
                  std::invalid_argument);
}

TEST_CASE("implication chain holds across a parameter sweep") {
  for (double p : {1.0, 2.0, 3.0, 4.0, kInf})
    for (double alpha : {0.5, 1.0, 1.5})
      for (double m : {0.5, 1.0, 2.0, 2.5}) {
        const SpaceParams s{p, alpha, m};
        if (!s.sup_norm()) {
          CHECK_NOTHROW(classify_differentiation(s).check_consistency());
          CHECK_NOTHROW(classify_hardy(s).check_consistency());
        }
        CHECK_NOTHROW(classify_integration(s).check_consistency());
        CHECK_NOTHROW(classify_volterra(s, az(0.7, 2)).check_consistency());
      }
}

TEST_CASE("cross_check: concordance on representative cells") {
  ProbeConfig cfg;
  cfg.trunc_dim = 72;
  cfg.shift_policy.stability_tol = 1e-3;  // verdict-level accuracy suffices

  // D on alpha = 0.8: everything characterized true, probes agree. The
  // range must clear the geometric remainder in the Cesaro limit.
  {
    const SpaceParams s{2.0, 0.8, 1.0};
    const auto rep = cross_check(s, make_differentiation(),
                                 classify_differentiation(s), 128, cfg);
    REQUIRE(rep.rows.size() == 3);
    for (const auto& row : rep.rows) CHECK(row.status == CheckStatus::agree);
  }
  // H: power bounded / mean ergodic / Ritt all agree.
  {
    const SpaceParams s{2.0, 0.5, 2.0};
    const auto rep = cross_check(s, make_hardy(), classify_hardy(s), 48, cfg);
    CHECK_FALSE(rep.any_disagree());
    for (const auto& row : rep.rows) CHECK(row.status == CheckStatus::agree);
  }
  // J at the p=2, m=1, alpha=1 boundary: necessity-only fields stay
  // inconclusive while the probe reports growth.
  {
    const SpaceParams s{2.0, 1.0, 1.0};
    const auto rep =
        cross_check(s, make_integration(), classify_integration(s), 64, cfg);
    CHECK_FALSE(rep.any_disagree());
    CHECK(rep.rows[0].status == CheckStatus::inconclusive);
    CHECK(rep.rows[0].probe == ProbeVerdict::no);  // growing evidence
  }
  // Unbounded cell: nothing to probe.
  {
    const SpaceParams s{2.0, 1.0, 1.0};
    const auto cls = classify_volterra(s, az(1.0, 2));
    const auto rep = cross_check(s, make_volterra(az(1.0, 2)), cls, 32, cfg);
    CHECK(rep.rows.empty());
  }
}

TEST_SUITE_END();
