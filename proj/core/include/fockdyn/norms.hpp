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

#pragma once

#include "fockdyn/series.hpp"
#include "fockdyn/space.hpp"

namespace fockdyn {

/// Integral mean M_p(f, r) = (int_0^{2pi} |f(r e^{it})|^p dt/(2pi))^{1/p}
/// by the periodic trapezoid rule on theta_points uniform nodes. Exact to
/// rounding for p = 2 when theta_points >= 2*degree + 2. Series with a
/// single nonzero coefficient have |f| constant on circles and are handled
/// in closed form. theta_points = 0 selects max(64, 2*degree + 2).
double integral_mean(const TaylorSeries& f, double r, double p,
                     int theta_points = 0);
double integral_mean(const TaylorSeries& f, double r, double p,
                     const QuadratureConfig& cfg);
/// log M_p(f, r); internally scaled so |f|^p never overflows. -inf for the
/// zero series (or r = 0 with f(0) = 0).
double integral_mean_log(const TaylorSeries& f, double r, double p,
                         int theta_points = 0);

struct QuadratureNormResult {
  double log_value = 0.0;  // log of the norm
  double value = 0.0;      // exp(log_value); may overflow to inf at extremes
  double rel_error_estimate = 0.0;
  int panels = 0;
  bool converged = false;
};

/// ||f|| for finite p by adaptive radial Gauss-Kronrod quadrature of
/// 2 pi M_p^p(f, r) r e^{-p alpha r^m} over [0, tail_radius], carried out on
/// the log-scaled integrand so monomial norms far beyond double range are
/// still representable through log_value.
QuadratureNormResult norm_quadrature_detailed(const SpaceParams& space,
                                              const TaylorSeries& f,
                                              const QuadratureConfig& cfg = {});
/// Convenience wrapper; throws std::runtime_error when the subdivision
/// budget is exhausted before the tolerance is met.
double norm_quadrature(const SpaceParams& space, const TaylorSeries& f,
                       const QuadratureConfig& cfg = {});
double norm_quadrature_log(const SpaceParams& space, const TaylorSeries& f,
                           const QuadratureConfig& cfg = {});

/// Exact F^2 norm sqrt(sum_k |a_k|^2 ||z^k||^2), p = 2 only.
double norm_parseval(const SpaceParams& space, const TaylorSeries& f);
double norm_parseval_log(const SpaceParams& space, const TaylorSeries& f);

struct SupGridConfig {
  int radial_points = 512;
  int theta_points = 256;
  int refine_rounds = 2;  // golden-section refinement passes per coordinate
};

/// Lower-biased estimate of the p = inf norm: maximum of
/// e^{-alpha r^m} |f(r e^{i theta})| over a geometric radial grid (plus
/// r = 0) and a uniform angular grid, followed by local golden-section
/// refinement. An estimate, not a certified value.
struct SupNormEstimate {
  double value = 0.0;
  double log_value = 0.0;
  double argmax_radius = 0.0;
  double argmax_theta = 0.0;
  int radial_points = 0;  // grid metadata
  int theta_points = 0;
  double radius_limit = 0.0;
};
SupNormEstimate norm_sup(const SpaceParams& space, const TaylorSeries& f,
                         const SupGridConfig& cfg = {});

}  // namespace fockdyn
