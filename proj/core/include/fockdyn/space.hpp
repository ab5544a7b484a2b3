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

#include <limits>

namespace fockdyn {

/// Parameters of the weighted space of entire functions with norm
///   ||f||^p = \int_C |f(z)|^p e^{-p a |z|^m} dA(z)      (1 <= p < inf)
///   ||f||   = sup_{r>0} e^{-a r^m} max_{|z|=r} |f(z)|   (p = inf).
struct SpaceParams {
  double p = 2.0;      // integrability exponent in [1, inf]
  double alpha = 1.0;  // weight scale, > 0
  double m = 1.0;      // weight growth order, > 0

  static constexpr double infinite_p = std::numeric_limits<double>::infinity();

  bool sup_norm() const { return p == infinite_p; }
  /// Throws std::invalid_argument when p < 1, alpha <= 0, m <= 0 or a
  /// parameter is NaN.
  void validate() const;
};

struct QuadratureConfig {
  /// Angular grid size; 0 means auto (max(64, 2*degree + 2)). When given
  /// explicitly it must be >= 2*degree + 2 for the series it is used on
  /// (periodic trapezoid exactness for trigonometric polynomials).
  int theta_points = 0;
  double radial_rel_tol = 1e-10;
  double tail_eps = 1e-14;
  int max_subdivisions = 4000;
  void validate() const;
};

/// log ||z^n|| for finite p, from the closed form
///   ||z^n||^p = 2 pi Gamma((p n + 2)/m) / (m (p alpha)^{(p n + 2)/m}),
/// evaluated through lgamma so it does not overflow for n up to 1e6.
double monomial_norm_log(const SpaceParams& space, long n);

/// log ||z^n|| for p = inf: log sup_r r^n e^{-alpha r^m}
///   = (n/m) (log(n/(m alpha)) - 1) for n >= 1, and 0 for n = 0.
double monomial_norm_sup_log(const SpaceParams& space, long n);

/// The leading-order form (n/m + 2/(m p) - 1/(2 p)) * log(n/(m e alpha)),
/// p finite, n >= 1. Differs from monomial_norm_log by an O(1) amount; used
/// only for ratio diagnostics.
double monomial_norm_asymptotic_log(const SpaceParams& space, long n);

/// Smallest tested R such that the weighted radial integrand of the highest
/// monomial, r^{p*degree+1} e^{-p alpha r^m}, has tail mass over [R, inf)
/// below eps times its total. Grows multiplicatively from the integrand's
/// peak r* = ((p*degree+1)/(p alpha m))^{1/m}, each step verified against
/// the regularized incomplete gamma.
double tail_radius(const SpaceParams& space, long degree, double eps);

}  // namespace fockdyn
