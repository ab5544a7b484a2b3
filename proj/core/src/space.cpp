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

#include "fockdyn/space.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fockdyn/special.hpp"

namespace fockdyn {

void SpaceParams::validate() const {
  if (std::isnan(p) || (!sup_norm() && !(p >= 1.0)))
    throw std::invalid_argument("SpaceParams: p must lie in [1, inf]");
  if (!(alpha > 0.0) || !std::isfinite(alpha))
    throw std::invalid_argument("SpaceParams: alpha must be positive");
  if (!(m > 0.0) || !std::isfinite(m))
    throw std::invalid_argument("SpaceParams: m must be positive");
}

void QuadratureConfig::validate() const {
  if (theta_points < 0)
    throw std::invalid_argument("QuadratureConfig: theta_points < 0");
  if (!(radial_rel_tol > 0.0))
    throw std::invalid_argument("QuadratureConfig: radial_rel_tol <= 0");
  if (!(tail_eps > 0.0))
    throw std::invalid_argument("QuadratureConfig: tail_eps <= 0");
  if (max_subdivisions < 1)
    throw std::invalid_argument("QuadratureConfig: max_subdivisions < 1");
}

double monomial_norm_log(const SpaceParams& space, long n) {
  space.validate();
  if (space.sup_norm())
    throw std::invalid_argument(
        "monomial_norm_log: p = inf, use monomial_norm_sup_log");
  if (n < 0) throw std::invalid_argument("monomial_norm_log: n < 0");
  const double s = (space.p * static_cast<double>(n) + 2.0) / space.m;
  const double log_2pi = std::log(2.0 * std::numbers::pi);
  return (log_2pi + std::lgamma(s) - std::log(space.m) -
          s * std::log(space.p * space.alpha)) /
         space.p;
}

double monomial_norm_sup_log(const SpaceParams& space, long n) {
  space.validate();
  if (!space.sup_norm())
    throw std::invalid_argument(
        "monomial_norm_sup_log: p finite, use monomial_norm_log");
  if (n < 0) throw std::invalid_argument("monomial_norm_sup_log: n < 0");
  if (n == 0) return 0.0;
  const double nn = static_cast<double>(n);
  return (nn / space.m) * (std::log(nn / (space.m * space.alpha)) - 1.0);
}

double monomial_norm_asymptotic_log(const SpaceParams& space, long n) {
  space.validate();
  if (space.sup_norm())
    throw std::invalid_argument("monomial_norm_asymptotic_log: p = inf");
  if (n < 1) throw std::invalid_argument("monomial_norm_asymptotic_log: n < 1");
  const double nn = static_cast<double>(n);
  const double expo = nn / space.m + 2.0 / (space.m * space.p) -
                      1.0 / (2.0 * space.p);
  return expo * std::log(nn / (space.m * std::numbers::e * space.alpha));
}

double tail_radius(const SpaceParams& space, long degree, double eps) {
  space.validate();
  if (space.sup_norm())
    throw std::invalid_argument("tail_radius: requires finite p");
  if (degree < 0) throw std::invalid_argument("tail_radius: degree < 0");
  if (!(eps > 0.0) || eps >= 1.0)
    throw std::invalid_argument("tail_radius: eps must lie in (0, 1)");

  const double q = space.p * static_cast<double>(degree) + 2.0;
  const double c = space.p * space.alpha;
  const double s = q / space.m;
  // Peak of r^{q-1} e^{-c r^m}.
  const double r_star = std::pow((q - 1.0) / (c * space.m), 1.0 / space.m);

  double r = r_star * 1.05;
  for (int i = 0; i < 2000; ++i) {
    // Tail ratio of the substituted Gamma integrand: Q(s, c r^m).
    if (gamma_q(s, c * std::pow(r, space.m)) < eps) return r;
    r *= 1.15;
  }
  throw std::logic_error("tail_radius: inflation did not terminate");
}

}  // namespace fockdyn
