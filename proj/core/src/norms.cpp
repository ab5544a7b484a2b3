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

#include "fockdyn/norms.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "fockdyn/quadrature.hpp"
#include "fockdyn/special.hpp"

namespace fockdyn {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double pow_p(double x, double p) {
  if (p == 1.0) return x;
  if (p == 2.0) return x * x;
  if (p == 4.0) {
    const double s = x * x;
    return s * s;
  }
  return std::pow(x, p);
}

int auto_theta_points(const TaylorSeries& f, int requested) {
  const long deg = std::max(f.degree(), 0L);
  const int required = static_cast<int>(2 * deg + 2);
  if (requested == 0) return std::max(64, required);
  if (requested < required)
    throw std::invalid_argument(
        "integral_mean: theta_points below 2*degree + 2");
  return requested;
}

// Peak radius of the radial integrand r^{p k + 1} e^{-p alpha r^m}.
double integrand_peak(const SpaceParams& space, long k) {
  return std::pow((space.p * static_cast<double>(k) + 1.0) /
                      (space.p * space.alpha * space.m),
                  1.0 / space.m);
}

}  // namespace

double integral_mean_log(const TaylorSeries& f, double r, double p,
                         int theta_points) {
  if (!(r >= 0.0)) throw std::invalid_argument("integral_mean: r < 0");
  if (!(p >= 1.0) || !std::isfinite(p))
    throw std::invalid_argument("integral_mean: p must lie in [1, inf)");
  if (f.is_zero()) return kNegInf;
  const int q = auto_theta_points(f, theta_points);

  // One nonzero coefficient: |f| = |a_n| r^n on the circle, for every p.
  if (f.nonzero_count() == 1) {
    const long n = f.degree();
    const double a = std::abs(f.coeffs().back());
    if (r == 0.0) return n == 0 ? std::log(a) : kNegInf;
    return std::log(a) + static_cast<double>(n) * std::log(r);
  }

  std::vector<double> mods(static_cast<std::size_t>(q));
  double scale = 0.0;
  for (int j = 0; j < q; ++j) {
    const double t = kTwoPi * j / q;
    const cplx z = std::polar(r, t);
    mods[static_cast<std::size_t>(j)] = std::abs(f.evaluate(z));
    scale = std::max(scale, mods[static_cast<std::size_t>(j)]);
  }
  if (scale == 0.0) return kNegInf;
  double mean = 0.0;
  for (double v : mods) mean += pow_p(v / scale, p);
  mean /= q;
  return std::log(scale) + std::log(mean) / p;
}

double integral_mean(const TaylorSeries& f, double r, double p,
                     int theta_points) {
  return std::exp(integral_mean_log(f, r, p, theta_points));
}

double integral_mean(const TaylorSeries& f, double r, double p,
                     const QuadratureConfig& cfg) {
  cfg.validate();
  return std::exp(integral_mean_log(f, r, p, cfg.theta_points));
}

QuadratureNormResult norm_quadrature_detailed(const SpaceParams& space,
                                              const TaylorSeries& f,
                                              const QuadratureConfig& cfg) {
  space.validate();
  cfg.validate();
  if (space.sup_norm())
    throw std::invalid_argument("norm_quadrature: requires finite p");

  QuadratureNormResult out;
  if (f.is_zero()) {
    out.log_value = kNegInf;
    out.converged = true;
    return out;
  }

  const long deg = f.degree();
  const int q = auto_theta_points(f, cfg.theta_points);
  const double p = space.p;
  const double R = tail_radius(space, deg, cfg.tail_eps);

  auto log_integrand = [&](double r) -> double {
    if (r <= 0.0) return kNegInf;
    const double mp = integral_mean_log(f, r, p, q);
    if (mp == kNegInf) return kNegInf;
    return p * mp + std::log(r) -
           p * space.alpha * std::pow(r, space.m);
  };

  // Global scale from a coarse scan plus the end-monomial peaks.
  std::vector<double> probes;
  for (int i = 0; i <= 64; ++i)
    probes.push_back(R * std::pow(10.0, -6.0 * (1.0 - i / 64.0)));
  for (long k : {0L, deg / 2, deg})
    probes.push_back(std::min(R, integrand_peak(space, k)));
  double scale = kNegInf;
  for (double r : probes) scale = std::max(scale, log_integrand(r));
  if (scale == kNegInf) {
    out.log_value = kNegInf;
    out.converged = true;
    return out;
  }

  auto scaled = [&](double r) {
    const double v = log_integrand(r);
    return v == kNegInf ? 0.0 : std::exp(v - scale);
  };
  std::vector<double> hints;
  for (long k : {0L, deg / 2, deg}) {
    const double pk = integrand_peak(space, k);
    hints.push_back(pk);
    hints.push_back(0.5 * pk);
    hints.push_back(std::min(R, 2.0 * pk));
  }
  const AdaptiveResult integral = integrate_adaptive(
      scaled, 0.0, R, cfg.radial_rel_tol, cfg.max_subdivisions, hints);

  out.panels = integral.panels;
  out.converged = integral.converged && integral.value > 0.0;
  if (integral.value <= 0.0) {
    out.log_value = kNegInf;
    return out;
  }
  // ||f||^p = 2 pi e^{scale} * integral
  out.log_value =
      (std::log(kTwoPi) + scale + std::log(integral.value)) / p;
  out.value = std::exp(out.log_value);
  out.rel_error_estimate =
      integral.error_estimate / integral.value / p;
  return out;
}

double norm_quadrature_log(const SpaceParams& space, const TaylorSeries& f,
                           const QuadratureConfig& cfg) {
  const auto r = norm_quadrature_detailed(space, f, cfg);
  if (!r.converged)
    throw std::runtime_error(
        "norm_quadrature: subdivision budget exhausted before tolerance");
  return r.log_value;
}

double norm_quadrature(const SpaceParams& space, const TaylorSeries& f,
                       const QuadratureConfig& cfg) {
  return std::exp(norm_quadrature_log(space, f, cfg));
}

double norm_parseval_log(const SpaceParams& space, const TaylorSeries& f) {
  space.validate();
  if (space.p != 2.0)
    throw std::invalid_argument("norm_parseval: requires p = 2");
  if (f.is_zero()) return kNegInf;
  std::vector<double> terms;
  terms.reserve(f.coeffs().size());
  for (long k = 0; k <= f.degree(); ++k) {
    const double a = std::abs(f.coeff(k));
    if (a == 0.0) continue;
    terms.push_back(2.0 * (std::log(a) + monomial_norm_log(space, k)));
  }
  return 0.5 * log_sum_exp(terms);
}

double norm_parseval(const SpaceParams& space, const TaylorSeries& f) {
  return std::exp(norm_parseval_log(space, f));
}

namespace {

// e^{-alpha r^m} |f(r e^{i t})|, the quantity norm_sup maximizes.
double weighted_modulus(const SpaceParams& space, const TaylorSeries& f,
                        double r, double t) {
  const double w = -space.alpha * std::pow(r, space.m);
  const cplx z = std::polar(r, t);
  const double mod = std::abs(f.evaluate(z));
  if (mod == 0.0) return 0.0;
  // |f| can be near overflow at large radii; combine in log form.
  return std::exp(std::log(mod) + w);
}

struct GoldenMax {
  double x;
  double value;
};

GoldenMax golden_max(const std::function<double(double)>& g, double lo,
                     double hi, int iters) {
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double x1 = b - invphi * (b - a);
  double x2 = a + invphi * (b - a);
  double f1 = g(x1), f2 = g(x2);
  for (int i = 0; i < iters; ++i) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + invphi * (b - a);
      f2 = g(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - invphi * (b - a);
      f1 = g(x1);
    }
  }
  return f1 >= f2 ? GoldenMax{x1, f1} : GoldenMax{x2, f2};
}

}  // namespace

SupNormEstimate norm_sup(const SpaceParams& space, const TaylorSeries& f,
                         const SupGridConfig& cfg) {
  space.validate();
  if (!space.sup_norm())
    throw std::invalid_argument("norm_sup: requires p = inf");
  if (cfg.radial_points < 8 || cfg.theta_points < 4)
    throw std::invalid_argument("norm_sup: grid too small");

  SupNormEstimate out;
  out.radial_points = cfg.radial_points;
  out.theta_points = cfg.theta_points;
  if (f.is_zero()) {
    out.log_value = kNegInf;
    return out;
  }

  const long deg = f.degree();
  // Envelope log(sum |a_k| r^k) - alpha r^m bounds the weighted modulus;
  // extend the radius until it has dropped well below its sampled peak.
  auto envelope = [&](double r) {
    std::vector<double> terms;
    for (long k = 0; k <= deg; ++k) {
      const double a = std::abs(f.coeff(k));
      if (a == 0.0) continue;
      terms.push_back(std::log(a) +
                      (r > 0.0 ? static_cast<double>(k) * std::log(r) : (k ? kNegInf : 0.0)));
    }
    return log_sum_exp(terms) - space.alpha * std::pow(r, space.m);
  };
  double R = std::max(
      1.0, deg >= 1 ? std::pow(static_cast<double>(deg) / (space.alpha * space.m),
                               1.0 / space.m)
                    : 1.0);
  double env_peak = envelope(R);
  env_peak = std::max(env_peak, envelope(0.0));
  for (int i = 0; i < 400 && envelope(R) > env_peak - 45.0; ++i) R *= 1.25;
  out.radius_limit = R;

  // Coarse grid: r = 0 plus a geometric ladder.
  const double r_lo = R * 1e-6;
  std::vector<double> radii{0.0};
  for (int i = 0; i < cfg.radial_points; ++i)
    radii.push_back(r_lo * std::pow(R / r_lo, static_cast<double>(i) /
                                                  (cfg.radial_points - 1)));
  double best = 0.0, best_r = 0.0, best_t = 0.0;
  long best_ri = 0;
  for (std::size_t i = 0; i < radii.size(); ++i) {
    for (int j = 0; j < cfg.theta_points; ++j) {
      const double t = kTwoPi * j / cfg.theta_points;
      const double v = weighted_modulus(space, f, radii[i], t);
      if (v > best) {
        best = v;
        best_r = radii[i];
        best_t = t;
        best_ri = static_cast<long>(i);
      }
      if (radii[i] == 0.0) break;  // angle is irrelevant at the origin
    }
  }

  // Local refinement: golden section in r between the bracketing grid
  // neighbours, then in theta, repeated. Values stay true point
  // evaluations, so the estimate remains lower-biased.
  const double r_left =
      best_ri > 0 ? radii[static_cast<std::size_t>(best_ri - 1)] : 0.0;
  const double r_right = best_ri + 1 < static_cast<long>(radii.size())
                             ? radii[static_cast<std::size_t>(best_ri + 1)]
                             : R;
  double lo_r = r_left, hi_r = r_right;
  const double dt = kTwoPi / cfg.theta_points;
  for (int round = 0; round < cfg.refine_rounds; ++round) {
    const double t_fixed = best_t;
    auto rad = golden_max(
        [&](double r) { return weighted_modulus(space, f, r, t_fixed); },
        lo_r, hi_r, 60);
    if (rad.value > best) {
      best = rad.value;
      best_r = rad.x;
    }
    const double r_fixed = best_r;
    auto ang = golden_max(
        [&](double t) { return weighted_modulus(space, f, r_fixed, t); },
        best_t - dt, best_t + dt, 60);
    if (ang.value > best) {
      best = ang.value;
      best_t = ang.x;
    }
    // shrink the radial bracket around the current best
    const double w = 0.25 * (hi_r - lo_r);
    lo_r = std::max(r_left, best_r - w);
    hi_r = std::min(r_right, best_r + w);
  }

  out.value = best;
  out.log_value = best > 0.0 ? std::log(best) : kNegInf;
  out.argmax_radius = best_r;
  out.argmax_theta = best_t;
  return out;
}

}  // namespace fockdyn
