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

#include "fockdyn/operator_norms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace fockdyn {

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
}

MonomialNormCache::MonomialNormCache(const SpaceParams& space) : space_(space) {
  space_.validate();
  if (space_.sup_norm())
    throw std::invalid_argument("MonomialNormCache: requires finite p");
}

double MonomialNormCache::log_norm(long k) const {
  if (k < 0) throw std::invalid_argument("MonomialNormCache: k < 0");
  if (k >= static_cast<long>(logs_.size())) {
    const long old = static_cast<long>(logs_.size());
    logs_.resize(static_cast<std::size_t>(std::max(k + 1, old * 2)));
    for (long i = old; i < static_cast<long>(logs_.size()); ++i)
      logs_[static_cast<std::size_t>(i)] = monomial_norm_log(space_, i);
  }
  return logs_[static_cast<std::size_t>(k)];
}

double MonomialNormCache::log_factorial(long k) const {
  if (k < 0) throw std::invalid_argument("MonomialNormCache: k < 0");
  if (k >= static_cast<long>(logfact_.size())) {
    const long old = static_cast<long>(logfact_.size());
    logfact_.resize(static_cast<std::size_t>(std::max(k + 1, old * 2)));
    for (long i = old; i < static_cast<long>(logfact_.size()); ++i)
      logfact_[static_cast<std::size_t>(i)] =
          std::lgamma(static_cast<double>(i) + 1.0);
  }
  return logfact_[static_cast<std::size_t>(k)];
}

ShiftNormResult shift_norm_exact_p2(const SpaceParams& space,
                                    const CoeffOperator& op, long power,
                                    const ShiftNormPolicy& policy,
                                    const MonomialNormCache* cache) {
  space.validate();
  if (space.p != 2.0)
    throw std::invalid_argument("shift_norm_exact_p2: requires p = 2");
  if (!op.single_term())
    throw std::invalid_argument("shift_norm_exact_p2: requires a single term");
  if (power < 1) throw std::invalid_argument("shift_norm_exact_p2: power < 1");

  std::optional<MonomialNormCache> local;
  if (!cache) local.emplace(space);
  const MonomialNormCache& norms = cache ? *cache : *local;

  const ShiftTerm& term = op.terms()[0];
  const long s = term.shift;

  // Iterated weight product through the integer log-factorial cache where
  // the closed form is a factorial ratio; general lgamma fallback otherwise.
  auto weight_product_log = [&](long k) -> double {
    const WeightRule& rule = term.rule;
    switch (rule.kind) {
      case WeightRule::Kind::derivative:
        if (k < power) return kNegInf;
        return norms.log_factorial(k) - norms.log_factorial(k - power);
      case WeightRule::Kind::integration:
        return norms.log_factorial(k) - norms.log_factorial(k + power);
      case WeightRule::Kind::hardy:
        return -static_cast<double>(power) *
               std::log(static_cast<double>(k + 1));
      case WeightRule::Kind::volterra:
        if (rule.volterra_degree == 1) {
          const double a = std::abs(rule.volterra_coeff);
          if (a == 0.0) return kNegInf;
          return static_cast<double>(power) * std::log(a) +
                 norms.log_factorial(k) - norms.log_factorial(k + power);
        }
        return rule.iterated_log_abs(k, power, s);
    }
    return rule.iterated_log_abs(k, power, s);
  };

  auto entry_log = [&](long k) -> double {
    const long target = k + power * s;
    if (target < 0) return kNegInf;
    const double w = weight_product_log(k);
    if (w == kNegInf) return kNegInf;
    return w + norms.log_norm(target) - norms.log_norm(k);
  };

  ShiftNormResult out;
  double sup = kNegInf;
  long argmax = 0;
  long scanned = -1;
  long window = std::max(policy.initial_k, 4L);
  int stable_doublings = 0;
  double last_delta = std::numeric_limits<double>::infinity();

  while (true) {
    const long hi = std::min(window, policy.cap_k);
    const double before = sup;
    for (long k = scanned + 1; k <= hi; ++k) {
      const double e = entry_log(k);
      if (e > sup) {
        sup = e;
        argmax = k;
      }
    }
    scanned = hi;
    last_delta = (before == kNegInf) ? std::numeric_limits<double>::infinity()
                                     : sup - before;
    if (before != kNegInf && sup != kNegInf &&
        std::fabs(last_delta) <= policy.stability_tol) {
      if (++stable_doublings >= 2) {
        out.certified = true;
        break;
      }
    } else if (before != kNegInf) {
      stable_doublings = 0;
    }
    if (hi >= policy.cap_k) break;  // cap hit; certified only if already set
    window *= 2;
  }

  out.log_norm = sup;
  out.k_scanned = scanned;
  out.argmax_k = argmax;
  out.last_delta = std::isfinite(last_delta) ? last_delta : 0.0;
  return out;
}

void SectionMatrix::apply(const std::vector<cplx>& x,
                          std::vector<cplx>& y) const {
  y.assign(static_cast<std::size_t>(rows), cplx(0.0, 0.0));
  for (long k = 0; k < cols; ++k) {
    const cplx xk = x[static_cast<std::size_t>(k)];
    if (xk == cplx(0.0, 0.0)) continue;
    const auto& c = col[static_cast<std::size_t>(k)];
    for (std::size_t r = 0; r < c.size(); ++r) y[r] += c[r] * xk;
  }
}

void SectionMatrix::apply_adjoint(const std::vector<cplx>& y,
                                  std::vector<cplx>& x) const {
  x.assign(static_cast<std::size_t>(cols), cplx(0.0, 0.0));
  for (long k = 0; k < cols; ++k) {
    const auto& c = col[static_cast<std::size_t>(k)];
    cplx acc(0.0, 0.0);
    for (std::size_t r = 0; r < c.size(); ++r) acc += std::conj(c[r]) * y[r];
    x[static_cast<std::size_t>(k)] = acc;
  }
}

PowerIterationResult largest_singular_value(const SectionMatrix& M,
                                            double rel_tol, int max_iterations,
                                            const std::vector<cplx>* warm_start,
                                            std::vector<cplx>* out_vector) {
  PowerIterationResult out;
  if (M.cols == 0 || M.rows == 0) {
    out.converged = true;
    return out;
  }
  std::vector<cplx> x;
  if (warm_start && static_cast<long>(warm_start->size()) == M.cols)
    x = *warm_start;
  else {
    // Deterministic start with all components nonzero and slightly uneven,
    // so it is never orthogonal to the dominant singular vector in practice.
    x.assign(static_cast<std::size_t>(M.cols), cplx(0.0, 0.0));
    for (long k = 0; k < M.cols; ++k)
      x[static_cast<std::size_t>(k)] =
          cplx(1.0 + 0.25 * std::sin(0.7 * static_cast<double>(k) + 0.3), 0.0);
  }

  auto norm2 = [](const std::vector<cplx>& v) {
    double s = 0.0;
    for (const auto& c : v) s += std::norm(c);
    return std::sqrt(s);
  };

  double n0 = norm2(x);
  if (n0 == 0.0) {
    x.assign(static_cast<std::size_t>(M.cols), cplx(1.0, 0.0));
    n0 = norm2(x);
  }
  for (auto& c : x) c /= n0;

  std::vector<cplx> y, z;
  double sigma_prev = -1.0;
  for (int it = 1; it <= max_iterations; ++it) {
    M.apply(x, y);
    const double sigma = norm2(y);
    out.iterations = it;
    if (sigma == 0.0) {
      out.sigma = 0.0;
      out.converged = true;
      break;
    }
    M.apply_adjoint(y, z);
    const double zn = norm2(z);
    if (zn == 0.0) {
      out.sigma = sigma;
      out.converged = true;
      break;
    }
    for (auto& c : z) c /= zn;
    x.swap(z);
    if (sigma_prev >= 0.0 &&
        std::fabs(sigma - sigma_prev) <= rel_tol * sigma) {
      out.sigma = sigma;
      out.converged = true;
      break;
    }
    sigma_prev = sigma;
    out.sigma = sigma;
  }
  if (out_vector) *out_vector = x;
  return out;
}

CoordOperator::CoordOperator(const SpaceParams& space, const CoeffOperator& op,
                             long max_index, const MonomialNormCache* cache)
    : max_index_(max_index), max_shift_(op.max_shift()) {
  std::optional<MonomialNormCache> local;
  if (!cache) local.emplace(space);
  const MonomialNormCache& norms = cache ? *cache : *local;

  for (const auto& term : op.terms()) {
    shifts_.push_back(term.shift);
    std::vector<cplx> e(static_cast<std::size_t>(max_index_) + 1,
                        cplx(0.0, 0.0));
    for (long k = 0; k <= max_index_; ++k) {
      const long d = k + term.shift;
      if (d < 0) continue;
      const cplx w = term.rule.weight(k);
      if (w == cplx(0.0, 0.0)) continue;
      const double ratio = std::exp(norms.log_norm(d) - norms.log_norm(k));
      e[static_cast<std::size_t>(k)] = w * ratio;
    }
    entry_.push_back(std::move(e));
  }
}

std::vector<cplx> CoordOperator::apply(const std::vector<cplx>& x) const {
  const long n = static_cast<long>(x.size());
  if (n - 1 > max_index_)
    throw std::out_of_range("CoordOperator: vector exceeds precomputed range");
  std::vector<cplx> y(
      static_cast<std::size_t>(n + std::max(max_shift_, 0L)), cplx(0.0, 0.0));
  for (std::size_t t = 0; t < shifts_.size(); ++t) {
    const long s = shifts_[t];
    const auto& e = entry_[t];
    for (long k = 0; k < n; ++k) {
      const long d = k + s;
      if (d < 0) continue;
      const cplx c = e[static_cast<std::size_t>(k)];
      if (c == cplx(0.0, 0.0)) continue;
      y[static_cast<std::size_t>(d)] += c * x[static_cast<std::size_t>(k)];
    }
  }
  return y;
}

OperatorNormResult operator_norm_p2(const SpaceParams& space,
                                    const CoeffOperator& op, long section_dim,
                                    double rel_tol,
                                    const MonomialNormCache* cache) {
  space.validate();
  if (space.p != 2.0)
    throw std::invalid_argument("operator_norm_p2: requires p = 2");
  if (section_dim < 1)
    throw std::invalid_argument("operator_norm_p2: section_dim < 1");

  CoordOperator coord(space, op, section_dim, cache);
  SectionMatrix M;
  M.cols = section_dim;
  M.rows = section_dim + std::max(op.max_shift(), 0L);
  M.col.resize(static_cast<std::size_t>(M.cols));
  std::vector<cplx> e(static_cast<std::size_t>(section_dim), cplx(0.0, 0.0));
  for (long k = 0; k < section_dim; ++k) {
    e[static_cast<std::size_t>(k)] = cplx(1.0, 0.0);
    auto y = coord.apply(e);
    y.resize(static_cast<std::size_t>(M.rows), cplx(0.0, 0.0));
    M.col[static_cast<std::size_t>(k)] = std::move(y);
    e[static_cast<std::size_t>(k)] = cplx(0.0, 0.0);
  }

  const auto pi = largest_singular_value(M, rel_tol);
  OperatorNormResult out;
  out.value = pi.sigma;
  out.iterations = pi.iterations;
  out.converged = pi.converged;
  out.section_cols = section_dim;
  return out;
}

LowerBoundResult operator_norm_lower(const SpaceParams& space,
                                     const CoeffOperator& op,
                                     const std::vector<TaylorSeries>& testset,
                                     const QuadratureConfig& cfg) {
  space.validate();
  if (testset.empty())
    throw std::invalid_argument("operator_norm_lower: empty test set");

  auto norm_log = [&](const TaylorSeries& f) -> double {
    if (f.is_zero()) return kNegInf;
    if (space.sup_norm()) return norm_sup(space, f).log_value;
    if (space.p == 2.0) return norm_parseval_log(space, f);
    return norm_quadrature_log(space, f, cfg);
  };

  LowerBoundResult out;
  out.log_value = kNegInf;
  for (std::size_t i = 0; i < testset.size(); ++i) {
    const double nf = norm_log(testset[i]);
    if (nf == kNegInf) continue;
    const double ng = norm_log(op.apply(testset[i]));
    const double ratio = ng - nf;
    if (ratio > out.log_value) {
      out.log_value = ratio;
      out.argmax_index = i;
    }
  }
  out.value = std::exp(out.log_value);
  return out;
}

}  // namespace fockdyn
