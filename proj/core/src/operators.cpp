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

#include "fockdyn/operators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace fockdyn {

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
}

SymbolPolynomial::SymbolPolynomial(std::vector<cplx> coeffs)
    : coeffs_(std::move(coeffs)) {
  while (coeffs_.size() > 1 && coeffs_.back() == cplx(0.0, 0.0))
    coeffs_.pop_back();
  if (coeffs_.empty()) coeffs_.push_back(cplx(0.0, 0.0));
}

cplx SymbolPolynomial::coeff(long j) const {
  if (j < 0 || j >= static_cast<long>(coeffs_.size())) return {0.0, 0.0};
  return coeffs_[static_cast<std::size_t>(j)];
}

bool SymbolPolynomial::is_zero() const {
  return coeffs_.size() == 1 && coeffs_[0] == cplx(0.0, 0.0);
}

std::string SymbolPolynomial::display() const {
  std::ostringstream os;
  bool first = true;
  for (long j = leading_degree(); j >= 0; --j) {
    const cplx a = coeff(j);
    if (a == cplx(0.0, 0.0) && !(j == 0 && first)) continue;
    if (!first) os << " + ";
    first = false;
    if (a.imag() == 0.0)
      os << a.real();
    else
      os << "(" << a.real() << (a.imag() < 0 ? "-" : "+")
         << std::abs(a.imag()) << "i)";
    if (j >= 1) os << "z";
    if (j >= 2) os << "^" << j;
  }
  return os.str();
}

cplx WeightRule::weight(long k) const {
  switch (kind) {
    case Kind::derivative:
      return cplx(static_cast<double>(k), 0.0);
    case Kind::integration:
    case Kind::hardy:
      return cplx(1.0 / static_cast<double>(k + 1), 0.0);
    case Kind::volterra:
      return volterra_coeff * static_cast<double>(volterra_degree) /
             static_cast<double>(k + volterra_degree);
  }
  return {0.0, 0.0};
}

double WeightRule::iterated_log_abs(long k, long n, long shift) const {
  if (n == 0) return 0.0;
  const double kk = static_cast<double>(k);
  const double nn = static_cast<double>(n);
  switch (kind) {
    case Kind::derivative:
      // prod_{i<n} (k - i) = k!/(k-n)!; zero when k < n.
      if (shift != -1) break;
      if (k < n) return kNegInf;
      return std::lgamma(kk + 1.0) - std::lgamma(kk - nn + 1.0);
    case Kind::integration:
      // prod_{i<n} 1/(k+i+1) = k!/(k+n)!
      if (shift != 1) break;
      return std::lgamma(kk + 1.0) - std::lgamma(kk + nn + 1.0);
    case Kind::hardy:
      if (shift != 0) break;
      return -nn * std::log(kk + 1.0);
    case Kind::volterra: {
      // prod_{i<n} j|a|/(k + (i+1) j) = |a|^n Gamma(1 + k/j)/Gamma(n+1+k/j)
      if (shift != volterra_degree) break;
      const double a = std::abs(volterra_coeff);
      if (a == 0.0) return kNegInf;
      const double kj = kk / static_cast<double>(volterra_degree);
      return nn * std::log(a) + std::lgamma(1.0 + kj) -
             std::lgamma(nn + 1.0 + kj);
    }
  }
  throw std::logic_error("iterated_log_abs: rule/shift mismatch");
}

CoeffOperator::CoeffOperator(std::string name, std::vector<ShiftTerm> terms)
    : name_(std::move(name)), terms_(std::move(terms)) {
  for (const auto& t : terms_)
    if (t.shift < -1)
      throw std::invalid_argument("CoeffOperator: shift below -1");
}

long CoeffOperator::max_shift() const {
  long s = 0;
  for (const auto& t : terms_) s = std::max(s, t.shift);
  return s;
}

long CoeffOperator::min_shift() const {
  long s = 0;
  for (const auto& t : terms_) s = std::min(s, t.shift);
  return s;
}

TaylorSeries CoeffOperator::apply(const TaylorSeries& f) const {
  if (f.is_zero() || terms_.empty()) return {};
  const long out_size = f.degree() + std::max(max_shift(), 0L) + 1;
  std::vector<cplx> out(static_cast<std::size_t>(out_size), cplx(0.0, 0.0));
  for (const auto& t : terms_) {
    for (long k = 0; k <= f.degree(); ++k) {
      const cplx a = f.coeff(k);
      if (a == cplx(0.0, 0.0)) continue;
      const cplx w = t.rule.weight(k);
      if (w == cplx(0.0, 0.0)) continue;
      const long d = k + t.shift;
      if (d < 0) continue;  // unreachable: only D shifts down and w_0 = 0
      out[static_cast<std::size_t>(d)] += w * a;
    }
  }
  return TaylorSeries(std::move(out));
}

TaylorSeries CoeffOperator::iterate_apply(long n, const TaylorSeries& f) const {
  if (n < 0) throw std::invalid_argument("iterate_apply: negative power");
  TaylorSeries g = f;
  for (long i = 0; i < n; ++i) g = apply(g);
  return g;
}

CoeffOperator make_differentiation() {
  return CoeffOperator("D", {ShiftTerm{-1, {WeightRule::Kind::derivative}}});
}

CoeffOperator make_integration() {
  return CoeffOperator("J", {ShiftTerm{+1, {WeightRule::Kind::integration}}});
}

CoeffOperator make_hardy() {
  return CoeffOperator("H", {ShiftTerm{0, {WeightRule::Kind::hardy}}});
}

CoeffOperator make_volterra(const SymbolPolynomial& g) {
  if (g.is_zero())
    throw std::invalid_argument("make_volterra: zero symbol");
  std::vector<ShiftTerm> terms;
  for (long j = 1; j <= g.leading_degree(); ++j) {
    const cplx a = g.coeff(j);
    if (a == cplx(0.0, 0.0)) continue;
    WeightRule rule;
    rule.kind = WeightRule::Kind::volterra;
    rule.volterra_degree = j;
    rule.volterra_coeff = a;
    terms.push_back(ShiftTerm{j, rule});
  }
  // A constant symbol has g' = 0: the zero operator, permitted.
  return CoeffOperator("V(" + g.display() + ")", std::move(terms));
}

TaylorSeries hardy_iterate_closed(long n, const TaylorSeries& f) {
  if (n < 0) throw std::invalid_argument("hardy_iterate_closed: negative power");
  if (f.is_zero()) return {};
  std::vector<cplx> out(f.coeffs());
  for (long k = 0; k <= f.degree(); ++k) {
    const cplx w(1.0 / static_cast<double>(k + 1), 0.0);
    for (long i = 0; i < n; ++i) out[static_cast<std::size_t>(k)] *= w;
  }
  return TaylorSeries(std::move(out));
}

cplx LogCoefficient::value() const {
  return std::polar(std::exp(log_abs), phase);
}

LogCoefficient volterra_monomial_iterate_closed(cplx a, long l, long n,
                                                long k) {
  if (l < 1) throw std::invalid_argument("volterra_monomial_iterate_closed: l < 1");
  if (n < 1) throw std::invalid_argument("volterra_monomial_iterate_closed: n < 1");
  if (k < 0) throw std::invalid_argument("volterra_monomial_iterate_closed: k < 0");
  LogCoefficient out;
  out.degree = l * n + k;
  const double mod = std::abs(a);
  if (mod == 0.0) {
    out.log_abs = kNegInf;
    out.phase = 0.0;
    return out;
  }
  double denom = 0.0;
  for (long j = 1; j <= n; ++j)
    denom += std::log(static_cast<double>(j * l + k));
  out.log_abs = static_cast<double>(n) * (std::log(mod) +
                                          std::log(static_cast<double>(l))) -
                denom;
  double ph = std::fmod(static_cast<double>(n) * std::arg(a),
                        2.0 * std::numbers::pi);
  if (ph > std::numbers::pi) ph -= 2.0 * std::numbers::pi;
  if (ph <= -std::numbers::pi) ph += 2.0 * std::numbers::pi;
  out.phase = ph;
  return out;
}

TaylorSeries k_lambda_apply(cplx a, cplx lambda, long m, const TaylorSeries& f,
                            long trunc_degree) {
  if (m < 1) throw std::invalid_argument("k_lambda_apply: m must be a positive integer");
  if (f.is_zero()) return {};
  if (trunc_degree < f.degree() + m)
    throw std::invalid_argument("k_lambda_apply: trunc_degree below deg f + m");

  // exp(c z^m) truncated: sum_t c^t z^{t m}/t!
  auto exp_series = [&](cplx c) {
    std::vector<cplx> v(static_cast<std::size_t>(trunc_degree) + 1,
                        cplx(0.0, 0.0));
    cplx term(1.0, 0.0);
    for (long t = 0; t * m <= trunc_degree; ++t) {
      v[static_cast<std::size_t>(t * m)] = term;
      term *= c / static_cast<double>(t + 1);
    }
    return TaylorSeries(std::move(v));
  };

  TaylorSeries u = exp_series(-lambda).product_truncated(f, trunc_degree);
  u = u.shifted_up(m - 1).truncated(trunc_degree);
  TaylorSeries v = u.integrated().truncated(trunc_degree);
  TaylorSeries out = exp_series(lambda).product_truncated(v, trunc_degree);
  return out.scaled(a * static_cast<double>(m));
}

}  // namespace fockdyn
