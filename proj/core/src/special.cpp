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

#include "fockdyn/special.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace fockdyn {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// P(s,x) by the lower series, valid and fast for x < s + 1.
double gamma_p_series(double s, double x) {
  double ap = s;
  double sum = 1.0 / s;
  double del = sum;
  for (int i = 0; i < 20000; ++i) {
    ap += 1.0;
    del *= x / ap;
    sum += del;
    if (std::fabs(del) < std::fabs(sum) * 1e-17) break;
  }
  double log_scale = -x + s * std::log(x) - std::lgamma(s);
  return sum * std::exp(log_scale);
}

// Q(s,x) by the modified Lentz continued fraction, for x >= s + 1.
double gamma_q_cf(double s, double x) {
  const double tiny = 1e-300;
  double b = x + 1.0 - s;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 20000; ++i) {
    double an = -static_cast<double>(i) * (static_cast<double>(i) - s);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < 1e-17) break;
  }
  double log_scale = -x + s * std::log(x) - std::lgamma(s);
  return h * std::exp(log_scale);
}

}  // namespace

double log_sum_exp(std::span<const double> xs) {
  double mx = kNegInf;
  for (double x : xs)
    if (x > mx) mx = x;
  if (!std::isfinite(mx)) return mx;  // empty, all -inf, or a +inf/NaN entry
  double acc = 0.0;
  for (double x : xs) acc += std::exp(x - mx);
  return mx + std::log(acc);
}

double gamma_q(double s, double x) {
  if (!(s > 0.0)) throw std::invalid_argument("gamma_q: s must be positive");
  if (!(x >= 0.0)) throw std::invalid_argument("gamma_q: x must be nonnegative");
  if (x == 0.0) return 1.0;
  if (x < s + 1.0) return 1.0 - gamma_p_series(s, x);
  return gamma_q_cf(s, x);
}

double gamma_p(double s, double x) { return 1.0 - gamma_q(s, x); }

}  // namespace fockdyn
