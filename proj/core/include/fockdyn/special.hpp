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

#include <span>

namespace fockdyn {

/// log(sum_i exp(x[i])) evaluated without overflow. Returns -inf for an
/// empty span or when every entry is -inf.
double log_sum_exp(std::span<const double> xs);

/// Regularized upper incomplete gamma Q(s, x) = Gamma(s, x) / Gamma(s),
/// s > 0, x >= 0. Series expansion for x < s + 1, Lentz continued fraction
/// otherwise; both scaled through lgamma so large s is safe.
double gamma_q(double s, double x);

/// Complement P(s, x) = 1 - Q(s, x).
double gamma_p(double s, double x);

}  // namespace fockdyn
