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

#include "fockdyn/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace fockdyn {

namespace {
void trim(std::vector<cplx>& v) {
  while (!v.empty() && v.back() == cplx(0.0, 0.0)) v.pop_back();
}
}  // namespace

TaylorSeries::TaylorSeries(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {
  trim(coeffs_);
}

TaylorSeries TaylorSeries::monomial(long n, cplx c) {
  if (n < 0) throw std::invalid_argument("monomial: negative degree");
  std::vector<cplx> v(static_cast<std::size_t>(n) + 1, cplx(0.0, 0.0));
  v.back() = c;
  return TaylorSeries(std::move(v));
}

cplx TaylorSeries::coeff(long k) const {
  if (k < 0 || k >= static_cast<long>(coeffs_.size())) return {0.0, 0.0};
  return coeffs_[static_cast<std::size_t>(k)];
}

long TaylorSeries::nonzero_count() const {
  long c = 0;
  for (const auto& a : coeffs_)
    if (a != cplx(0.0, 0.0)) ++c;
  return c;
}

cplx TaylorSeries::evaluate(cplx z) const {
  cplx acc(0.0, 0.0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * z + *it;
  return acc;
}

TaylorSeries TaylorSeries::scaled(cplx c) const {
  std::vector<cplx> v(coeffs_);
  for (auto& a : v) a *= c;
  return TaylorSeries(std::move(v));
}

TaylorSeries TaylorSeries::plus(const TaylorSeries& other) const {
  std::vector<cplx> v(std::max(coeffs_.size(), other.coeffs_.size()),
                      cplx(0.0, 0.0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i)
    v[i] += other.coeffs_[i];
  return TaylorSeries(std::move(v));
}

TaylorSeries TaylorSeries::product_truncated(const TaylorSeries& other,
                                             long trunc_degree) const {
  if (is_zero() || other.is_zero() || trunc_degree < 0) return {};
  const long out_deg = std::min(trunc_degree, degree() + other.degree());
  std::vector<cplx> v(static_cast<std::size_t>(out_deg) + 1, cplx(0.0, 0.0));
  for (long i = 0; i <= degree(); ++i) {
    if (coeffs_[static_cast<std::size_t>(i)] == cplx(0.0, 0.0)) continue;
    const long jmax = std::min(other.degree(), out_deg - i);
    for (long j = 0; j <= jmax; ++j)
      v[static_cast<std::size_t>(i + j)] +=
          coeffs_[static_cast<std::size_t>(i)] *
          other.coeffs_[static_cast<std::size_t>(j)];
  }
  return TaylorSeries(std::move(v));
}

TaylorSeries TaylorSeries::integrated() const {
  if (is_zero()) return {};
  std::vector<cplx> v(coeffs_.size() + 1, cplx(0.0, 0.0));
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    v[k + 1] = coeffs_[k] / static_cast<double>(k + 1);
  return TaylorSeries(std::move(v));
}

TaylorSeries TaylorSeries::shifted_up(long k) const {
  if (k < 0) throw std::invalid_argument("shifted_up: negative shift");
  if (is_zero() || k == 0) return *this;
  std::vector<cplx> v(coeffs_.size() + static_cast<std::size_t>(k),
                      cplx(0.0, 0.0));
  std::copy(coeffs_.begin(), coeffs_.end(), v.begin() + k);
  return TaylorSeries(std::move(v));
}

TaylorSeries TaylorSeries::truncated(long degree) const {
  if (degree < 0) return {};
  if (degree >= this->degree()) return *this;
  std::vector<cplx> v(coeffs_.begin(),
                      coeffs_.begin() + static_cast<long>(degree) + 1);
  return TaylorSeries(std::move(v));
}

}  // namespace fockdyn
