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

#include <complex>
#include <vector>

namespace fockdyn {

using cplx = std::complex<double>;

/// A truncated entire function: the finite Taylor coefficient sequence
/// a_0..a_N at the origin. Canonical form trims trailing zero coefficients,
/// so degree() is the index of the last stored (nonzero) coefficient; the
/// zero series stores nothing and reports degree -1.
class TaylorSeries {
 public:
  TaylorSeries() = default;
  explicit TaylorSeries(std::vector<cplx> coeffs);

  static TaylorSeries monomial(long n, cplx c = cplx(1.0, 0.0));

  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<cplx>& coeffs() const { return coeffs_; }
  cplx coeff(long k) const;
  long nonzero_count() const;

  cplx evaluate(cplx z) const;  // Horner

  TaylorSeries scaled(cplx c) const;
  TaylorSeries plus(const TaylorSeries& other) const;
  /// Coefficient-wise product, truncated to degree <= trunc_degree.
  TaylorSeries product_truncated(const TaylorSeries& other,
                                 long trunc_degree) const;
  /// Termwise antiderivative vanishing at 0: z^k -> z^{k+1}/(k+1).
  TaylorSeries integrated() const;
  /// Multiplication by z^k.
  TaylorSeries shifted_up(long k) const;
  TaylorSeries truncated(long degree) const;

  bool operator==(const TaylorSeries& other) const = default;

 private:
  std::vector<cplx> coeffs_;
};

}  // namespace fockdyn
