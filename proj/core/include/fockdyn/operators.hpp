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

#include <string>
#include <vector>

#include "fockdyn/series.hpp"

namespace fockdyn {

/// Polynomial symbol g(z) = a_l z^l + ... + a_1 z + a_0 with a_l != 0 for
/// l >= 1; construction trims leading zero coefficients.
class SymbolPolynomial {
 public:
  explicit SymbolPolynomial(std::vector<cplx> coeffs);
  long leading_degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  cplx coeff(long j) const;
  cplx leading_coeff() const { return coeffs_.empty() ? cplx(0.0) : coeffs_.back(); }
  const std::vector<cplx>& coeffs() const { return coeffs_; }
  bool is_zero() const;
  std::string display() const;

 private:
  std::vector<cplx> coeffs_;  // a_0 .. a_l
};

/// Index-dependent weight of a shift term: applied to z^k the term yields
/// weight(k) * z^{k + shift}.
struct WeightRule {
  enum class Kind { derivative, integration, hardy, volterra };
  Kind kind = Kind::derivative;
  long volterra_degree = 0;  // j (the shift) for Kind::volterra
  cplx volterra_coeff = 0.0; // a_j for Kind::volterra

  cplx weight(long k) const;

  /// log |weight(k) * weight(k+s) * ... * weight(k+(n-1)s)| for the term's
  /// own shift s -- the weight product picked up by n applications of a
  /// single-term operator starting from index k. -inf when a factor
  /// vanishes. Closed form via lgamma, O(1) in n.
  double iterated_log_abs(long k, long n, long shift) const;
};

struct ShiftTerm {
  long shift = 0;  // s >= -1 throughout this artifact
  WeightRule rule;
};

/// A finite sum of weighted shifts on Taylor coefficient space. Houses the
/// differentiation, integration, Hardy and Volterra-type operators exactly:
/// their action on polynomials has no discretization error.
class CoeffOperator {
 public:
  CoeffOperator(std::string name, std::vector<ShiftTerm> terms);

  const std::string& name() const { return name_; }
  const std::vector<ShiftTerm>& terms() const { return terms_; }
  bool single_term() const { return terms_.size() == 1; }
  long max_shift() const;
  long min_shift() const;

  TaylorSeries apply(const TaylorSeries& f) const;
  TaylorSeries iterate_apply(long n, const TaylorSeries& f) const;

 private:
  std::string name_;
  std::vector<ShiftTerm> terms_;
};

/// D f = f':                z^k -> k z^{k-1}
CoeffOperator make_differentiation();
/// J f = int_0^z f:         z^k -> z^{k+1}/(k+1)
CoeffOperator make_integration();
/// H f = (1/z) int_0^z f:   z^k -> z^k/(k+1)
CoeffOperator make_hardy();
/// V_g f = int_0^z g' f:    one term per degree-j monomial of g (j >= 1),
///                          z^k -> j a_j z^{k+j}/(k+j).
/// A constant symbol yields the zero operator (no terms).
CoeffOperator make_volterra(const SymbolPolynomial& g);

/// Diagonal closed form of the n-th Hardy iterate: sum a_k z^k/(k+1)^n.
/// Coincides exactly (bitwise) with iterate_apply(make_hardy(), n, f).
TaylorSeries hardy_iterate_closed(long n, const TaylorSeries& f);

/// Single-term result of V_{a z^l}^n (z^k): coefficient
/// a^n l^n / prod_{j=1..n} (j l + k) at degree l n + k, carried as
/// log-magnitude plus phase so deep iterates stay representable.
struct LogCoefficient {
  double log_abs;
  double phase;
  long degree;
  cplx value() const;  // may under/overflow for extreme magnitudes
};
LogCoefficient volterra_monomial_iterate_closed(cplx a, long l, long n, long k);

/// K f(z) = a m e^{lambda z^m} int_0^z e^{-lambda w^m} w^{m-1} f(w) dw,
/// truncated to trunc_degree. Every stage (the two exponential series, the
/// product, the termwise integral) is truncated at trunc_degree; since each
/// stage is degree-nondecreasing, all retained coefficients are exact.
/// Requires integer m >= 1 and trunc_degree >= deg f + m. With lambda = 0
/// this is the Volterra-type operator with symbol a z^m.
TaylorSeries k_lambda_apply(cplx a, cplx lambda, long m, const TaylorSeries& f,
                            long trunc_degree);

}  // namespace fockdyn
