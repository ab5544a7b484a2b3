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

#include <optional>
#include <vector>

#include "fockdyn/norms.hpp"
#include "fockdyn/operators.hpp"
#include "fockdyn/space.hpp"

namespace fockdyn {

/// Caches log ||z^k|| for one space. Grows on demand; not safe for
/// concurrent use — parameter sweeps give each grid cell its own cache.
class MonomialNormCache {
 public:
  explicit MonomialNormCache(const SpaceParams& space);
  double log_norm(long k) const;
  double log_factorial(long k) const;  // lgamma(k + 1), cached
  const SpaceParams& space() const { return space_; }

 private:
  SpaceParams space_;
  mutable std::vector<double> logs_;
  mutable std::vector<double> logfact_;
};

struct ShiftNormPolicy {
  long initial_k = 256;
  long cap_k = 1L << 22;
  /// A doubling of the index range is "stable" when it moves the running
  /// log-sup by at most this much; two consecutive stable doublings certify.
  double stability_tol = 1e-5;
};

struct ShiftNormResult {
  double log_norm = 0.0;
  bool certified = false;  // sup stabilized before the index cap
  long k_scanned = 0;
  long argmax_k = 0;
  double last_delta = 0.0;
};

/// Exact p = 2 norm of the n-th power of a single-term weighted shift: in
/// the orthonormalized monomial basis e_k = z^k/||z^k||, T^n carries e_k to
/// entry(k) e_{k+ns} with entry(k) = (prod of iterated weights) *
/// ||z^{k+ns}||/||z^k||, and ||T^n|| = sup_k |entry(k)|. The sup is scanned
/// with doubling index ranges per ShiftNormPolicy.
ShiftNormResult shift_norm_exact_p2(const SpaceParams& space,
                                    const CoeffOperator& op, long power,
                                    const ShiftNormPolicy& policy = {},
                                    const MonomialNormCache* cache = nullptr);

/// Columns of an operator section in the orthonormalized basis: column k
/// holds the coordinates of (operator) e_k. Rows may exceed cols.
struct SectionMatrix {
  long cols = 0;
  long rows = 0;
  std::vector<std::vector<cplx>> col;  // col[k][r], dense, length rows

  void apply(const std::vector<cplx>& x, std::vector<cplx>& y) const;
  void apply_adjoint(const std::vector<cplx>& y, std::vector<cplx>& x) const;
};

struct PowerIterationResult {
  double sigma = 0.0;  // largest singular value of the section
  int iterations = 0;
  bool converged = false;
};

/// Largest singular value by power iteration on M*M. Deterministic start
/// vector; warm_start (if given, length cols) seeds the iteration, which
/// makes sweeps over slowly-varying sections cheap.
PowerIterationResult largest_singular_value(
    const SectionMatrix& M, double rel_tol = 1e-10, int max_iterations = 50000,
    const std::vector<cplx>* warm_start = nullptr,
    std::vector<cplx>* out_vector = nullptr);

/// Action of op on orthonormalized coordinates:
///   (T x)_{k+s} += weight(k) * ||z^{k+s}||/||z^k|| * x_k,
/// with the norm ratios precomputed up to max_index. Entries of a bounded
/// operator are bounded, so no log-domain carrying is needed here.
class CoordOperator {
 public:
  CoordOperator(const SpaceParams& space, const CoeffOperator& op,
                long max_index, const MonomialNormCache* cache = nullptr);
  /// y must have size >= in.size() + max(max_shift, 0); zero-filled by callee.
  std::vector<cplx> apply(const std::vector<cplx>& x) const;
  long max_shift() const { return max_shift_; }

 private:
  long max_index_;
  long max_shift_;
  std::vector<long> shifts_;
  std::vector<std::vector<cplx>> entry_;  // per term: entry[k]
};

/// Finite-section p = 2 operator norm: largest singular value of the
/// (K + max shift) x K section in the orthonormalized basis, by power
/// iteration on the normal matrix. Lower-biased for multi-term operators
/// (missing columns only); agrees with shift_norm_exact_p2 on single-term
/// operators as K grows.
struct OperatorNormResult {
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
  long section_cols = 0;
};
OperatorNormResult operator_norm_p2(const SpaceParams& space,
                                    const CoeffOperator& op, long section_dim,
                                    double rel_tol = 1e-10,
                                    const MonomialNormCache* cache = nullptr);

/// Certified lower bound on the operator norm: max over the test family of
/// ||op f|| / ||f||, using the norm route matching the space (Parseval for
/// p = 2, grid sup for p = inf, quadrature otherwise).
struct LowerBoundResult {
  double log_value = 0.0;
  double value = 0.0;
  std::size_t argmax_index = 0;
};
LowerBoundResult operator_norm_lower(const SpaceParams& space,
                                     const CoeffOperator& op,
                                     const std::vector<TaylorSeries>& testset,
                                     const QuadratureConfig& cfg = {});

}  // namespace fockdyn
