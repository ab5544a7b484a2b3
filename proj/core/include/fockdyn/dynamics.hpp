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

#include "fockdyn/operator_norms.hpp"
#include "fockdyn/operators.hpp"
#include "fockdyn/space.hpp"

namespace fockdyn {

/// Probe verdicts are three-valued: finite-range numerics cannot assert an
/// asymptotic statement, only support, contradict, or fail to resolve it.
enum class ProbeVerdict { yes, no, inconclusive };
const char* to_string(ProbeVerdict v);

enum class OrbitTrend { bounded_so_far, growing, decaying };
const char* to_string(OrbitTrend t);

enum class NormMethod { exact_shift, matrix_section, test_vector };
const char* to_string(NormMethod m);

struct ProbeConfig {
  long trunc_dim = 128;   // finite-section columns (grown by n * shift inside)
  double power_tol = 1e-10;
  int power_max_iterations = 50000;
  ShiftNormPolicy shift_policy{};
  /// Dead band for trend detection on log-norm sequences (per step).
  double trend_slope_tol = 1e-3;
  /// Residual level below which a decaying Cesaro tail counts as converged.
  double ume_residual_tol = 0.1;
  /// A yes verdict also requires the limit candidate to be idempotent to
  /// this tolerance (otherwise the range was too short to isolate it).
  double ume_idempotence_tol = 1e-6;
  double qn_radius_threshold = 1e-3;
  double ritt_cap = 10.0;
};

struct NormSample {
  long n;
  double log_norm;
  bool certified;  // two-sided (stabilized scan); false = lower bound
};

struct OrbitReport {
  NormMethod method = NormMethod::exact_shift;
  std::vector<NormSample> norms;
  double sup_log_norm = 0.0;
  OrbitTrend verdict = OrbitTrend::bounded_so_far;
};

/// log ||T^n|| for n = 1..nmax.
///  - exact_shift: certified sup over orthonormal-basis entries (p = 2,
///    single-term operators only);
///  - matrix_section: largest singular value of each power's own exact
///    finite section (p = 2); lower-biased, flagged uncertified;
///  - test_vector: max ratio ||T^n f||/||f|| over a monomial family;
///    certified lower bounds, flagged uncertified as two-sided values.
OrbitReport iterate_norm_sequence(const SpaceParams& space,
                                  const CoeffOperator& op, long nmax,
                                  NormMethod method,
                                  const ProbeConfig& cfg = {});

struct GelfandSample {
  long n;
  double log_gelfand;  // log ||T^n||^{1/n}
};

struct SpectralReport {
  std::vector<GelfandSample> gelfand;
  double extrapolated_radius = 0.0;
  bool extrapolation_valid = false;
  bool quasi_nilpotent = false;
  std::string note;
};

/// Gelfand sequence ||T^n||^{1/n} with a dyadic-tail extrapolation of the
/// limit. Two regimes are distinguished on the last three dyadic indices:
/// a constant negative decrement per doubling means log||T^n||^{1/n} drops
/// like -gamma log n (radius 0, quasi-nilpotent); otherwise the model
/// a + c log(n)/n + d/n is solved for a = log(radius). Single-term p = 2
/// operators get certified norms; multi-term ones fall back to the
/// finite-section route, whose norms (hence the radius) are lower-biased.
SpectralReport gelfand_estimate(const SpaceParams& space,
                                const CoeffOperator& op, long nmax,
                                const ProbeConfig& cfg = {});

struct ErgodicSample {
  long n;
  double value;
};

struct ErgodicReport {
  std::vector<ErgodicSample> residuals;     // ||A_n - P_hat||
  std::vector<ErgodicSample> mean_norms;    // ||A_n||
  std::vector<std::vector<cplx>> limit_block;  // P_hat on the K x K block
  std::string limit_description;            // "zero" | "coefficient-0 projection" | "general"
  double limit_norm = 0.0;
  double idempotence_residual = 0.0;        // ||P_hat^2 - P_hat|| on the block
  double fitted_rate_exponent = 0.0;        // rho in ||A_n - P_hat|| ~ n^-rho
  ProbeVerdict ume_verdict = ProbeVerdict::inconclusive;
};

/// Cesaro means A_n = (1/n) sum_{k<=n} T^k on the truncated orthonormal
/// basis (p = 2). The limit candidate P_hat is the dyadic Richardson
/// combination 2 A_{2 n0} - A_{n0} (n0 = nmax/2), which cancels the O(1/n)
/// term of A_n and leaves an idempotent limit when one exists.
ErgodicReport cesaro_report(const SpaceParams& space, const CoeffOperator& op,
                            long nmax, const ProbeConfig& cfg = {});

/// Vector-level Cesaro residuals ||A_n f - P_hat f|| for any finite p,
/// using the norm route matching the space.
std::vector<ErgodicSample> cesaro_vector_residuals(const SpaceParams& space,
                                                   const CoeffOperator& op,
                                                   long nmax,
                                                   const TaylorSeries& f,
                                                   const QuadratureConfig& qcfg = {});

struct RittReport {
  std::vector<ErgodicSample> quantities;  // (n, n ||T^{n+1} - T^n||)
  double sup_estimate = 0.0;
  ProbeVerdict verdict = ProbeVerdict::inconclusive;
  bool certified = false;
};

/// n ||T^{n+1} - T^n|| for n = 1..nmax. Diagonal single-term operators
/// (shift 0, p = 2) use the certified closed form sup_k |w_k^n (w_k - 1)|;
/// everything else uses the finite-section route.
RittReport ritt_sequence(const SpaceParams& space, const CoeffOperator& op,
                         long nmax, const ProbeConfig& cfg = {});

enum class RatioTrend { to_zero, to_infinity, bounded };
const char* to_string(RatioTrend t);

struct DhcReport {
  std::vector<ErgodicSample> sequence;  // (n, log(||z^n||/n!))
  double tail_slope = 0.0;              // least-squares slope over the last half
  double geometric_rate = 0.0;          // fitted b in a + b n + c log n
  double log_power = 0.0;               // fitted c
  RatioTrend trend = RatioTrend::bounded;
};

/// The sequence log(||z^n||/n!) on a space with m = 1 and finite p, whose
/// tail behaviour is b = -log(alpha) per step plus ((3-p)/(2p)) log n: the
/// trend verdict reads off which regime dominates, with "bounded" reported
/// on the flat boundary.
DhcReport d_hypercyclicity_sequence(const SpaceParams& space, long nmax);

}  // namespace fockdyn
