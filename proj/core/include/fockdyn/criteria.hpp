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

#include "fockdyn/dynamics.hpp"
#include "fockdyn/operators.hpp"
#include "fockdyn/space.hpp"

namespace fockdyn {

/// Classifier verdicts encode exactly what the closed-form theory settles:
/// yes/no when a property is characterized, necessary_only when only a
/// necessary condition is available, not_covered when the (space, operator)
/// combination is outside the characterized range.
enum class Verdict { yes, no, necessary_only, not_covered };
const char* to_string(Verdict v);

struct Classification {
  std::string operator_name;
  SpaceParams space;
  Verdict bounded = Verdict::not_covered;
  Verdict compact = Verdict::not_covered;
  Verdict hypercyclic = Verdict::not_covered;
  Verdict supercyclic = Verdict::not_covered;
  Verdict cyclic = Verdict::not_covered;
  Verdict power_bounded = Verdict::not_covered;
  Verdict uniformly_mean_ergodic = Verdict::not_covered;
  Verdict ritt = Verdict::not_covered;
  std::vector<std::string> citations;  // rule identifiers and boundary flags

  /// Throws std::logic_error when the implication chain
  /// hypercyclic => supercyclic => cyclic or compact => not hypercyclic
  /// is violated, or when an unbounded operator carries dynamical verdicts.
  void check_consistency() const;
};

/// Differentiation operator. bounded iff m <= 1; hypercyclic iff m = 1 and
/// (alpha > 1 or (alpha = 1 and p > 3)); supercyclic and cyclic whenever
/// bounded; power bounded = uniformly mean ergodic = Ritt iff m < 1 or
/// (m = 1 and alpha < 1). Requires finite p (p = inf is not covered).
Classification classify_differentiation(const SpaceParams& space);

/// Volterra-type operator with polynomial symbol g of degree l:
/// bounded iff l <= m; compact iff l < m or m is not an integer; never
/// supercyclic; cyclic iff l = 1 (characterized for g = a z^l + b only);
/// l < m gives power bounded + uniformly mean ergodic for every p;
/// l = m: p = inf has power bounded iff |a_l| <= alpha and (monomial top
/// term) uniformly mean ergodic iff |a_l| < alpha, while finite p carries
/// necessary conditions only (|a_l| <= alpha, resp. |a_l| < alpha).
Classification classify_volterra(const SpaceParams& space,
                                 const SymbolPolynomial& g);

/// Integration operator = Volterra operator with symbol z.
Classification classify_integration(const SpaceParams& space);

/// Hardy operator: bounded with norm exactly 1, power bounded, uniformly
/// mean ergodic and Ritt for every finite p; never supercyclic.
Classification classify_hardy(const SpaceParams& space);

/// Spectral radius |a_l| / alpha of the monomial Volterra operator with
/// l = m (integer). Rejects l != m.
double volterra_spectrum_radius(const SpaceParams& space,
                                const SymbolPolynomial& g);

/// Norm bound |a| / (alpha - |lambda|) for the K operator on the sup-norm
/// space; requires |lambda| < alpha. At lambda = 0 this is the |a|/alpha
/// bound for the monomial Volterra operator.
double k_lambda_norm_bound(cplx a, cplx lambda, double alpha);

enum class CheckStatus { agree, disagree, inconclusive };
const char* to_string(CheckStatus s);

struct CrossCheckRow {
  std::string field;
  Verdict classifier;
  ProbeVerdict probe;
  CheckStatus status;
  std::string evidence;
};

struct CrossCheckReport {
  Classification classification;
  std::vector<CrossCheckRow> rows;
  bool any_disagree() const;
};

/// Runs the dynamics probes relevant to the classification and compares
/// every yes/no classifier field with the probe verdict. Disagreements are
/// report content, never exceptions; the classifier is never overridden.
/// Fields with necessary_only / not_covered verdicts produce inconclusive
/// rows. Requires a bounded operator on a p = 2 space (the certified probe
/// routes); unbounded classifications yield an empty row set.
CrossCheckReport cross_check(const SpaceParams& space, const CoeffOperator& op,
                             const Classification& classification, long nmax,
                             const ProbeConfig& cfg = {});

}  // namespace fockdyn
