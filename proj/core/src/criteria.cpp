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

#include "fockdyn/criteria.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace fockdyn {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::yes: return "true";
    case Verdict::no: return "false";
    case Verdict::necessary_only: return "necessary-condition-only";
    case Verdict::not_covered: return "not-covered";
  }
  return "?";
}

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::agree: return "AGREE";
    case CheckStatus::disagree: return "DISAGREE";
    case CheckStatus::inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

namespace {

bool is_integer(double x) { return std::isfinite(x) && std::floor(x) == x; }

void mark_dynamics_not_covered(Classification& c) {
  c.hypercyclic = Verdict::not_covered;
  c.supercyclic = Verdict::not_covered;
  c.cyclic = Verdict::not_covered;
  c.power_bounded = Verdict::not_covered;
  c.uniformly_mean_ergodic = Verdict::not_covered;
  c.ritt = Verdict::not_covered;
}

}  // namespace

void Classification::check_consistency() const {
  auto fail = [&](const std::string& why) {
    throw std::logic_error("Classification(" + operator_name + "): " + why);
  };
  if (hypercyclic == Verdict::yes && supercyclic != Verdict::yes)
    fail("hypercyclic without supercyclic");
  if (supercyclic == Verdict::yes &&
      !(cyclic == Verdict::yes))
    fail("supercyclic without cyclic");
  if (compact == Verdict::yes && hypercyclic == Verdict::yes)
    fail("compact and hypercyclic");
  if (bounded == Verdict::no) {
    for (Verdict v : {hypercyclic, supercyclic, cyclic, power_bounded,
                      uniformly_mean_ergodic, ritt})
      if (v != Verdict::not_covered) fail("unbounded with dynamical verdicts");
  }
}

Classification classify_differentiation(const SpaceParams& space) {
  space.validate();
  Classification c;
  c.operator_name = "D";
  c.space = space;
  if (space.sup_norm()) {
    c.citations.push_back("rule:D | sup-norm space not characterized");
    return c;
  }
  const double a = space.alpha, m = space.m, p = space.p;

  c.bounded = m <= 1.0 ? Verdict::yes : Verdict::no;
  c.citations.push_back("rule:D.bounded | bounded iff m<=1");
  if (c.bounded == Verdict::no) {
    c.compact = Verdict::no;
    mark_dynamics_not_covered(c);
    return c;
  }

  c.compact = m < 1.0 ? Verdict::yes : Verdict::no;
  c.citations.push_back("rule:D.compact | compact iff m<1");

  const bool hc = m == 1.0 && (a > 1.0 || (a == 1.0 && p > 3.0));
  c.hypercyclic = hc ? Verdict::yes : Verdict::no;
  c.citations.push_back(
      "rule:D.hypercyclic | m=1 and (alpha>1 or (alpha=1 and p>3))");
  c.supercyclic = Verdict::yes;
  c.cyclic = Verdict::yes;
  c.citations.push_back("rule:D.supercyclic | always, when bounded");

  const bool pbume = m < 1.0 || (m == 1.0 && a < 1.0);
  c.power_bounded = pbume ? Verdict::yes : Verdict::no;
  c.uniformly_mean_ergodic = c.power_bounded;
  c.ritt = c.power_bounded;
  c.citations.push_back(
      "rule:D.pb-ume-ritt | all three iff m<1 or (m=1 and alpha<1)");
  if (m == 1.0 && a == 1.0) c.citations.push_back("boundary:alpha=1");
  if (m == 1.0 && a == 1.0 && p == 3.0) c.citations.push_back("boundary:p=3");
  return c;
}

Classification classify_volterra(const SpaceParams& space,
                                 const SymbolPolynomial& g) {
  space.validate();
  if (g.is_zero())
    throw std::invalid_argument("classify_volterra: zero symbol");
  Classification c;
  c.operator_name = "V(" + g.display() + ")";
  c.space = space;
  const long l = g.leading_degree();
  const double m = space.m, a = space.alpha;
  const double al = std::abs(g.leading_coeff());

  if (l == 0) {
    // Nonzero constant symbol: g' = 0, the zero operator.
    c.bounded = Verdict::yes;
    c.compact = Verdict::yes;
    c.hypercyclic = Verdict::no;
    c.supercyclic = Verdict::no;
    c.cyclic = Verdict::no;
    c.power_bounded = Verdict::yes;
    c.uniformly_mean_ergodic = Verdict::yes;
    c.ritt = Verdict::yes;
    c.citations.push_back("rule:V.zero-operator | constant symbol");
    return c;
  }

  c.bounded = static_cast<double>(l) <= m ? Verdict::yes : Verdict::no;
  c.citations.push_back("rule:V.bounded | bounded iff deg g <= m");
  if (c.bounded == Verdict::no) {
    c.compact = Verdict::no;
    mark_dynamics_not_covered(c);
    return c;
  }

  c.compact = (static_cast<double>(l) < m || !is_integer(m)) ? Verdict::yes
                                                             : Verdict::no;
  c.citations.push_back(
      "rule:V.compact | compact iff deg g < m or m not an integer");

  c.supercyclic = Verdict::no;
  c.hypercyclic = Verdict::no;
  c.citations.push_back("rule:V.supercyclic | never (range vanishes at 0)");

  // Cyclicity is characterized for symbols a z^l + b only.
  bool pure_top = true;
  for (long j = 1; j < l; ++j)
    if (g.coeff(j) != cplx(0.0, 0.0)) pure_top = false;
  if (l == 1)
    c.cyclic = Verdict::yes;
  else if (pure_top)
    c.cyclic = Verdict::no;
  else
    c.cyclic = Verdict::not_covered;
  c.citations.push_back("rule:V.cyclic | for a z^l + b: cyclic iff l=1");

  if (static_cast<double>(l) < m || !is_integer(m)) {
    c.power_bounded = Verdict::yes;
    c.uniformly_mean_ergodic = Verdict::yes;
    c.citations.push_back(
        "rule:V.quasinilpotent | deg g < m: compact, quasi-nilpotent, power "
        "bounded, uniformly mean ergodic");
  } else {
    // l = m, integer.
    if (space.sup_norm()) {
      c.power_bounded = al <= a ? Verdict::yes : Verdict::no;
      c.uniformly_mean_ergodic = al < a ? Verdict::yes : Verdict::no;
      c.citations.push_back(
          "rule:V.pb-supnorm | l=m, p=inf: power bounded iff |a_l|<=alpha");
      c.citations.push_back(
          "rule:V.ume-supnorm | l=m, p=inf: top-term mean ergodic iff "
          "|a_l|<alpha (monomial top term)");
    } else {
      c.power_bounded = al > a ? Verdict::no : Verdict::necessary_only;
      c.uniformly_mean_ergodic = Verdict::necessary_only;
      c.citations.push_back(
          "rule:V.pb-necessary | l=m, p<inf: |a_l|<=alpha necessary for power "
          "boundedness");
      c.citations.push_back(
          "rule:V.ume-necessary | l=m, p<inf: |a_l|<alpha necessary for power "
          "bounded + uniformly mean ergodic (monomial top term)");
    }
    if (al == a) c.citations.push_back("boundary:|a_l|=alpha");
  }
  // The resolvent condition is not characterized for Volterra symbols.
  c.ritt = Verdict::not_covered;
  return c;
}

Classification classify_integration(const SpaceParams& space) {
  Classification c =
      classify_volterra(space, SymbolPolynomial({cplx(0.0), cplx(1.0)}));
  c.operator_name = "J";
  return c;
}

Classification classify_hardy(const SpaceParams& space) {
  space.validate();
  Classification c;
  c.operator_name = "H";
  c.space = space;
  if (space.sup_norm()) {
    c.citations.push_back("rule:H | sup-norm space not characterized");
    return c;
  }
  c.bounded = Verdict::yes;
  c.citations.push_back("rule:H.bounded | norm exactly 1");
  c.power_bounded = Verdict::yes;
  c.uniformly_mean_ergodic = Verdict::yes;
  c.ritt = Verdict::yes;
  c.citations.push_back(
      "rule:H.pb-ume-ritt | power bounded, uniformly mean ergodic, Ritt for "
      "every finite p");
  c.hypercyclic = Verdict::no;
  c.supercyclic = Verdict::no;
  c.citations.push_back("rule:H.supercyclic | never (fixes constants)");
  c.cyclic = Verdict::not_covered;
  c.compact = Verdict::not_covered;
  return c;
}

double volterra_spectrum_radius(const SpaceParams& space,
                                const SymbolPolynomial& g) {
  space.validate();
  if (g.is_zero())
    throw std::invalid_argument("volterra_spectrum_radius: zero symbol");
  const long l = g.leading_degree();
  if (!is_integer(space.m) || static_cast<double>(l) != space.m)
    throw std::invalid_argument(
        "volterra_spectrum_radius: requires deg g = m, m integer");
  return std::abs(g.leading_coeff()) / space.alpha;
}

double k_lambda_norm_bound(cplx a, cplx lambda, double alpha) {
  if (!(alpha > 0.0))
    throw std::invalid_argument("k_lambda_norm_bound: alpha must be positive");
  if (a == cplx(0.0, 0.0)) return 0.0;
  if (!(std::abs(lambda) < alpha))
    throw std::invalid_argument("k_lambda_norm_bound: requires |lambda| < alpha");
  return std::abs(a) / (alpha - std::abs(lambda));
}

bool CrossCheckReport::any_disagree() const {
  for (const auto& r : rows)
    if (r.status == CheckStatus::disagree) return true;
  return false;
}

namespace {

CheckStatus status_vs(Verdict classifier, ProbeVerdict probe) {
  if (classifier != Verdict::yes && classifier != Verdict::no)
    return CheckStatus::inconclusive;
  if (probe == ProbeVerdict::inconclusive) return CheckStatus::inconclusive;
  const bool both_yes = classifier == Verdict::yes && probe == ProbeVerdict::yes;
  const bool both_no = classifier == Verdict::no && probe == ProbeVerdict::no;
  return (both_yes || both_no) ? CheckStatus::agree : CheckStatus::disagree;
}

std::string fmt_double(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

}  // namespace

CrossCheckReport cross_check(const SpaceParams& space, const CoeffOperator& op,
                             const Classification& classification, long nmax,
                             const ProbeConfig& cfg) {
  CrossCheckReport report;
  report.classification = classification;
  if (classification.bounded != Verdict::yes || space.p != 2.0)
    return report;  // nothing certified to probe against

  const NormMethod method = op.single_term() ? NormMethod::exact_shift
                                             : NormMethod::matrix_section;
  const OrbitReport orbit = iterate_norm_sequence(space, op, nmax, method, cfg);
  const ErgodicReport ergodic = cesaro_report(space, op, nmax, cfg);
  const RittReport ritt = ritt_sequence(space, op, nmax, cfg);

  // Power boundedness against the orbit trend. bounded-so-far evidence is
  // consistent with a power bounded classification but cannot witness
  // unboundedness on a finite range.
  {
    CrossCheckRow row;
    row.field = "power_bounded";
    row.classifier = classification.power_bounded;
    switch (orbit.verdict) {
      case OrbitTrend::growing: row.probe = ProbeVerdict::no; break;
      case OrbitTrend::decaying: row.probe = ProbeVerdict::yes; break;
      case OrbitTrend::bounded_so_far:
        row.probe = classification.power_bounded == Verdict::yes
                        ? ProbeVerdict::yes
                        : ProbeVerdict::inconclusive;
        break;
    }
    row.status = status_vs(row.classifier, row.probe);
    row.evidence = std::string("orbit=") + to_string(orbit.verdict) +
                   " sup_log=" + fmt_double(orbit.sup_log_norm);
    report.rows.push_back(row);
  }
  {
    CrossCheckRow row;
    row.field = "uniformly_mean_ergodic";
    row.classifier = classification.uniformly_mean_ergodic;
    row.probe = ergodic.ume_verdict;
    row.status = status_vs(row.classifier, row.probe);
    row.evidence = "last_residual=" +
                   fmt_double(ergodic.residuals.back().value) + " limit=" +
                   ergodic.limit_description;
    report.rows.push_back(row);
  }
  {
    CrossCheckRow row;
    row.field = "ritt";
    row.classifier = classification.ritt;
    row.probe = ritt.verdict;
    row.status = status_vs(row.classifier, row.probe);
    row.evidence = "sup_quantity=" + fmt_double(ritt.sup_estimate);
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace fockdyn
