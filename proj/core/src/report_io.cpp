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

#include "fockdyn/report_io.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace fockdyn {

std::string csv_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12e", v);
  return buf;
}

void write_csv_header(std::ostream& os) { os << "series,n,value,certified\n"; }

namespace {
void row(std::ostream& os, const std::string& series, long n, double value,
         bool certified) {
  os << series << ',' << n << ',' << csv_number(value) << ','
     << (certified ? 1 : 0) << '\n';
}
}  // namespace

void write_csv(std::ostream& os, const std::string& series,
               const OrbitReport& r) {
  for (const auto& s : r.norms) row(os, series, s.n, s.log_norm, s.certified);
}

void write_csv(std::ostream& os, const std::string& series,
               const SpectralReport& r) {
  for (const auto& s : r.gelfand)
    row(os, series, s.n, std::exp(s.log_gelfand), r.extrapolation_valid);
}

void write_csv(std::ostream& os, const std::string& series,
               const ErgodicReport& r) {
  for (const auto& s : r.residuals) row(os, series, s.n, s.value, true);
}

void write_csv(std::ostream& os, const std::string& series,
               const RittReport& r) {
  for (const auto& s : r.quantities) row(os, series, s.n, s.value, r.certified);
}

void write_csv(std::ostream& os, const std::string& series,
               const DhcReport& r) {
  for (const auto& s : r.sequence) row(os, series, s.n, s.value, true);
}

json to_json(const OrbitReport& r) {
  json j;
  j["method"] = to_string(r.method);
  j["sup_log_norm"] = r.sup_log_norm;
  j["verdict"] = to_string(r.verdict);
  j["samples"] = r.norms.size();
  return j;
}

json to_json(const SpectralReport& r) {
  json j;
  j["extrapolated_radius"] = r.extrapolated_radius;
  j["extrapolation_valid"] = r.extrapolation_valid;
  j["quasi_nilpotent"] = r.quasi_nilpotent;
  j["note"] = r.note;
  if (!r.gelfand.empty())
    j["last_gelfand"] = std::exp(r.gelfand.back().log_gelfand);
  return j;
}

json to_json(const ErgodicReport& r) {
  json j;
  j["limit"] = r.limit_description;
  j["limit_norm"] = r.limit_norm;
  j["idempotence_residual"] = r.idempotence_residual;
  j["fitted_rate_exponent"] = r.fitted_rate_exponent;
  j["ume_verdict"] = to_string(r.ume_verdict);
  if (!r.residuals.empty()) j["last_residual"] = r.residuals.back().value;
  return j;
}

json to_json(const RittReport& r) {
  json j;
  j["sup_quantity"] = r.sup_estimate;
  j["verdict"] = to_string(r.verdict);
  j["certified"] = r.certified;
  if (!r.quantities.empty()) j["last_quantity"] = r.quantities.back().value;
  return j;
}

json to_json(const DhcReport& r) {
  json j;
  j["tail_slope"] = r.tail_slope;
  j["geometric_rate"] = r.geometric_rate;
  j["log_power"] = r.log_power;
  j["trend"] = to_string(r.trend);
  return j;
}

json to_json(const Classification& c) {
  json j;
  j["operator"] = c.operator_name;
  j["p"] = c.space.sup_norm() ? json("inf") : json(c.space.p);
  j["alpha"] = c.space.alpha;
  j["m"] = c.space.m;
  j["bounded"] = to_string(c.bounded);
  j["compact"] = to_string(c.compact);
  j["hypercyclic"] = to_string(c.hypercyclic);
  j["supercyclic"] = to_string(c.supercyclic);
  j["cyclic"] = to_string(c.cyclic);
  j["power_bounded"] = to_string(c.power_bounded);
  j["uniformly_mean_ergodic"] = to_string(c.uniformly_mean_ergodic);
  j["ritt"] = to_string(c.ritt);
  j["citations"] = c.citations;
  return j;
}

json to_json(const CrossCheckReport& r) {
  json j;
  j["classification"] = to_json(r.classification);
  json rows = json::array();
  for (const auto& row : r.rows) {
    json jr;
    jr["field"] = row.field;
    jr["classifier"] = to_string(row.classifier);
    jr["probe"] = to_string(row.probe);
    jr["status"] = to_string(row.status);
    jr["evidence"] = row.evidence;
    rows.push_back(jr);
  }
  j["rows"] = rows;
  j["any_disagree"] = r.any_disagree();
  return j;
}

}  // namespace fockdyn
