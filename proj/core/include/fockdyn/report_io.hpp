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

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "fockdyn/criteria.hpp"
#include "fockdyn/dynamics.hpp"

namespace fockdyn {

using json = nlohmann::ordered_json;

/// Fixed-width scientific formatting ("%.12e"): re-runs of the same build
/// produce byte-identical artifacts.
std::string csv_number(double v);

/// Long-format CSV: series,n,value,certified. Orbit rows carry log ||T^n||,
/// gelfand rows ||T^n||^{1/n}, ergodic rows ||A_n - P_hat||, ritt rows
/// n ||T^{n+1} - T^n||, trichotomy rows log(||z^n||/n!).
void write_csv_header(std::ostream& os);
void write_csv(std::ostream& os, const std::string& series,
               const OrbitReport& r);
void write_csv(std::ostream& os, const std::string& series,
               const SpectralReport& r);
void write_csv(std::ostream& os, const std::string& series,
               const ErgodicReport& r);
void write_csv(std::ostream& os, const std::string& series,
               const RittReport& r);
void write_csv(std::ostream& os, const std::string& series,
               const DhcReport& r);

json to_json(const OrbitReport& r);
json to_json(const SpectralReport& r);
json to_json(const ErgodicReport& r);
json to_json(const RittReport& r);
json to_json(const DhcReport& r);
json to_json(const Classification& c);
json to_json(const CrossCheckReport& r);

}  // namespace fockdyn
