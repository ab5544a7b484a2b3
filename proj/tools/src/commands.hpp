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

#include "config.hpp"

namespace fockdyn::cli {

/// Tabulates closed-form, asymptotic and quadrature monomial norms over the
/// space grid into <out>/norms.csv (+ norms_summary.json). Throws
/// ComputationError when any quadrature fails to converge.
void cmd_norms(const ExperimentConfig& cfg, std::ostream& log);

/// One classification record per grid cell: <out>/classify.csv and
/// classify.json (with rule citations).
void cmd_classify(const ExperimentConfig& cfg, std::ostream& log);

/// Runs the selected probes per grid cell, writes long-format CSVs
/// (orbit/gelfand/cesaro/ritt/dhc/klambda) plus crosscheck.csv and
/// probe_summary.json. Disagreements are summary content, not failures.
void cmd_probe(const ExperimentConfig& cfg, std::ostream& log);

/// Aggregates the *_summary.json files in out_dir into report.json and a
/// short stdout table. Throws ConfigError when no summaries are present.
void cmd_report(const std::string& out_dir, std::ostream& log);

}  // namespace fockdyn::cli
