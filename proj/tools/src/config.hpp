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
#include <stdexcept>
#include <string>
#include <vector>

#include "fockdyn/operators.hpp"
#include "fockdyn/space.hpp"

namespace fockdyn::cli {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ComputationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Operator selector: D | J | H | V:a0,a1,... | K:a,lambda,m
/// (complex literals as "x", "xi", "x+yi" or "x-yi").
struct OperatorSpec {
  enum class Kind { differentiation, integration, hardy, volterra, k_lambda };
  Kind kind = Kind::differentiation;
  std::vector<cplx> symbol_coeffs;  // volterra
  cplx k_a{1.0, 0.0};
  cplx k_lambda{0.0, 0.0};
  long k_m = 1;

  static OperatorSpec parse(const std::string& text);
  std::string display() const;
  bool is_coeff_operator() const { return kind != Kind::k_lambda; }
  CoeffOperator build() const;  // throws ConfigError for K
};

/// Flat key=value experiment configuration. Lines starting with '#' and
/// blank lines are ignored; lists are comma separated; "inf" is the
/// sup-norm exponent. Unknown keys are rejected.
struct ExperimentConfig {
  int config_version = 1;
  std::vector<double> p_values{2.0};
  std::vector<double> alpha_values{1.0};
  std::vector<double> m_values{1.0};
  OperatorSpec op{};
  std::vector<std::string> probes{"orbit", "gelfand", "cesaro", "ritt"};
  long nmax = 100;
  long nmax_norms = 60;
  long trunc_dim = 128;
  int theta_points = 0;  // 0 = auto
  double radial_rel_tol = 1e-10;
  double tail_eps = 1e-14;
  double tol = 1e-8;  // acceptance gate for the norms command
  unsigned seed = 42;
  int jobs = 1;
  std::string out = "out";

  static ExperimentConfig parse_stream(std::istream& is);
  static ExperimentConfig parse_file(const std::string& path);
  void validate() const;  // throws ConfigError

  std::vector<SpaceParams> grid() const;  // p-major, then alpha, then m
};

cplx parse_complex(const std::string& text);  // throws ConfigError

}  // namespace fockdyn::cli
