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

#include "config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace fockdyn::cli {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(trim(cur));
  return out;
}

double parse_double(const std::string& s, const std::string& key) {
  if (s == "inf") return SpaceParams::infinite_p;
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("config: bad number '" + s + "' for key " + key);
  }
}

long parse_long(const std::string& s, const std::string& key) {
  try {
    std::size_t pos = 0;
    const long v = std::stol(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("config: bad integer '" + s + "' for key " + key);
  }
}

std::vector<double> parse_list(const std::string& s, const std::string& key) {
  std::vector<double> out;
  for (const auto& tok : split(s, ','))
    if (!tok.empty()) out.push_back(parse_double(tok, key));
  if (out.empty()) throw ConfigError("config: empty list for key " + key);
  return out;
}

}  // namespace

cplx parse_complex(const std::string& raw) {
  const std::string s = trim(raw);
  if (s.empty()) throw ConfigError("config: empty complex literal");
  // Forms: "x", "xi", "x+yi", "x-yi".
  if (s.back() == 'i') {
    const std::string body = s.substr(0, s.size() - 1);
    // Find the split sign (skipping a leading sign and exponent signs).
    for (std::size_t i = body.size(); i-- > 1;) {
      if ((body[i] == '+' || body[i] == '-') &&
          body[i - 1] != 'e' && body[i - 1] != 'E') {
        const double re = parse_double(body.substr(0, i), "complex");
        const std::string im_part = body.substr(i);
        const double im = im_part == "+"   ? 1.0
                          : im_part == "-" ? -1.0
                                           : parse_double(im_part, "complex");
        return {re, im};
      }
    }
    const double im =
        body.empty() ? 1.0 : (body == "-" ? -1.0 : parse_double(body, "complex"));
    return {0.0, im};
  }
  return {parse_double(s, "complex"), 0.0};
}

OperatorSpec OperatorSpec::parse(const std::string& text) {
  const std::string s = trim(text);
  OperatorSpec spec;
  if (s == "D") {
    spec.kind = Kind::differentiation;
    return spec;
  }
  if (s == "J") {
    spec.kind = Kind::integration;
    return spec;
  }
  if (s == "H") {
    spec.kind = Kind::hardy;
    return spec;
  }
  if (s.rfind("V:", 0) == 0) {
    spec.kind = Kind::volterra;
    for (const auto& tok : split(s.substr(2), ','))
      spec.symbol_coeffs.push_back(parse_complex(tok));
    if (spec.symbol_coeffs.empty())
      throw ConfigError("operator: V needs symbol coefficients");
    bool all_zero = true;
    for (const auto& c : spec.symbol_coeffs)
      if (c != cplx(0.0)) all_zero = false;
    if (all_zero) throw ConfigError("operator: V symbol is zero");
    return spec;
  }
  if (s.rfind("K:", 0) == 0) {
    spec.kind = Kind::k_lambda;
    const auto parts = split(s.substr(2), ',');
    if (parts.size() != 3)
      throw ConfigError("operator: K needs a,lambda,m");
    spec.k_a = parse_complex(parts[0]);
    spec.k_lambda = parse_complex(parts[1]);
    spec.k_m = parse_long(parts[2], "K.m");
    if (spec.k_m < 1) throw ConfigError("operator: K.m must be >= 1");
    return spec;
  }
  throw ConfigError("operator: unrecognized spec '" + s + "'");
}

std::string OperatorSpec::display() const {
  switch (kind) {
    case Kind::differentiation: return "D";
    case Kind::integration: return "J";
    case Kind::hardy: return "H";
    case Kind::volterra: return build().name();
    case Kind::k_lambda: {
      std::ostringstream os;
      os << "K(a=" << k_a.real();
      if (k_a.imag() != 0.0) os << (k_a.imag() < 0 ? "" : "+") << k_a.imag() << "i";
      os << ",lambda=" << k_lambda.real();
      if (k_lambda.imag() != 0.0)
        os << (k_lambda.imag() < 0 ? "" : "+") << k_lambda.imag() << "i";
      os << ",m=" << k_m << ")";
      return os.str();
    }
  }
  return "?";
}

CoeffOperator OperatorSpec::build() const {
  switch (kind) {
    case Kind::differentiation: return make_differentiation();
    case Kind::integration: return make_integration();
    case Kind::hardy: return make_hardy();
    case Kind::volterra: return make_volterra(SymbolPolynomial(symbol_coeffs));
    case Kind::k_lambda: break;
  }
  throw ConfigError("operator: K is not a coefficient-shift operator");
}

ExperimentConfig ExperimentConfig::parse_stream(std::istream& is) {
  ExperimentConfig cfg;
  std::string line;
  long line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    // Strip comments.
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config line " + std::to_string(line_no) +
                        ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));

    if (key == "config_version")
      cfg.config_version = static_cast<int>(parse_long(value, key));
    else if (key == "p")
      cfg.p_values = parse_list(value, key);
    else if (key == "alpha")
      cfg.alpha_values = parse_list(value, key);
    else if (key == "m")
      cfg.m_values = parse_list(value, key);
    else if (key == "operator")
      cfg.op = OperatorSpec::parse(value);
    else if (key == "probes") {
      cfg.probes.clear();
      for (const auto& tok : split(value, ','))
        if (!tok.empty()) cfg.probes.push_back(tok);
    } else if (key == "nmax")
      cfg.nmax = parse_long(value, key);
    else if (key == "nmax_norms")
      cfg.nmax_norms = parse_long(value, key);
    else if (key == "trunc_dim")
      cfg.trunc_dim = parse_long(value, key);
    else if (key == "theta_points")
      cfg.theta_points = static_cast<int>(parse_long(value, key));
    else if (key == "radial_rel_tol")
      cfg.radial_rel_tol = parse_double(value, key);
    else if (key == "tail_eps")
      cfg.tail_eps = parse_double(value, key);
    else if (key == "tol")
      cfg.tol = parse_double(value, key);
    else if (key == "seed")
      cfg.seed = static_cast<unsigned>(parse_long(value, key));
    else if (key == "jobs")
      cfg.jobs = static_cast<int>(parse_long(value, key));
    else if (key == "out")
      cfg.out = value;
    else
      throw ConfigError("config line " + std::to_string(line_no) +
                        ": unknown key '" + key + "'");
  }
  cfg.validate();
  return cfg;
}

ExperimentConfig ExperimentConfig::parse_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw ConfigError("config: cannot open '" + path + "'");
  return parse_stream(is);
}

void ExperimentConfig::validate() const {
  if (config_version != 1)
    throw ConfigError("config: unsupported config_version");
  if (p_values.empty() || alpha_values.empty() || m_values.empty())
    throw ConfigError("config: empty parameter grid");
  for (const SpaceParams& s : grid()) {
    try {
      s.validate();
    } catch (const std::invalid_argument& e) {
      throw ConfigError(std::string("config: invalid space in grid: ") +
                        e.what());
    }
  }
  if (nmax < 8) throw ConfigError("config: nmax must be >= 8");
  if (nmax_norms < 0) throw ConfigError("config: nmax_norms must be >= 0");
  if (trunc_dim < 8) throw ConfigError("config: trunc_dim must be >= 8");
  if (jobs < 1) throw ConfigError("config: jobs must be >= 1");
  if (!(tol > 0.0)) throw ConfigError("config: tol must be positive");
  const std::vector<std::string> known{"orbit", "gelfand", "cesaro",
                                       "ritt",  "dhc",     "klambda"};
  for (const auto& p : probes)
    if (std::find(known.begin(), known.end(), p) == known.end())
      throw ConfigError("config: unknown probe '" + p + "'");
}

std::vector<SpaceParams> ExperimentConfig::grid() const {
  std::vector<SpaceParams> cells;
  for (double p : p_values)
    for (double alpha : alpha_values)
      for (double m : m_values) cells.push_back(SpaceParams{p, alpha, m});
  return cells;
}

}  // namespace fockdyn::cli
