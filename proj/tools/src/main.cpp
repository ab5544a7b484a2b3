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

#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

using namespace fockdyn::cli;

int main(int argc, char** argv) {
  CLI::App app{
      "fockdyn: numerical operator dynamics on weighted Fock-type spaces"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_override;
  long nmax_override = 0;
  double tol_override = 0.0;
  int jobs_override = 0;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--config", config_path, "experiment configuration file")
        ->required();
    cmd->add_option("--out", out_override, "output directory (overrides config)");
    cmd->add_option("--nmax", nmax_override,
                    "iterate / monomial range (overrides config)");
    cmd->add_option("--tol", tol_override, "tolerance (overrides config)");
    cmd->add_option("--jobs", jobs_override, "worker threads (overrides config)");
  };

  auto* norms = app.add_subcommand(
      "norms", "tabulate closed-form vs quadrature monomial norms");
  add_common(norms);
  auto* classify = app.add_subcommand(
      "classify", "emit closed-form classification records per grid cell");
  add_common(classify);
  auto* probe = app.add_subcommand(
      "probe", "run iterate/ergodic/resolvent probes and cross-checks");
  add_common(probe);
  auto* report =
      app.add_subcommand("report", "aggregate prior artifacts into a summary");
  report->add_option("--out", out_override, "artifact directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (report->parsed()) {
      cmd_report(out_override, std::cout);
      return 0;
    }
    ExperimentConfig cfg = ExperimentConfig::parse_file(config_path);
    if (!out_override.empty()) cfg.out = out_override;
    if (nmax_override > 0) {
      cfg.nmax = nmax_override;
      cfg.nmax_norms = nmax_override;
    }
    if (tol_override > 0.0) cfg.tol = tol_override;
    if (jobs_override > 0) cfg.jobs = jobs_override;
    cfg.validate();

    if (norms->parsed()) cmd_norms(cfg, std::cout);
    if (classify->parsed()) cmd_classify(cfg, std::cout);
    if (probe->parsed()) cmd_probe(cfg, std::cout);
    return 0;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const ComputationError& e) {
    std::cerr << "computational failure: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
