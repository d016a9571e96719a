// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// imvs: sweeps, certification, probes and topology utilities.
//
// Exit codes: 0 success, 1 usage or input error, 2 property or bound
// violation.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "imvs/experiment/certify.h"
#include "imvs/experiment/config.h"
#include "imvs/experiment/sweep.h"
#include "imvs/network/coverage.h"
#include "imvs/network/topology_json.h"

namespace {

using namespace imvs;

constexpr int kUsageError = 1;
constexpr int kViolation = 2;

void WriteText(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Joint caching and scheduling for interactive multiview video"};
  app.require_subcommand(1);

  std::string config_path;
  std::string output_override;
  auto* run = app.add_subcommand("run", "run a sweep and write CSV + metadata");
  run->add_option("-c,--config", config_path, "config JSON")->required();
  run->add_option("-o,--output", output_override, "override the CSV path");

  int certify_count = 50;
  std::uint64_t certify_seed = 1;
  std::string certify_output;
  auto* certify =
      app.add_subcommand("certify", "approximation ratio on tiny instances");
  certify->add_option("-n,--instances", certify_count, "number of seeds")
      ->check(CLI::PositiveNumber);
  certify->add_option("-s,--seed", certify_seed, "first seed");
  certify->add_option("-o,--output", certify_output, "CSV path (default stdout)");

  int probe_trials = 1000;
  std::uint64_t probe_seed = 1;
  auto* probe = app.add_subcommand("probe", "monotonicity/submodularity probes");
  probe->add_option("-t,--trials", probe_trials, "samples per property")
      ->check(CLI::PositiveNumber);
  probe->add_option("-s,--seed", probe_seed, "seed");

  std::string topo_config;
  std::uint64_t topo_seed = 1;
  std::string topo_output;
  auto* gen = app.add_subcommand("gen-topology", "generate a topology JSON");
  gen->add_option("-c,--config", topo_config,
                  "config JSON whose network section is used");
  gen->add_option("-s,--seed", topo_seed, "seed");
  gen->add_option("-o,--output", topo_output, "output path (default stdout)");

  std::string validate_path;
  auto* validate = app.add_subcommand("validate", "check a topology JSON");
  validate->add_option("topology", validate_path, "topology JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    if (*run) {
      experiment::ExperimentConfig config =
          experiment::LoadConfig(config_path);
      if (!output_override.empty()) config.output = output_override;
      return experiment::RunSweepCommand(config);
    }
    if (*certify) {
      const auto report =
          experiment::TinyCertify(certify_count, certify_seed);
      WriteText(certify_output, experiment::FormatCertify(report));
      std::fprintf(stderr, "min ratio %.6f, median %.6f, failures %d\n",
                   report.min_ratio, report.median_ratio, report.failures);
      return report.ok() ? 0 : kViolation;
    }
    if (*probe) {
      const auto report = experiment::RunProbeSuite(probe_trials, probe_seed);
      std::cout << experiment::FormatProbeSuite(report);
      return report.ok() ? 0 : kViolation;
    }
    if (*gen) {
      const experiment::ExperimentConfig config =
          topo_config.empty() ? experiment::DeskProfile()
                              : experiment::LoadConfig(topo_config);
      const auto topology = network::GenerateTopology(config.network, topo_seed);
      WriteText(topo_output, network::TopologyToJson(topology));
      return 0;
    }
    if (*validate) {
      const auto topology = network::LoadTopology(validate_path);
      const auto result =
          network::ValidateScenario(topology, network::ComputeCoverage(topology));
      for (const auto& w : result.warnings) std::cout << "warning: " << w << '\n';
      for (const auto& e : result.errors) std::cout << "error: " << e << '\n';
      std::cout << (result.ok() ? "ok" : "invalid") << '\n';
      return result.ok() ? 0 : kViolation;
    }
  } catch (const experiment::ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "invalid input: %s\n", e.what());
    return kUsageError;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kUsageError;
  }
  return kUsageError;
}
