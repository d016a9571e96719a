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

// Sweep configuration. JSON schema and units are described in
// docs/config_schema.md.

#ifndef IMVS_EXPERIMENT_CONFIG_H_
#define IMVS_EXPERIMENT_CONFIG_H_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "imvs/domain/candidates.h"
#include "imvs/domain/scenario.h"
#include "imvs/network/topology.h"

namespace imvs::experiment {

enum class Algorithm { kUcJoint, kWcbJoint, kUcMaxPopularity, kWcbMaxPopularity };

// "UC-J", "WCB-J", "UC-MP", "WCB-MP".
std::string ToString(Algorithm algorithm);
Algorithm ParseAlgorithm(const std::string& text);

enum class SweepAxis { kCacheFraction, kMbsRate };

std::string ToString(SweepAxis axis);
SweepAxis ParseSweepAxis(const std::string& text);

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ExperimentConfig {
  std::string profile = "desk";
  domain::ScenarioParams scenario;
  network::TopologyParams network;
  // Cache capacity per small cell as a fraction of the whole video.
  double cache_fraction = 0.1;
  // Fixed topology instead of one generated per seed.
  std::optional<std::string> topology_file;
  SweepAxis axis = SweepAxis::kCacheFraction;
  std::vector<double> axis_values;
  std::vector<Algorithm> algorithms;
  std::vector<std::uint64_t> seeds;
  domain::CandidateMode candidate_mode =
      domain::CandidateMode::kSingletonAugment;
  std::vector<double> weights = {0.2, 0.5, 0.3};
  std::string output = "results.csv";
  std::optional<std::string> trace_dir;
  bool record_wall_time = false;

  // Throws ConfigError.
  void Validate() const;
};

// Desk profile: 5 small cells of 200 m at 40 Mbps, 20 users, V_p = 6, L = 3,
// T = 5, R_0 = 100 Mbps; cache sweep {5%, 10%, 20%}; 10 seeds.
ExperimentConfig DeskProfile();
// Evaluation scale: 20 small cells of 100 m at 100 Mbps, 200 users,
// V_p = 8, L = 3, T = 20, R_0 = 200 Mbps.
ExperimentConfig EvaluationProfile();

// Starts from the profile named in the document and applies overrides.
// Throws ConfigError on unknown keys, bad types or invalid values.
ExperimentConfig ParseConfig(const std::string& json_text);
ExperimentConfig LoadConfig(const std::string& path);

// Fully expanded, key-sorted JSON.
std::string CanonicalJson(const ExperimentConfig& config);
// FNV-1a 64 of CanonicalJson, as 16 hex digits.
std::string ConfigHash(const ExperimentConfig& config);

}  // namespace imvs::experiment

#endif  // IMVS_EXPERIMENT_CONFIG_H_
