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

#ifndef IMVS_EXPERIMENT_SWEEP_H_
#define IMVS_EXPERIMENT_SWEEP_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "imvs/domain/scenario.h"
#include "imvs/experiment/config.h"
#include "imvs/network/topology.h"

namespace imvs::experiment {

struct SweepRow {
  std::uint64_t seed = 0;
  double axis_value = 0.0;
  Algorithm algorithm = Algorithm::kUcJoint;
  double objective = 0.0;
  double baseline = 0.0;
  std::optional<double> wall_time_ms;
  std::size_t accepted = 0;
  std::size_t picks = 0;
};

// Checks evaluated over the rows of one sweep.
struct PropertyReport {
  // Joint vs max-popularity with the same greedy rule, per (seed, point).
  int dominance_checked = 0;
  int dominance_violations = 0;
  int dominance_strict = 0;
  // Consecutive sweep points per (algorithm, seed).
  int monotone_checked = 0;
  int monotone_violations = 0;
  // UC-J and WCB-J with identical picks and values, per (seed, point).
  int uc_wcb_compared = 0;
  int uc_wcb_identical = 0;
  std::vector<std::string> messages;

  bool ok() const {
    return dominance_violations == 0 && monotone_violations == 0;
  }
};

struct SweepResult {
  // Sorted by (seed, axis value, algorithm).
  std::vector<SweepRow> rows;
  PropertyReport properties;
};

// Topology for one seed with the sweep point applied to the capacities.
network::CellTopology PointTopology(const ExperimentConfig& config,
                                    std::uint64_t seed, double axis_value);

domain::Scenario PointScenario(const ExperimentConfig& config,
                               std::uint64_t seed, double axis_value);

// Runs every (seed, point, algorithm). Writes traces when trace_dir is set.
// Throws ConfigError before running anything if the config is invalid.
SweepResult RunSweep(const ExperimentConfig& config);

std::string FormatCsv(const SweepResult& result, const ExperimentConfig& config);
std::string FormatMetadata(const SweepResult& result,
                           const ExperimentConfig& config);

// Writes the CSV and its .meta.json sidecar; returns 0, or 2 when a
// property check failed.
int RunSweepCommand(const ExperimentConfig& config);

}  // namespace imvs::experiment

#endif  // IMVS_EXPERIMENT_SWEEP_H_
