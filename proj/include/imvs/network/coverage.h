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

#ifndef IMVS_NETWORK_COVERAGE_H_
#define IMVS_NETWORK_COVERAGE_H_

#include <string>
#include <vector>

#include "imvs/network/topology.h"

namespace imvs::network {

// Base station 0 is the MBS; 1..N are small cells. Both lists are sorted.
struct CoverageSets {
  std::vector<std::vector<int>> users_of_bs;
  std::vector<std::vector<int>> bs_of_user;

  int num_bs() const { return static_cast<int>(users_of_bs.size()); }
  int num_users() const { return static_cast<int>(bs_of_user.size()); }

  // Builds bs_of_user from users_of_bs; the MBS must list every user.
  static CoverageSets FromUsersOfBs(std::vector<std::vector<int>> users_of_bs,
                                    int num_users);

  bool operator==(const CoverageSets&) const = default;
};

// A user is covered by a small cell when within its radius, boundary
// included. The MBS covers everyone.
CoverageSets ComputeCoverage(const CellTopology& topology);

struct ValidationResult {
  std::vector<std::string> errors;
  std::vector<std::string> warnings;

  bool ok() const { return errors.empty(); }
};

// Hard errors: users outside the macro cell, missing cells or users,
// negative capacities. Warnings: users reachable only through the MBS, small
// cells covering nobody, zero budgets.
ValidationResult ValidateScenario(const CellTopology& topology,
                                  const CoverageSets& coverage);

}  // namespace imvs::network

#endif  // IMVS_NETWORK_COVERAGE_H_
