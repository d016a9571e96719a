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

#include "imvs/network/coverage.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace imvs::network {
namespace {

// Closed disk: the boundary counts as covered.
bool Within(const Point& p, const Point& center, double radius) {
  return Distance(p, center) <= radius;
}

}  // namespace

CoverageSets CoverageSets::FromUsersOfBs(
    std::vector<std::vector<int>> users_of_bs, int num_users) {
  if (users_of_bs.empty() ||
      static_cast<int>(users_of_bs[0].size()) != num_users) {
    throw std::invalid_argument("the MBS must cover every user");
  }
  CoverageSets sets;
  sets.bs_of_user.assign(num_users, {});
  for (int n = 0; n < static_cast<int>(users_of_bs.size()); ++n) {
    auto& users = users_of_bs[n];
    std::sort(users.begin(), users.end());
    for (int u : users) {
      if (u < 0 || u >= num_users) {
        throw std::invalid_argument("user index out of range");
      }
      sets.bs_of_user[u].push_back(n);
    }
  }
  sets.users_of_bs = std::move(users_of_bs);
  return sets;
}

CoverageSets ComputeCoverage(const CellTopology& topology) {
  const int num_users = topology.num_users();
  std::vector<std::vector<int>> users_of_bs(topology.num_sbs() + 1);
  for (int u = 0; u < num_users; ++u) users_of_bs[0].push_back(u);
  for (int n = 0; n < topology.num_sbs(); ++n) {
    const SmallCell& cell = topology.sbs[n];
    for (int u = 0; u < num_users; ++u) {
      if (Within(topology.users[u], cell.position, cell.radius_m)) {
        users_of_bs[n + 1].push_back(u);
      }
    }
  }
  return CoverageSets::FromUsersOfBs(std::move(users_of_bs), num_users);
}

ValidationResult ValidateScenario(const CellTopology& topology,
                                  const CoverageSets& coverage) {
  ValidationResult result;
  if (topology.num_sbs() == 0) result.errors.push_back("no small cells");
  if (topology.num_users() == 0) result.errors.push_back("no users");
  if (!(topology.mbs_radius_m > 0.0)) {
    result.errors.push_back("macro-cell radius must be positive");
  }
  if (topology.mbs_rate_mbps < 0.0) {
    result.errors.push_back("negative MBS rate");
  } else if (topology.mbs_rate_mbps == 0.0) {
    result.warnings.push_back("MBS rate is zero");
  }
  const Point origin;
  for (int u = 0; u < topology.num_users(); ++u) {
    if (!Within(topology.users[u], origin, topology.mbs_radius_m)) {
      result.errors.push_back("user " + std::to_string(u) +
                              " lies outside the macro cell");
    }
  }
  for (int n = 0; n < topology.num_sbs(); ++n) {
    const SmallCell& cell = topology.sbs[n];
    const std::string name = "small cell " + std::to_string(n + 1);
    if (!(cell.radius_m > 0.0)) result.errors.push_back(name + ": bad radius");
    if (cell.cache_bytes < 0.0 || cell.rate_mbps < 0.0) {
      result.errors.push_back(name + ": negative capacity");
    }
    if (cell.cache_bytes == 0.0) {
      result.warnings.push_back(name + ": zero cache");
    }
    if (cell.rate_mbps == 0.0) result.warnings.push_back(name + ": zero rate");
  }
  if (coverage.num_bs() != topology.num_sbs() + 1 ||
      coverage.num_users() != topology.num_users()) {
    result.errors.push_back("coverage sets do not match the topology");
    return result;
  }
  for (int n = 1; n < coverage.num_bs(); ++n) {
    if (coverage.users_of_bs[n].empty()) {
      result.warnings.push_back("small cell " + std::to_string(n) +
                                " covers no users");
    }
  }
  for (int u = 0; u < coverage.num_users(); ++u) {
    if (coverage.bs_of_user[u].size() == 1) {
      result.warnings.push_back("user " + std::to_string(u) +
                                " is reachable only through the MBS");
    }
  }
  return result;
}

}  // namespace imvs::network
