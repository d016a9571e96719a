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

// Macro-cell topology: one MBS at the origin and N small cells, with users
// scattered over the macro cell. Distances are in meters, rates in Mbps and
// cache sizes in bytes.

#ifndef IMVS_NETWORK_TOPOLOGY_H_
#define IMVS_NETWORK_TOPOLOGY_H_

#include <cstdint>
#include <string>
#include <vector>

namespace imvs::network {

struct Point {
  double x = 0.0;
  double y = 0.0;

  bool operator==(const Point&) const = default;
};

double Distance(const Point& a, const Point& b);

struct SmallCell {
  Point position;
  double radius_m = 0.0;
  double cache_bytes = 0.0;
  double rate_mbps = 0.0;

  bool operator==(const SmallCell&) const = default;
};

struct CellTopology {
  double mbs_radius_m = 0.0;
  // Transmission capacity left at the MBS after the two extreme views have
  // been delivered to everyone.
  double mbs_rate_mbps = 0.0;
  std::vector<SmallCell> sbs;
  std::vector<Point> users;
  std::uint64_t seed = 0;

  int num_sbs() const { return static_cast<int>(sbs.size()); }
  int num_users() const { return static_cast<int>(users.size()); }

  bool operator==(const CellTopology&) const = default;
};

struct TopologyParams {
  double mbs_radius_m = 400.0;
  int num_sbs = 20;
  double sbs_radius_m = 100.0;
  int num_users = 200;
  double sbs_rate_mbps = 100.0;
  double sbs_cache_bytes = 0.0;
  double mbs_rate_mbps = 200.0;

  // Throws std::invalid_argument on non-positive counts or radii.
  void Validate() const;
};

// Evaluation defaults: 400 m cell, 20 small cells of 100 m at 100 Mbps,
// 200 users.
TopologyParams EvaluationTopologyParams();

// Small-cell centers and users i.i.d. uniform over the macro-cell disk.
// Deterministic in `seed`.
CellTopology GenerateTopology(const TopologyParams& params,
                              std::uint64_t seed);

}  // namespace imvs::network

#endif  // IMVS_NETWORK_TOPOLOGY_H_
