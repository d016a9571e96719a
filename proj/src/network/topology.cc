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

#include "imvs/network/topology.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "imvs/engine/random.h"

namespace imvs::network {
namespace {

Point UniformInDisk(Rng& rng, double radius) {
  const double r = radius * std::sqrt(rng.Uniform());
  const double theta = 2.0 * std::numbers::pi * rng.Uniform();
  return {r * std::cos(theta), r * std::sin(theta)};
}

}  // namespace

double Distance(const Point& a, const Point& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

void TopologyParams::Validate() const {
  if (!(mbs_radius_m > 0.0)) {
    throw std::invalid_argument("mbs_radius_m must be positive");
  }
  if (!(sbs_radius_m > 0.0)) {
    throw std::invalid_argument("sbs_radius_m must be positive");
  }
  if (num_sbs <= 0) throw std::invalid_argument("num_sbs must be positive");
  if (num_users <= 0) {
    throw std::invalid_argument("num_users must be positive");
  }
  if (sbs_rate_mbps < 0.0 || mbs_rate_mbps < 0.0 || sbs_cache_bytes < 0.0) {
    throw std::invalid_argument("capacities must be nonnegative");
  }
}

TopologyParams EvaluationTopologyParams() {
  TopologyParams params;
  params.mbs_radius_m = 400.0;
  params.num_sbs = 20;
  params.sbs_radius_m = 100.0;
  params.num_users = 200;
  params.sbs_rate_mbps = 100.0;
  params.mbs_rate_mbps = 200.0;
  return params;
}

CellTopology GenerateTopology(const TopologyParams& params,
                              std::uint64_t seed) {
  params.Validate();
  Rng rng(seed);
  CellTopology topology;
  topology.mbs_radius_m = params.mbs_radius_m;
  topology.mbs_rate_mbps = params.mbs_rate_mbps;
  topology.seed = seed;
  topology.sbs.reserve(params.num_sbs);
  for (int n = 0; n < params.num_sbs; ++n) {
    SmallCell cell;
    cell.position = UniformInDisk(rng, params.mbs_radius_m);
    cell.radius_m = params.sbs_radius_m;
    cell.cache_bytes = params.sbs_cache_bytes;
    cell.rate_mbps = params.sbs_rate_mbps;
    topology.sbs.push_back(cell);
  }
  topology.users.reserve(params.num_users);
  for (int u = 0; u < params.num_users; ++u) {
    topology.users.push_back(UniformInDisk(rng, params.mbs_radius_m));
  }
  return topology;
}

}  // namespace imvs::network
