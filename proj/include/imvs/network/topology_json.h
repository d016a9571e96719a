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

// JSON form of a CellTopology (schema in docs/topology_schema.md):
//
//   {
//     "format": "imvs-topology/1",
//     "seed": 7,
//     "mbs": {"radius_m": 400.0, "rate_mbps": 200.0},
//     "sbs": [{"x_m": .., "y_m": .., "radius_m": .., "cache_bytes": ..,
//              "rate_mbps": ..}, ...],
//     "users": [{"x_m": .., "y_m": ..}, ...]
//   }

#ifndef IMVS_NETWORK_TOPOLOGY_JSON_H_
#define IMVS_NETWORK_TOPOLOGY_JSON_H_

#include <string>

#include "imvs/network/topology.h"

namespace imvs::network {

std::string TopologyToJson(const CellTopology& topology);

// Throws std::invalid_argument on schema violations.
CellTopology TopologyFromJson(const std::string& text);

void SaveTopology(const CellTopology& topology, const std::string& path);
CellTopology LoadTopology(const std::string& path);

}  // namespace imvs::network

#endif  // IMVS_NETWORK_TOPOLOGY_JSON_H_
