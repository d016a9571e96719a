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

#include "imvs/network/topology_json.h"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace imvs::network {
namespace {

using nlohmann::json;

constexpr char kFormat[] = "imvs-topology/1";

double Real(const json& obj, const char* key) {
  if (!obj.contains(key) || !obj.at(key).is_number()) {
    throw std::invalid_argument(std::string("missing number: ") + key);
  }
  return obj.at(key).get<double>();
}

}  // namespace

std::string TopologyToJson(const CellTopology& topology) {
  json doc;
  doc["format"] = kFormat;
  doc["seed"] = topology.seed;
  doc["mbs"] = {{"radius_m", topology.mbs_radius_m},
                {"rate_mbps", topology.mbs_rate_mbps}};
  json sbs = json::array();
  for (const SmallCell& cell : topology.sbs) {
    sbs.push_back({{"x_m", cell.position.x},
                   {"y_m", cell.position.y},
                   {"radius_m", cell.radius_m},
                   {"cache_bytes", cell.cache_bytes},
                   {"rate_mbps", cell.rate_mbps}});
  }
  doc["sbs"] = std::move(sbs);
  json users = json::array();
  for (const Point& p : topology.users) {
    users.push_back({{"x_m", p.x}, {"y_m", p.y}});
  }
  doc["users"] = std::move(users);
  return doc.dump(2) + "\n";
}

CellTopology TopologyFromJson(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("topology JSON: ") + e.what());
  }
  if (!doc.is_object() || doc.value("format", "") != kFormat) {
    throw std::invalid_argument("topology JSON: expected format " +
                                std::string(kFormat));
  }
  CellTopology topology;
  if (doc.contains("seed")) {
    if (!doc["seed"].is_number_unsigned()) {
      throw std::invalid_argument("topology JSON: seed must be unsigned");
    }
    topology.seed = doc["seed"].get<std::uint64_t>();
  }
  if (!doc.contains("mbs") || !doc["mbs"].is_object()) {
    throw std::invalid_argument("topology JSON: missing mbs");
  }
  topology.mbs_radius_m = Real(doc["mbs"], "radius_m");
  topology.mbs_rate_mbps = Real(doc["mbs"], "rate_mbps");
  if (!doc.contains("sbs") || !doc["sbs"].is_array() ||
      !doc.contains("users") || !doc["users"].is_array()) {
    throw std::invalid_argument("topology JSON: missing sbs or users");
  }
  for (const json& item : doc["sbs"]) {
    SmallCell cell;
    cell.position = {Real(item, "x_m"), Real(item, "y_m")};
    cell.radius_m = Real(item, "radius_m");
    cell.cache_bytes = Real(item, "cache_bytes");
    cell.rate_mbps = Real(item, "rate_mbps");
    topology.sbs.push_back(cell);
  }
  for (const json& item : doc["users"]) {
    topology.users.push_back({Real(item, "x_m"), Real(item, "y_m")});
  }
  return topology;
}

void SaveTopology(const CellTopology& topology, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << TopologyToJson(topology);
  if (!out) throw std::runtime_error("write failed: " + path);
}

CellTopology LoadTopology(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return TopologyFromJson(text.str());
}

}  // namespace imvs::network
