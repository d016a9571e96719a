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

#include "imvs/experiment/config.h"

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "imvs/engine/types.h"
#include "json.hpp"

namespace imvs::experiment {
namespace {

using nlohmann::json;

void CheckKeys(const json& obj, const std::string& where,
               std::initializer_list<const char*> allowed) {
  if (!obj.is_object()) throw ConfigError(where + " must be an object");
  std::set<std::string> known(allowed.begin(), allowed.end());
  for (const auto& item : obj.items()) {
    if (!known.contains(item.key())) {
      throw ConfigError("unknown key " + where + "." + item.key());
    }
  }
}

template <typename T>
void Read(const json& obj, const char* key, const std::string& where, T& out) {
  if (!obj.contains(key)) return;
  const json& v = obj.at(key);
  try {
    if constexpr (std::is_same_v<T, int>) {
      if (!v.is_number_integer()) throw ConfigError("");
    } else if constexpr (std::is_same_v<T, double>) {
      if (!v.is_number()) throw ConfigError("");
    } else if constexpr (std::is_same_v<T, bool>) {
      if (!v.is_boolean()) throw ConfigError("");
    } else if constexpr (std::is_same_v<T, std::string>) {
      if (!v.is_string()) throw ConfigError("");
    }
    out = v.get<T>();
  } catch (const std::exception&) {
    throw ConfigError("bad value for " + where + "." + key);
  }
}

std::vector<double> ReadReals(const json& v, const std::string& what) {
  if (!v.is_array()) throw ConfigError(what + " must be an array");
  std::vector<double> out;
  for (const json& x : v) {
    if (!x.is_number()) throw ConfigError(what + " must hold numbers");
    out.push_back(x.get<double>());
  }
  return out;
}

}  // namespace

std::string ToString(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kUcJoint:
      return "UC-J";
    case Algorithm::kWcbJoint:
      return "WCB-J";
    case Algorithm::kUcMaxPopularity:
      return "UC-MP";
    case Algorithm::kWcbMaxPopularity:
      return "WCB-MP";
  }
  return "?";
}

Algorithm ParseAlgorithm(const std::string& text) {
  for (Algorithm a : {Algorithm::kUcJoint, Algorithm::kWcbJoint,
                      Algorithm::kUcMaxPopularity,
                      Algorithm::kWcbMaxPopularity}) {
    if (ToString(a) == text) return a;
  }
  throw ConfigError("unknown algorithm: " + text);
}

std::string ToString(SweepAxis axis) {
  return axis == SweepAxis::kCacheFraction ? "cache_fraction"
                                           : "mbs_rate_mbps";
}

SweepAxis ParseSweepAxis(const std::string& text) {
  if (text == "cache_fraction") return SweepAxis::kCacheFraction;
  if (text == "mbs_rate_mbps") return SweepAxis::kMbsRate;
  throw ConfigError("unknown sweep axis: " + text);
}

void ExperimentConfig::Validate() const {
  if (profile != "desk" && profile != "evaluation") {
    throw ConfigError("profile must be desk or evaluation");
  }
  try {
    scenario.Validate();
    network.Validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  if (axis_values.empty()) throw ConfigError("sweep.values is empty");
  if (seeds.empty()) throw ConfigError("seeds is empty");
  if (algorithms.empty()) throw ConfigError("algorithms is empty");
  if (std::set<Algorithm>(algorithms.begin(), algorithms.end()).size() !=
      algorithms.size()) {
    throw ConfigError("duplicate algorithm");
  }
  if (std::set<std::uint64_t>(seeds.begin(), seeds.end()).size() !=
      seeds.size()) {
    throw ConfigError("duplicate seed");
  }
  if (std::set<double>(axis_values.begin(), axis_values.end()).size() !=
      axis_values.size()) {
    throw ConfigError("duplicate sweep value");
  }
  auto check_fraction = [](double f) {
    if (!(f >= 0.0 && f <= 1.0)) {
      throw ConfigError("cache fractions must lie in [0, 1]");
    }
  };
  check_fraction(cache_fraction);
  for (double v : axis_values) {
    if (axis == SweepAxis::kCacheFraction) {
      check_fraction(v);
    } else if (!(v >= 0.0) || !std::isfinite(v)) {
      throw ConfigError("MBS rates must be nonnegative");
    }
  }
  engine::GreedyConfig greedy;
  greedy.weights = weights;
  if (weights.size() != static_cast<std::size_t>(domain::kNumGroups)) {
    throw ConfigError("weights needs one entry per constraint group (3)");
  }
  try {
    greedy.Validate();
  } catch (const std::exception& e) {
    throw ConfigError(std::string("weights: ") + e.what());
  }
  if (candidate_mode == domain::CandidateMode::kExhaustiveSubsets &&
      !topology_file && network.num_users > domain::kMaxSubsetUsers) {
    throw ConfigError("exhaustive-subsets needs at most " +
                      std::to_string(domain::kMaxSubsetUsers) + " users");
  }
  if (output.empty()) throw ConfigError("output path is empty");
}

ExperimentConfig DeskProfile() {
  ExperimentConfig c;
  c.profile = "desk";
  c.scenario.anchors = 6;
  c.scenario.virtual_per_gap = 3;
  c.scenario.slots = 5;
  c.network.mbs_radius_m = 400.0;
  c.network.num_sbs = 5;
  // 5 (200/400)^2 = 1.25 small cells per user, as with 20 cells of 100 m.
  c.network.sbs_radius_m = 200.0;
  c.network.num_users = 20;
  c.network.sbs_rate_mbps = 40.0;
  c.network.mbs_rate_mbps = 100.0;
  c.axis = SweepAxis::kCacheFraction;
  c.axis_values = {0.05, 0.10, 0.20};
  c.algorithms = {Algorithm::kUcJoint, Algorithm::kWcbJoint,
                  Algorithm::kUcMaxPopularity, Algorithm::kWcbMaxPopularity};
  for (std::uint64_t s = 1; s <= 10; ++s) c.seeds.push_back(s);
  return c;
}

ExperimentConfig EvaluationProfile() {
  ExperimentConfig c = DeskProfile();
  c.profile = "evaluation";
  c.scenario.anchors = 8;
  c.scenario.virtual_per_gap = 3;
  c.scenario.slots = 20;
  c.network = network::EvaluationTopologyParams();
  c.seeds = {1};
  return c;
}

ExperimentConfig ParseConfig(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  CheckKeys(doc, "config",
            {"profile", "video", "distortion", "popularity", "network",
             "sweep", "algorithms", "seeds", "candidate_mode", "weights",
             "output", "trace_dir", "record_wall_time"});
  std::string profile = "desk";
  Read(doc, "profile", "config", profile);
  ExperimentConfig c;
  if (profile == "desk") {
    c = DeskProfile();
  } else if (profile == "evaluation") {
    c = EvaluationProfile();
  } else {
    throw ConfigError("profile must be desk or evaluation");
  }
  if (doc.contains("video")) {
    const json& v = doc["video"];
    CheckKeys(v, "video", {"anchors", "virtual_per_gap", "slots", "rate_mbps",
                           "segment_seconds"});
    Read(v, "anchors", "video", c.scenario.anchors);
    Read(v, "virtual_per_gap", "video", c.scenario.virtual_per_gap);
    Read(v, "slots", "video", c.scenario.slots);
    Read(v, "rate_mbps", "video", c.scenario.rate_mbps);
    Read(v, "segment_seconds", "video", c.scenario.segment_seconds);
  }
  if (doc.contains("distortion")) {
    const json& v = doc["distortion"];
    CheckKeys(v, "distortion", {"gamma", "alpha", "beta"});
    Read(v, "gamma", "distortion", c.scenario.gamma);
    Read(v, "alpha", "distortion", c.scenario.alpha);
    Read(v, "beta", "distortion", c.scenario.beta);
  }
  if (doc.contains("popularity")) {
    const json& v = doc["popularity"];
    CheckKeys(v, "popularity", {"window", "sigma2"});
    Read(v, "window", "popularity", c.scenario.window);
    Read(v, "sigma2", "popularity", c.scenario.sigma2);
  }
  if (doc.contains("network")) {
    const json& v = doc["network"];
    CheckKeys(v, "network",
              {"mbs_radius_m", "num_sbs", "sbs_radius_m", "num_users",
               "sbs_rate_mbps", "mbs_rate_mbps", "cache_fraction",
               "topology_file"});
    Read(v, "mbs_radius_m", "network", c.network.mbs_radius_m);
    Read(v, "num_sbs", "network", c.network.num_sbs);
    Read(v, "sbs_radius_m", "network", c.network.sbs_radius_m);
    Read(v, "num_users", "network", c.network.num_users);
    Read(v, "sbs_rate_mbps", "network", c.network.sbs_rate_mbps);
    Read(v, "mbs_rate_mbps", "network", c.network.mbs_rate_mbps);
    Read(v, "cache_fraction", "network", c.cache_fraction);
    if (v.contains("topology_file")) {
      std::string path;
      Read(v, "topology_file", "network", path);
      c.topology_file = path;
    }
  }
  if (doc.contains("sweep")) {
    const json& v = doc["sweep"];
    CheckKeys(v, "sweep", {"axis", "values"});
    std::string axis = ToString(c.axis);
    Read(v, "axis", "sweep", axis);
    c.axis = ParseSweepAxis(axis);
    if (v.contains("values")) c.axis_values = ReadReals(v["values"], "values");
  }
  if (doc.contains("algorithms")) {
    if (!doc["algorithms"].is_array()) {
      throw ConfigError("algorithms must be an array");
    }
    c.algorithms.clear();
    for (const json& a : doc["algorithms"]) {
      if (!a.is_string()) throw ConfigError("algorithms must hold strings");
      c.algorithms.push_back(ParseAlgorithm(a.get<std::string>()));
    }
  }
  if (doc.contains("seeds")) {
    if (!doc["seeds"].is_array()) throw ConfigError("seeds must be an array");
    c.seeds.clear();
    for (const json& s : doc["seeds"]) {
      if (!s.is_number_unsigned()) {
        throw ConfigError("seeds must be nonnegative integers");
      }
      c.seeds.push_back(s.get<std::uint64_t>());
    }
  }
  if (doc.contains("candidate_mode")) {
    std::string mode;
    Read(doc, "candidate_mode", "config", mode);
    try {
      c.candidate_mode = domain::ParseCandidateMode(mode);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
  }
  if (doc.contains("weights")) c.weights = ReadReals(doc["weights"], "weights");
  Read(doc, "output", "config", c.output);
  if (doc.contains("trace_dir")) {
    std::string dir;
    Read(doc, "trace_dir", "config", dir);
    c.trace_dir = dir;
  }
  Read(doc, "record_wall_time", "config", c.record_wall_time);
  c.Validate();
  return c;
}

ExperimentConfig LoadConfig(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read config " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return ParseConfig(text.str());
}

std::string CanonicalJson(const ExperimentConfig& c) {
  json doc;
  doc["profile"] = c.profile;
  doc["video"] = {{"anchors", c.scenario.anchors},
                  {"virtual_per_gap", c.scenario.virtual_per_gap},
                  {"slots", c.scenario.slots},
                  {"rate_mbps", c.scenario.rate_mbps},
                  {"segment_seconds", c.scenario.segment_seconds}};
  doc["distortion"] = {{"gamma", c.scenario.gamma},
                       {"alpha", c.scenario.alpha},
                       {"beta", c.scenario.beta}};
  doc["popularity"] = {{"window", c.scenario.window},
                       {"sigma2", c.scenario.sigma2}};
  doc["network"] = {{"mbs_radius_m", c.network.mbs_radius_m},
                    {"num_sbs", c.network.num_sbs},
                    {"sbs_radius_m", c.network.sbs_radius_m},
                    {"num_users", c.network.num_users},
                    {"sbs_rate_mbps", c.network.sbs_rate_mbps},
                    {"mbs_rate_mbps", c.network.mbs_rate_mbps},
                    {"cache_fraction", c.cache_fraction}};
  if (c.topology_file) doc["network"]["topology_file"] = *c.topology_file;
  doc["sweep"] = {{"axis", ToString(c.axis)}, {"values", c.axis_values}};
  json algorithms = json::array();
  for (Algorithm a : c.algorithms) algorithms.push_back(ToString(a));
  doc["algorithms"] = algorithms;
  doc["seeds"] = c.seeds;
  doc["candidate_mode"] = domain::ToString(c.candidate_mode);
  doc["weights"] = c.weights;
  doc["output"] = c.output;
  if (c.trace_dir) doc["trace_dir"] = *c.trace_dir;
  doc["record_wall_time"] = c.record_wall_time;
  return doc.dump(2);
}

std::string ConfigHash(const ExperimentConfig& config) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : CanonicalJson(config)) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016" PRIx64, h);
  return buf;
}

}  // namespace imvs::experiment
