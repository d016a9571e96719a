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

#include "imvs/experiment/sweep.h"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <tuple>

#include "imvs/baselines/max_popularity.h"
#include "imvs/domain/solve.h"
#include "imvs/engine/tolerance.h"
#include "imvs/engine/trace_io.h"
#include "imvs/network/coverage.h"
#include "imvs/network/topology_json.h"
#include "json.hpp"

namespace imvs::experiment {
namespace {

// Shortest text that reads back to the same double.
std::string Real(double x) {
  char buf[32];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, end);
}

double TotalVideoBytes(const domain::ScenarioParams& p) {
  return p.anchors * p.slots * p.rate_mbps * 1e6 / 8.0 * p.segment_seconds;
}

bool IsJoint(Algorithm a) {
  return a == Algorithm::kUcJoint || a == Algorithm::kWcbJoint;
}

engine::GreedyRule RuleOf(Algorithm a) {
  return a == Algorithm::kUcJoint || a == Algorithm::kUcMaxPopularity
             ? engine::GreedyRule::kUniformCost
             : engine::GreedyRule::kWeightedCostBenefit;
}

// Pick sequence by ground element, so runs with different id numbering
// compare equal when they made the same choices.
std::vector<std::pair<std::string, bool>> PickLabels(
    const domain::SolveResult& r) {
  std::vector<std::pair<std::string, bool>> out;
  for (const engine::Pick& p : r.trace.picks) {
    out.emplace_back(domain::ToString(r.elements.at(p.element)), p.accepted);
  }
  return out;
}

void CheckProperties(const ExperimentConfig& config, SweepResult& result) {
  PropertyReport& report = result.properties;
  std::map<std::tuple<std::uint64_t, double, Algorithm>, double> value;
  for (const SweepRow& row : result.rows) {
    value[{row.seed, row.axis_value, row.algorithm}] = row.objective;
  }
  auto has = [&](Algorithm a) {
    return std::find(config.algorithms.begin(), config.algorithms.end(), a) !=
           config.algorithms.end();
  };
  std::vector<double> points = config.axis_values;
  std::sort(points.begin(), points.end());
  const std::pair<Algorithm, Algorithm> pairs[] = {
      {Algorithm::kUcJoint, Algorithm::kUcMaxPopularity},
      {Algorithm::kWcbJoint, Algorithm::kWcbMaxPopularity}};
  for (std::uint64_t seed : config.seeds) {
    for (double x : points) {
      for (const auto& [joint, mp] : pairs) {
        if (!has(joint) || !has(mp)) continue;
        const double j = value.at({seed, x, joint});
        const double m = value.at({seed, x, mp});
        ++report.dominance_checked;
        if (!engine::ApproxGe(j, m)) {
          ++report.dominance_violations;
          report.messages.push_back(
              "dominance: seed " + std::to_string(seed) + " " +
              ToString(config.axis) + "=" + Real(x) + " " + ToString(joint) +
              "=" + Real(j) + " < " + ToString(mp) + "=" + Real(m));
        } else if (!engine::ApproxEq(j, m)) {
          ++report.dominance_strict;
        }
      }
    }
    for (Algorithm a : config.algorithms) {
      for (std::size_t i = 1; i < points.size(); ++i) {
        const double lo = value.at({seed, points[i - 1], a});
        const double hi = value.at({seed, points[i], a});
        ++report.monotone_checked;
        if (!engine::ApproxGe(hi, lo)) {
          ++report.monotone_violations;
          report.messages.push_back(
              "monotone: seed " + std::to_string(seed) + " " + ToString(a) +
              " drops from " + Real(lo) + " at " + Real(points[i - 1]) +
              " to " + Real(hi) + " at " + Real(points[i]));
        }
      }
    }
  }
}

}  // namespace

network::CellTopology PointTopology(const ExperimentConfig& config,
                                    std::uint64_t seed, double axis_value) {
  network::CellTopology topology =
      config.topology_file ? network::LoadTopology(*config.topology_file)
                           : network::GenerateTopology(config.network, seed);
  double fraction = config.cache_fraction;
  if (config.axis == SweepAxis::kCacheFraction) {
    fraction = axis_value;
  } else {
    topology.mbs_rate_mbps = axis_value;
  }
  const double cache = fraction * TotalVideoBytes(config.scenario);
  for (network::SmallCell& cell : topology.sbs) cell.cache_bytes = cache;
  return topology;
}

domain::Scenario PointScenario(const ExperimentConfig& config,
                               std::uint64_t seed, double axis_value) {
  const network::CellTopology topology =
      PointTopology(config, seed, axis_value);
  return domain::BuildScenario(config.scenario, topology,
                               network::ComputeCoverage(topology));
}

SweepResult RunSweep(const ExperimentConfig& config) {
  config.Validate();
  if (config.topology_file) {
    network::CellTopology topology;
    try {
      topology = network::LoadTopology(*config.topology_file);
    } catch (const std::exception& e) {
      throw ConfigError(e.what());
    }
    const auto check =
        network::ValidateScenario(topology, network::ComputeCoverage(topology));
    if (!check.ok()) throw ConfigError("topology: " + check.errors.front());
    if (config.candidate_mode == domain::CandidateMode::kExhaustiveSubsets &&
        topology.num_users() > domain::kMaxSubsetUsers) {
      throw ConfigError("exhaustive-subsets: too many users in topology");
    }
  }
  if (config.trace_dir) std::filesystem::create_directories(*config.trace_dir);

  engine::GreedyConfig greedy;
  greedy.weights = config.weights;
  SweepResult result;
  for (std::uint64_t seed : config.seeds) {
    for (std::size_t point = 0; point < config.axis_values.size(); ++point) {
      const double x = config.axis_values[point];
      const domain::Scenario scenario = PointScenario(config, seed, x);
      const double baseline = domain::BaselineValue(scenario);
      std::map<Algorithm, std::vector<std::pair<std::string, bool>>> joint;
      std::map<Algorithm, double> joint_value;
      for (Algorithm a : config.algorithms) {
        const auto start = std::chrono::steady_clock::now();
        domain::SolveResult run =
            IsJoint(a)
                ? domain::Solve(scenario, RuleOf(a), greedy,
                                config.candidate_mode)
                : baselines::ScheduleGivenCache(
                      baselines::MaxPopularityCache(scenario), scenario,
                      RuleOf(a), greedy, config.candidate_mode);
        const auto stop = std::chrono::steady_clock::now();
        SweepRow row;
        row.seed = seed;
        row.axis_value = x;
        row.algorithm = a;
        row.objective = run.trace.final_value;
        row.baseline = baseline;
        if (config.record_wall_time) {
          row.wall_time_ms =
              std::chrono::duration<double, std::milli>(stop - start).count();
        }
        row.accepted = run.trace.accepted_count();
        row.picks = run.trace.picks.size();
        result.rows.push_back(row);
        if (IsJoint(a)) {
          joint[a] = PickLabels(run);
          joint_value[a] = run.trace.final_value;
        }
        if (config.trace_dir) {
          std::string name = ToString(a);
          std::replace(name.begin(), name.end(), '-', '_');
          const auto path = std::filesystem::path(*config.trace_dir) /
                            ("seed" + std::to_string(seed) + "_point" +
                             std::to_string(point) + "_" + name + ".tsv");
          std::ofstream out(path, std::ios::binary);
          if (!out) throw std::runtime_error("cannot write " + path.string());
          engine::WriteTrace(out, run.trace, run.Labeler());
        }
      }
      if (joint.size() == 2) {
        ++result.properties.uc_wcb_compared;
        if (joint[Algorithm::kUcJoint] == joint[Algorithm::kWcbJoint] &&
            joint_value[Algorithm::kUcJoint] ==
                joint_value[Algorithm::kWcbJoint]) {
          ++result.properties.uc_wcb_identical;
        }
      }
    }
  }
  std::sort(result.rows.begin(), result.rows.end(),
            [](const SweepRow& a, const SweepRow& b) {
              return std::tie(a.seed, a.axis_value, a.algorithm) <
                     std::tie(b.seed, b.axis_value, b.algorithm);
            });
  CheckProperties(config, result);
  return result;
}

std::string FormatCsv(const SweepResult& result,
                      const ExperimentConfig& config) {
  std::ostringstream out;
  out << "seed,axis,axis_value,algorithm,objective,baseline_v0,wall_time_ms,"
         "accepted_picks,total_picks\n";
  for (const SweepRow& row : result.rows) {
    out << row.seed << ',' << ToString(config.axis) << ','
        << Real(row.axis_value) << ',' << ToString(row.algorithm) << ','
        << Real(row.objective) << ',' << Real(row.baseline) << ','
        << (row.wall_time_ms ? Real(*row.wall_time_ms) : "NA") << ','
        << row.accepted << ',' << row.picks << '\n';
  }
  return out.str();
}

std::string FormatMetadata(const SweepResult& result,
                           const ExperimentConfig& config) {
  using nlohmann::json;
  const domain::ScenarioParams& s = config.scenario;
  auto flag = [](bool is_default) {
    return is_default ? "local default" : "configured";
  };
  json doc;
  doc["config"] = json::parse(CanonicalJson(config));
  doc["config_hash"] = ConfigHash(config);
  doc["seeds"] = config.seeds;
  doc["rows"] = result.rows.size();
  doc["provenance"] = {
      {"distortion.gamma", flag(s.gamma == domain::kDefaultGamma)},
      {"distortion.alpha", flag(s.alpha == domain::kDefaultAlpha)},
      {"distortion.beta", flag(s.beta == domain::kDefaultBeta)},
      {"video.segment_seconds", flag(s.segment_seconds == 1.0)},
      {"d_max", "max over views of d_v(v_1, v_Vp)"},
      {"mbs_rate", "capacity left after the two extreme views"},
      {"profile", config.profile == "desk" ? "reduced desk-scale profile"
                                           : "evaluation-scale profile"}};
  const PropertyReport& p = result.properties;
  doc["properties"] = {{"dominance_checked", p.dominance_checked},
                       {"dominance_violations", p.dominance_violations},
                       {"dominance_strict", p.dominance_strict},
                       {"monotone_checked", p.monotone_checked},
                       {"monotone_violations", p.monotone_violations},
                       {"uc_wcb_compared", p.uc_wcb_compared},
                       {"uc_wcb_identical", p.uc_wcb_identical},
                       {"messages", p.messages}};
  return doc.dump(2) + "\n";
}

int RunSweepCommand(const ExperimentConfig& config) {
  const SweepResult result = RunSweep(config);
  auto write = [](const std::string& path, const std::string& text) {
    const auto parent = std::filesystem::path(path).parent_path();
    if (!parent.empty()) std::filesystem::create_directories(parent);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
  };
  write(config.output, FormatCsv(result, config));
  write(config.output + ".meta.json", FormatMetadata(result, config));
  for (const std::string& m : result.properties.messages) {
    std::fprintf(stderr, "violation: %s\n", m.c_str());
  }
  return result.properties.ok() ? 0 : 2;
}

}  // namespace imvs::experiment
