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

#include "imvs/experiment/certify.h"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "imvs/domain/candidates.h"
#include "imvs/engine/random.h"
#include "imvs/network/coverage.h"

namespace imvs::experiment {
namespace {

constexpr int kProbeInstances = 10;

network::CellTopology RandomTopology(Rng& rng, int num_sbs, int num_users,
                                     double segment_bytes, double rate) {
  network::TopologyParams params;
  params.mbs_radius_m = 100.0;
  params.num_sbs = num_sbs;
  params.sbs_radius_m = 1.0;
  params.num_users = num_users;
  network::CellTopology topology = network::GenerateTopology(params, rng.Next());
  for (network::SmallCell& cell : topology.sbs) {
    cell.radius_m = rng.Uniform(40.0, 120.0);
    cell.cache_bytes = rng.Uniform(0.0, 2.5) * segment_bytes;
    cell.rate_mbps = rng.Uniform(0.0, 4.0) * rate;
  }
  topology.mbs_rate_mbps = rng.Uniform(0.0, 4.0) * rate;
  return topology;
}

void RandomDistortion(Rng& rng, domain::ScenarioParams& params) {
  params.gamma = rng.Uniform(0.5, 2.0);
  params.alpha = rng.Uniform(0.0, 0.5);
  params.beta = rng.Uniform(0.05, 1.0);
}

void Accumulate(engine::ProbeReport& total, const engine::ProbeReport& part) {
  total.trials += part.trials;
  total.violations += part.violations;
  total.max_violation = std::max(total.max_violation, part.max_violation);
}

std::string Real(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.10g", x);
  return buf;
}

std::string ProbeLine(const char* name, const engine::ProbeReport& r) {
  return std::string(name) + " trials=" + std::to_string(r.trials) +
         " violations=" + std::to_string(r.violations) +
         " max_violation=" + Real(r.max_violation) + "\n";
}

}  // namespace

domain::Scenario TinyScenario(std::uint64_t seed) {
  Rng rng(seed);
  domain::ScenarioParams params;
  params.anchors = 4;
  params.virtual_per_gap = 1;
  params.slots = 1;
  RandomDistortion(rng, params);
  const int num_sbs = static_cast<int>(rng.UniformInt(1, 2));
  const int num_users = static_cast<int>(rng.UniformInt(1, 3));
  const double segment_bytes =
      params.rate_mbps * 1e6 / 8.0 * params.segment_seconds;
  const network::CellTopology topology = RandomTopology(
      rng, num_sbs, num_users, segment_bytes, params.rate_mbps);
  return domain::BuildScenario(params, topology,
                               network::ComputeCoverage(topology));
}

CertifyReport TinyCertify(int count, std::uint64_t first_seed,
                          std::uint64_t state_limit) {
  if (count < 1) throw std::invalid_argument("need at least one seed");
  CertifyReport out;
  engine::GreedyConfig config;
  config.weights = {0.2, 0.5, 0.3};
  std::vector<double> ratios;
  for (int i = 0; i < count; ++i) {
    const std::uint64_t seed = first_seed + static_cast<std::uint64_t>(i);
    const domain::Scenario scenario = TinyScenario(seed);
    const domain::SubsetProblem problem = domain::BuildSubsetProblem(scenario);
    CertifyRow row;
    row.seed = seed;
    row.num_sbs = scenario.num_bs() - 1;
    row.num_users = scenario.num_users();
    row.elements = static_cast<int>(problem.instance.ground.size());
    row.report = engine::ComputeApproximationReport(
        problem.instance, *problem.oracle, config, state_limit);
    if (!row.report.Certified()) ++out.failures;
    ratios.push_back(row.report.ratio);
    out.rows.push_back(row);
  }
  std::sort(ratios.begin(), ratios.end());
  out.min_ratio = ratios.front();
  const std::size_t mid = ratios.size() / 2;
  out.median_ratio = ratios.size() % 2
                         ? ratios[mid]
                         : 0.5 * (ratios[mid - 1] + ratios[mid]);
  return out;
}

std::string FormatCertify(const CertifyReport& report) {
  std::ostringstream out;
  out << "seed,num_sbs,num_users,elements,base,uc,wcb,opt,ratio,certified\n";
  for (const CertifyRow& row : report.rows) {
    const auto& r = row.report;
    out << row.seed << ',' << row.num_sbs << ',' << row.num_users << ','
        << row.elements << ',' << Real(r.base_value) << ','
        << Real(r.uc_value) << ',' << Real(r.wcb_value) << ','
        << Real(r.opt_value) << ',' << Real(r.ratio) << ','
        << (r.Certified() ? 1 : 0) << '\n';
  }
  out << "# instances " << report.rows.size() << " min_ratio "
      << Real(report.min_ratio) << " median_ratio "
      << Real(report.median_ratio) << " threshold "
      << Real(engine::kCertifyThreshold) << " failures " << report.failures
      << '\n';
  return out.str();
}

domain::Scenario ProbeScenario(std::uint64_t seed) {
  Rng rng(seed);
  domain::ScenarioParams params;
  params.anchors = static_cast<int>(rng.UniformInt(3, 6));
  params.virtual_per_gap = static_cast<int>(rng.UniformInt(0, 3));
  params.slots = static_cast<int>(rng.UniformInt(1, 2));
  RandomDistortion(rng, params);
  const int num_sbs = static_cast<int>(rng.UniformInt(1, 3));
  const int num_users = static_cast<int>(rng.UniformInt(2, 6));
  const double segment_bytes =
      params.rate_mbps * 1e6 / 8.0 * params.segment_seconds;
  const network::CellTopology topology = RandomTopology(
      rng, num_sbs, num_users, segment_bytes, params.rate_mbps);
  return domain::BuildScenario(params, topology,
                               network::ComputeCoverage(topology));
}

ProbeSuiteReport RunProbeSuite(int trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("need at least one trial");
  ProbeSuiteReport out;
  Rng rng(seed);
  const int per = (trials + kProbeInstances - 1) / kProbeInstances;
  for (int i = 0; i < kProbeInstances; ++i) {
    const domain::Scenario scenario = ProbeScenario(rng.Next());
    const domain::SubsetProblem problem = domain::BuildSubsetProblem(scenario);
    const auto& ground = problem.instance.ground;
    Accumulate(out.submodularity,
               engine::SubmodularityProbe(*problem.oracle, ground, per,
                                          rng.Next()));
    Accumulate(out.monotonicity, engine::MonotonicityProbe(
                                     *problem.oracle, ground, per, rng.Next()));
    Accumulate(out.consistency,
               engine::MarginalConsistencyProbe(*problem.oracle, ground, per,
                                                rng.Next()));
    ++out.instances;
  }
  const engine::FunctionOracle square(
      [](std::span<const engine::ElementId> s) {
        const double n = static_cast<double>(s.size());
        return n * n;
      });
  std::vector<engine::ElementId> ground(20);
  for (engine::ElementId e = 0; e < ground.size(); ++e) ground[e] = e;
  out.control = engine::SubmodularityProbe(square, ground, trials, rng.Next());
  return out;
}

std::string FormatProbeSuite(const ProbeSuiteReport& report) {
  return "instances=" + std::to_string(report.instances) + "\n" +
         ProbeLine("submodularity", report.submodularity) +
         ProbeLine("monotonicity", report.monotonicity) +
         ProbeLine("marginal_consistency", report.consistency) +
         ProbeLine("supermodular_control", report.control);
}

}  // namespace imvs::experiment
