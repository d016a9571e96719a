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

#include "imvs/baselines/max_popularity.h"

#include <algorithm>

#include "imvs/engine/tolerance.h"

namespace imvs::baselines {

CachePlacement MaxPopularityCache(const domain::Scenario& scenario) {
  std::vector<std::pair<int, int>> ranked;
  for (int v = 1; v < scenario.anchors() - 1; ++v) {
    for (int t = 0; t < scenario.slots; ++t) ranked.emplace_back(v, t);
  }
  auto popularity = [&](const std::pair<int, int>& s) {
    return scenario.popularity.At(scenario.grid.GridIndex(s.first), s.second);
  };
  std::stable_sort(ranked.begin(), ranked.end(),
                   [&](const auto& a, const auto& b) {
                     return popularity(a) > popularity(b);
                   });
  CachePlacement placement;
  placement.cached.resize(scenario.num_bs());
  for (int n = 1; n < scenario.num_bs(); ++n) {
    double used = 0.0;
    for (const auto& segment : ranked) {
      const double size = scenario.segment_bytes[segment.second];
      if (!engine::ApproxLe(used + size, scenario.cache_bytes[n])) continue;
      used += size;
      placement.cached[n].push_back(segment);
    }
  }
  return placement;
}

std::vector<char> AllowedSegments(const CachePlacement& placement,
                                  const domain::Scenario& scenario) {
  std::vector<char> allowed(scenario.SegmentCount(), 0);
  for (int n = 0; n < static_cast<int>(placement.cached.size()); ++n) {
    for (const auto& [v, t] : placement.cached[n]) {
      allowed[scenario.SegmentIndex(n, v, t)] = 1;
    }
  }
  return allowed;
}

domain::SolveResult ScheduleGivenCache(const CachePlacement& placement,
                                       const domain::Scenario& scenario,
                                       engine::GreedyRule rule,
                                       const engine::GreedyConfig& config,
                                       domain::CandidateMode mode) {
  domain::JointOptions options;
  options.charge_cache = false;
  options.allowed = AllowedSegments(placement, scenario);
  return domain::Solve(scenario, rule, config, mode, options);
}

}  // namespace imvs::baselines
