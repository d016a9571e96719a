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

// Benchmark policy: fill every small-cell cache with the most popular
// segments, then schedule deliveries greedily with the caches held fixed.

#ifndef IMVS_BASELINES_MAX_POPULARITY_H_
#define IMVS_BASELINES_MAX_POPULARITY_H_

#include <utility>
#include <vector>

#include "imvs/domain/candidates.h"
#include "imvs/domain/scenario.h"
#include "imvs/domain/solve.h"
#include "imvs/engine/greedy.h"

namespace imvs::baselines {

// cached[n] lists the (view, slot) segments stored at base station n in fill
// order; cached[0] (the MBS) stays empty.
struct CachePlacement {
  std::vector<std::vector<std::pair<int, int>>> cached;
};

// Segments ranked by popularity, ties in (view, slot) order. Each cache takes
// them in rank order, skipping whole segments that no longer fit.
CachePlacement MaxPopularityCache(const domain::Scenario& scenario);

// Allowed-segment mask for the placement; the MBS is implicitly allowed.
std::vector<char> AllowedSegments(const CachePlacement& placement,
                                  const domain::Scenario& scenario);

// Greedy scheduling restricted to cached segments (and the MBS), without
// cache costs; rate and uniqueness budgets still apply.
domain::SolveResult ScheduleGivenCache(
    const CachePlacement& placement, const domain::Scenario& scenario,
    engine::GreedyRule rule, const engine::GreedyConfig& config,
    domain::CandidateMode mode = domain::CandidateMode::kSingletonAugment);

}  // namespace imvs::baselines

#endif  // IMVS_BASELINES_MAX_POPULARITY_H_
