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

// A frozen problem instance: view grid, distortion model, popularity, the
// network's coverage and capacities, and the ground-element encoding.
//
// Indices are 0-based throughout: base station 0 is the MBS, 1..N the small
// cells; anchors 0..V_p-1; slots 0..T-1.

#ifndef IMVS_DOMAIN_SCENARIO_H_
#define IMVS_DOMAIN_SCENARIO_H_

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "imvs/domain/distortion.h"
#include "imvs/domain/popularity.h"
#include "imvs/domain/view_grid.h"
#include "imvs/engine/types.h"
#include "imvs/network/coverage.h"
#include "imvs/network/topology.h"

namespace imvs::domain {

// Constraint groups of the knapsack.
inline constexpr int kCacheGroup = 0;
inline constexpr int kRateGroup = 1;
inline constexpr int kUniquenessGroup = 2;
inline constexpr int kNumGroups = 3;

// Cache costs and budgets are expressed in MB, rates in Mbps.
inline constexpr double kBytesPerCacheUnit = 1e6;

// Segment (view, slot) of one anchor stored at base station bs and sent to
// `users` in that slot. Ordered lexicographically by (bs, view, slot,
// users).
struct GroundElement {
  int bs = 0;
  int view = 0;
  int slot = 0;
  std::vector<int> users;  // sorted, nonempty

  auto operator<=>(const GroundElement&) const = default;
  bool operator==(const GroundElement&) const = default;
};

std::string ToString(const GroundElement& e);

struct ScenarioParams {
  int anchors = 6;
  int virtual_per_gap = 3;
  int slots = 5;
  double rate_mbps = 2.0;
  double segment_seconds = 1.0;
  double gamma = kDefaultGamma;
  double alpha = kDefaultAlpha;
  double beta = kDefaultBeta;
  double window = kDefaultWindow;
  // Non-positive selects 5 / (L + 1).
  double sigma2 = 0.0;

  void Validate() const;
};

struct Scenario {
  ViewGrid grid;
  DistortionModel model;
  PopularityTable popularity;
  network::CoverageSets coverage;
  int slots = 1;
  double rate_mbps = 2.0;
  // b^t in bytes, one per slot.
  std::vector<double> segment_bytes;
  // C_n in bytes; entry 0 (MBS) is unused.
  std::vector<double> cache_bytes;
  // R_n in Mbps; entry 0 is R_0.
  std::vector<double> rate_budget_mbps;

  int num_bs() const { return coverage.num_bs(); }
  int num_users() const { return coverage.num_users(); }
  int anchors() const { return grid.anchors(); }

  // Flat index of (bs, view, slot), the uniqueness constraint index.
  std::int64_t SegmentIndex(int bs, int view, int slot) const {
    return (static_cast<std::int64_t>(bs) * anchors() + view) * slots + slot;
  }
  std::int64_t SegmentCount() const {
    return static_cast<std::int64_t>(num_bs()) * anchors() * slots;
  }
  bool IsCacheableView(int view) const {
    return view > 0 && view < anchors() - 1;
  }
  // V_p * T * b, extreme views included.
  double TotalVideoBytes() const;
};

Scenario BuildScenario(const ScenarioParams& params,
                       const network::CellTopology& topology,
                       const network::CoverageSets& coverage);

// Throws engine::InstanceError if the element is malformed for the scenario.
void CheckElement(const GroundElement& e, const Scenario& scenario);

// Cache b^t at small cells only, rate |A| r at (n, t), and 1 on the
// (n, v, t) uniqueness constraint.
engine::CostVector ElementCost(const GroundElement& e,
                               const Scenario& scenario);

engine::ConstraintKey CacheKey(int bs);
engine::ConstraintKey RateKey(const Scenario& scenario, int bs, int slot);
engine::ConstraintKey UniquenessKey(const Scenario& scenario, int bs, int view,
                                    int slot);

// Budgets for every constraint: C_n, R_n per slot, and 1 per segment.
engine::BudgetSet MakeBudgets(const Scenario& scenario);

// Summed cost of a policy, recomputed from scratch.
std::vector<std::pair<engine::ConstraintKey, double>> PolicyCosts(
    std::span<const GroundElement> policy, const Scenario& scenario);

}  // namespace imvs::domain

#endif  // IMVS_DOMAIN_SCENARIO_H_
