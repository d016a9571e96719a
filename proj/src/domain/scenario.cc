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

#include "imvs/domain/scenario.h"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace imvs::domain {

std::string ToString(const GroundElement& e) {
  std::ostringstream out;
  out << "bs=" << e.bs << " view=" << e.view << " slot=" << e.slot
      << " users=";
  for (std::size_t i = 0; i < e.users.size(); ++i) {
    out << (i ? "," : "") << e.users[i];
  }
  return out.str();
}

void ScenarioParams::Validate() const {
  if (anchors <= 2 || anchors > 64) {
    throw std::invalid_argument("anchors must be in 3..64");
  }
  if (virtual_per_gap < 0) {
    throw std::invalid_argument("virtual_per_gap must be >= 0");
  }
  if (slots < 1) throw std::invalid_argument("slots must be >= 1");
  if (!(rate_mbps > 0.0)) throw std::invalid_argument("rate must be positive");
  if (!(segment_seconds > 0.0)) {
    throw std::invalid_argument("segment duration must be positive");
  }
  if (!(window > 0.0)) throw std::invalid_argument("window must be positive");
}

double Scenario::TotalVideoBytes() const {
  double total = 0.0;
  for (double b : segment_bytes) total += b;
  return total * anchors();
}

Scenario BuildScenario(const ScenarioParams& params,
                       const network::CellTopology& topology,
                       const network::CoverageSets& coverage) {
  params.Validate();
  if (coverage.num_bs() != topology.num_sbs() + 1 ||
      coverage.num_users() != topology.num_users()) {
    throw std::invalid_argument("coverage does not match topology");
  }
  Scenario s;
  s.grid = ViewGrid(params.anchors, params.virtual_per_gap);
  s.model = DistortionModel::Uniform(s.grid, params.gamma, params.alpha,
                                     params.beta);
  const double sigma2 =
      params.sigma2 > 0.0 ? params.sigma2 : DefaultSigma2(s.grid);
  s.popularity = BuildPopularity(s.grid, params.slots, params.window, sigma2);
  s.coverage = coverage;
  s.slots = params.slots;
  s.rate_mbps = params.rate_mbps;
  // Mbps * s -> bytes.
  s.segment_bytes.assign(params.slots,
                         params.rate_mbps * 1e6 / 8.0 * params.segment_seconds);
  s.cache_bytes.assign(topology.num_sbs() + 1, 0.0);
  s.rate_budget_mbps.assign(topology.num_sbs() + 1, topology.mbs_rate_mbps);
  for (int n = 0; n < topology.num_sbs(); ++n) {
    s.cache_bytes[n + 1] = topology.sbs[n].cache_bytes;
    s.rate_budget_mbps[n + 1] = topology.sbs[n].rate_mbps;
  }
  return s;
}

void CheckElement(const GroundElement& e, const Scenario& scenario) {
  auto fail = [&](const std::string& why) {
    throw engine::InstanceError("bad element (" + ToString(e) + "): " + why);
  };
  if (e.bs < 0 || e.bs >= scenario.num_bs()) fail("unknown base station");
  if (!scenario.IsCacheableView(e.view)) fail("view is not cacheable");
  if (e.slot < 0 || e.slot >= scenario.slots) fail("slot out of range");
  if (e.users.empty()) fail("no users");
  if (!std::is_sorted(e.users.begin(), e.users.end()) ||
      std::adjacent_find(e.users.begin(), e.users.end()) != e.users.end()) {
    fail("users not sorted and distinct");
  }
  const auto& covered = scenario.coverage.users_of_bs[e.bs];
  if (!std::includes(covered.begin(), covered.end(), e.users.begin(),
                     e.users.end())) {
    fail("user not covered by the base station");
  }
}

engine::ConstraintKey CacheKey(int bs) { return {kCacheGroup, bs}; }

engine::ConstraintKey RateKey(const Scenario& scenario, int bs, int slot) {
  return {kRateGroup, static_cast<std::int64_t>(bs) * scenario.slots + slot};
}

engine::ConstraintKey UniquenessKey(const Scenario& scenario, int bs, int view,
                                    int slot) {
  return {kUniquenessGroup, scenario.SegmentIndex(bs, view, slot)};
}

engine::CostVector ElementCost(const GroundElement& e,
                               const Scenario& scenario) {
  engine::CostVector cost;
  if (e.bs > 0) {
    cost.Add(kCacheGroup, CacheKey(e.bs).index,
             scenario.segment_bytes[e.slot] / kBytesPerCacheUnit);
  }
  cost.Add(kRateGroup, RateKey(scenario, e.bs, e.slot).index,
           static_cast<double>(e.users.size()) * scenario.rate_mbps);
  cost.Add(kUniquenessGroup, UniquenessKey(scenario, e.bs, e.view, e.slot).index,
           1.0);
  return cost;
}

engine::BudgetSet MakeBudgets(const Scenario& scenario) {
  engine::BudgetSet budgets;
  for (int n = 1; n < scenario.num_bs(); ++n) {
    budgets.Set(CacheKey(n), scenario.cache_bytes[n] / kBytesPerCacheUnit);
  }
  for (int n = 0; n < scenario.num_bs(); ++n) {
    for (int t = 0; t < scenario.slots; ++t) {
      budgets.Set(RateKey(scenario, n, t), scenario.rate_budget_mbps[n]);
      for (int v = 1; v < scenario.anchors() - 1; ++v) {
        budgets.Set(UniquenessKey(scenario, n, v, t), 1.0);
      }
    }
  }
  return budgets;
}

std::vector<std::pair<engine::ConstraintKey, double>> PolicyCosts(
    std::span<const GroundElement> policy, const Scenario& scenario) {
  std::map<engine::ConstraintKey, double> totals;
  for (const GroundElement& e : policy) {
    const engine::CostVector cost = ElementCost(e, scenario);
    for (const engine::CostEntry& entry : cost.entries()) {
      totals[entry.key] += entry.amount;
    }
  }
  return {totals.begin(), totals.end()};
}

}  // namespace imvs::domain
