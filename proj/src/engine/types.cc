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

#include "imvs/engine/types.h"

#include <algorithm>
#include <cmath>
#include <set>

namespace imvs::engine {

std::string ToString(const ConstraintKey& key) {
  return std::to_string(key.group) + ":" + std::to_string(key.index);
}

CostVector& CostVector::Add(int group, std::int64_t index, double amount) {
  entries_.push_back({{group, index}, amount});
  return *this;
}

double CostVector::GroupTotal(int group) const {
  double total = 0.0;
  for (const CostEntry& entry : entries_) {
    if (entry.key.group == group) total += entry.amount;
  }
  return total;
}

int CostVector::MaxGroup() const {
  int max_group = -1;
  for (const CostEntry& entry : entries_) {
    max_group = std::max(max_group, entry.key.group);
  }
  return max_group;
}

CostVector CostVector::WithoutGroup(int group) const {
  CostVector out;
  for (const CostEntry& entry : entries_) {
    if (entry.key.group != group) out.entries_.push_back(entry);
  }
  return out;
}

bool CostVector::operator==(const CostVector& other) const {
  return std::equal(entries_.begin(), entries_.end(), other.entries_.begin(),
                    other.entries_.end(),
                    [](const CostEntry& a, const CostEntry& b) {
                      return a.key == b.key && a.amount == b.amount;
                    });
}

std::optional<double> BudgetSet::Find(const ConstraintKey& key) const {
  auto it = budgets_.find(key);
  if (it == budgets_.end()) return std::nullopt;
  return it->second;
}

void ValidateCosts(const CostVector& cost, const BudgetSet& budgets) {
  std::set<int> groups;
  for (const CostEntry& entry : cost.entries()) {
    if (entry.key.group < 0) {
      throw InstanceError("negative constraint group " +
                          ToString(entry.key));
    }
    if (!std::isfinite(entry.amount) || entry.amount < 0.0) {
      throw InstanceError("invalid cost amount on " + ToString(entry.key));
    }
    if (!groups.insert(entry.key.group).second) {
      throw InstanceError("element touches two constraints in group " +
                          std::to_string(entry.key.group));
    }
    if (!budgets.Find(entry.key)) {
      throw InstanceError("no budget for constraint " + ToString(entry.key));
    }
  }
}

void ValidateInstance(const KnapsackInstance& instance) {
  for (const auto& [key, budget] : instance.budgets.all()) {
    if (!std::isfinite(budget) || budget < 0.0) {
      throw InstanceError("invalid budget on " + ToString(key));
    }
  }
  std::set<ElementId> seen;
  for (ElementId e : instance.ground) {
    if (e >= instance.costs.size()) {
      throw InstanceError("element " + std::to_string(e) + " has no cost");
    }
    if (!seen.insert(e).second) {
      throw InstanceError("duplicate element " + std::to_string(e));
    }
    ValidateCosts(instance.costs[e], instance.budgets);
  }
}

void GreedyConfig::Validate() const {
  double sum = 0.0;
  for (double w : weights) {
    if (!std::isfinite(w) || w < 0.0) {
      throw InstanceError("WCB weights must be nonnegative");
    }
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    throw InstanceError("WCB weights must sum to 1");
  }
}

std::size_t SolutionTrace::accepted_count() const {
  return static_cast<std::size_t>(
      std::count_if(picks.begin(), picks.end(),
                    [](const Pick& p) { return p.accepted; }));
}

}  // namespace imvs::engine
