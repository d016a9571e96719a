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

#include "imvs/engine/candidate_model.h"

#include <algorithm>

#include "imvs/engine/tolerance.h"

namespace imvs::engine {

StaticKnapsackModel::StaticKnapsackModel(const KnapsackInstance& instance,
                                         const ValueOracle& oracle)
    : instance_(instance),
      session_(oracle.NewSession()),
      accepted_(instance.costs.size(), false) {
  ValidateInstance(instance);
}

std::vector<ElementId> StaticKnapsackModel::InitialCandidates() {
  std::vector<ElementId> ground = instance_.ground;
  std::sort(ground.begin(), ground.end());
  return ground;
}

bool StaticKnapsackModel::IsLive(ElementId e) const { return !accepted_[e]; }

double StaticKnapsackModel::Gain(ElementId e) const {
  return session_->Gain(e);
}

const CostVector& StaticKnapsackModel::ScoringCost(ElementId e) const {
  return instance_.costs[e];
}

std::optional<ConstraintKey> StaticKnapsackModel::FindViolation(
    ElementId e) const {
  for (const CostEntry& entry : instance_.costs[e].entries()) {
    auto used = usage_.find(entry.key);
    const double total =
        (used == usage_.end() ? 0.0 : used->second) + entry.amount;
    if (!ApproxLe(total, *instance_.budgets.Find(entry.key))) {
      return entry.key;
    }
  }
  return std::nullopt;
}

void StaticKnapsackModel::Accept(ElementId e,
                                 std::vector<ElementId>& /*spawned*/) {
  accepted_[e] = true;
  solution_.push_back(e);
  session_->Add(e);
  for (const CostEntry& entry : instance_.costs[e].entries()) {
    usage_[entry.key] += entry.amount;
  }
}

double StaticKnapsackModel::Value() const { return session_->Value(); }

std::vector<ElementId> StaticKnapsackModel::Solution() const {
  std::vector<ElementId> sorted = solution_;
  std::sort(sorted.begin(), sorted.end());
  return sorted;
}

}  // namespace imvs::engine
