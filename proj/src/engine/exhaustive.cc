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

#include "imvs/engine/exhaustive.h"

#include <algorithm>
#include <map>

#include "imvs/engine/tolerance.h"

namespace imvs::engine {
namespace {

struct CompactCost {
  std::vector<std::pair<int, double>> entries;  // (constraint slot, amount)
};

class Search {
 public:
  Search(const KnapsackInstance& instance, const ValueOracle& oracle,
         std::uint64_t limit)
      : oracle_(oracle), limit_(limit) {
    ground_ = instance.ground;
    std::sort(ground_.begin(), ground_.end());
    std::map<ConstraintKey, int> slots;
    for (const auto& [key, budget] : instance.budgets.all()) {
      slots.emplace(key, static_cast<int>(budgets_.size()));
      budgets_.push_back(budget);
    }
    for (ElementId e : ground_) {
      CompactCost cost;
      for (const CostEntry& entry : instance.costs[e].entries()) {
        cost.entries.emplace_back(slots.at(entry.key), entry.amount);
      }
      costs_.push_back(std::move(cost));
    }
    usage_.assign(budgets_.size(), 0.0);
  }

  OptimumResult Run() {
    best_value_ = oracle_.Evaluate({});
    Visit(0, best_value_);
    OptimumResult result;
    result.set = best_set_;
    result.value = oracle_.Evaluate(best_set_);
    result.states_visited = states_;
    return result;
  }

 private:
  bool Fits(std::size_t pos) const {
    for (const auto& [slot, amount] : costs_[pos].entries) {
      if (!ApproxLe(usage_[slot] + amount, budgets_[slot])) return false;
    }
    return true;
  }

  // Adds the element's costs and returns the previous usage of its slots.
  std::vector<double> Charge(std::size_t pos) {
    std::vector<double> saved;
    for (const auto& [slot, amount] : costs_[pos].entries) {
      saved.push_back(usage_[slot]);
      usage_[slot] += amount;
    }
    return saved;
  }

  void Restore(std::size_t pos, const std::vector<double>& saved) {
    for (std::size_t i = 0; i < saved.size(); ++i) {
      usage_[costs_[pos].entries[i].first] = saved[i];
    }
  }

  void Visit(std::size_t from, double value) {
    if (++states_ > limit_) {
      throw InstanceTooLarge("exhaustive search exceeded " +
                             std::to_string(limit_) + " states");
    }
    if (value > best_value_) {
      best_value_ = value;
      best_set_ = current_;
      std::sort(best_set_.begin(), best_set_.end());
    }

    std::vector<std::size_t> insertable;
    std::vector<double> gains;
    double bound = value;
    for (std::size_t pos = from; pos < ground_.size(); ++pos) {
      if (!Fits(pos)) continue;
      const double gain = oracle_.Marginal(current_, ground_[pos]);
      insertable.push_back(pos);
      gains.push_back(gain);
      bound += std::max(gain, 0.0);
    }
    if (bound <= best_value_) return;

    for (std::size_t i = 0; i < insertable.size(); ++i) {
      const std::size_t pos = insertable[i];
      current_.push_back(ground_[pos]);
      const std::vector<double> saved = Charge(pos);
      Visit(pos + 1, value + gains[i]);
      Restore(pos, saved);
      current_.pop_back();
    }
  }

  const ValueOracle& oracle_;
  std::uint64_t limit_;
  std::vector<ElementId> ground_;
  std::vector<CompactCost> costs_;
  std::vector<double> budgets_;
  std::vector<double> usage_;
  std::vector<ElementId> current_;
  std::vector<ElementId> best_set_;
  double best_value_ = 0.0;
  std::uint64_t states_ = 0;
};

}  // namespace

OptimumResult ExhaustiveOptimum(const KnapsackInstance& instance,
                                const ValueOracle& oracle,
                                std::uint64_t state_limit) {
  ValidateInstance(instance);
  if (instance.ground.size() > 63) {
    throw InstanceTooLarge("exhaustive search refused: " +
                           std::to_string(instance.ground.size()) +
                           " elements");
  }
  return Search(instance, oracle, state_limit).Run();
}

}  // namespace imvs::engine
