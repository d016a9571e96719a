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

// Core value types for submodular maximization under a separable
// d-dimensional knapsack constraint.
//
// The constraints are partitioned into groups. Within a group, every element
// consumes at most one resource (constraint index), so an element's cost is a
// short list of (group, index, amount) triples with distinct groups.

#ifndef IMVS_ENGINE_TYPES_H_
#define IMVS_ENGINE_TYPES_H_

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace imvs::engine {

// Ordinal of a ground-set element. For static instances it indexes the
// per-element cost table; dynamic candidate models assign ids on creation and
// supply their own canonical order.
using ElementId = std::uint32_t;

// Malformed instance: negative cost, missing budget, undefined WCB score.
class InstanceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exhaustive search refused or aborted because the instance is too large.
class InstanceTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// One knapsack constraint: group is 0-based (0..d'-1), index identifies the
// constraint within its group.
struct ConstraintKey {
  int group = 0;
  std::int64_t index = 0;

  auto operator<=>(const ConstraintKey&) const = default;
};

std::string ToString(const ConstraintKey& key);

struct CostEntry {
  ConstraintKey key;
  double amount = 0.0;
};

class CostVector {
 public:
  CostVector() = default;

  // Appends an entry; no validation here, see ValidateCosts().
  CostVector& Add(int group, std::int64_t index, double amount);

  std::span<const CostEntry> entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  // Summed amount over all constraints of `group`.
  double GroupTotal(int group) const;
  int MaxGroup() const;

  CostVector WithoutGroup(int group) const;

  bool operator==(const CostVector&) const;

 private:
  std::vector<CostEntry> entries_;
};

// Budgets H_i^m keyed by constraint.
class BudgetSet {
 public:
  void Set(ConstraintKey key, double budget) { budgets_[key] = budget; }
  void Set(int group, std::int64_t index, double budget) {
    budgets_[{group, index}] = budget;
  }
  std::optional<double> Find(const ConstraintKey& key) const;
  const std::map<ConstraintKey, double>& all() const { return budgets_; }

 private:
  std::map<ConstraintKey, double> budgets_;
};

// Ground set with per-element costs. costs[id] is the cost of element id;
// every element of `ground` must index into `costs`.
struct KnapsackInstance {
  std::vector<ElementId> ground;
  std::vector<CostVector> costs;
  BudgetSet budgets;
};

// Throws InstanceError on negative or non-finite amounts, two entries in one
// group, or a constraint without a budget.
void ValidateCosts(const CostVector& cost, const BudgetSet& budgets);
void ValidateInstance(const KnapsackInstance& instance);

enum class GreedyRule { kUniformCost, kWeightedCostBenefit };

struct GreedyConfig {
  // lambda_i per constraint group; must be nonnegative and sum to 1.
  std::vector<double> weights;
  // Lazy (priority-queue) evaluation. Produces the same picks as the naive
  // scan; the flag exists so the two can be compared.
  bool lazy = true;

  void Validate() const;
};

struct Pick {
  ElementId element = 0;
  double gain = 0.0;
  bool accepted = false;
  std::optional<ConstraintKey> rejected_by;

  bool operator==(const Pick&) const = default;
};

struct SolutionTrace {
  std::vector<Pick> picks;
  // Elements of the final solution, in canonical order.
  std::vector<ElementId> solution;
  double final_value = 0.0;
  std::map<ConstraintKey, double> final_costs;

  std::size_t accepted_count() const;
  bool operator==(const SolutionTrace&) const = default;
};

}  // namespace imvs::engine

#endif  // IMVS_ENGINE_TYPES_H_
