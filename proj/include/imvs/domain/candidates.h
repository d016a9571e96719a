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

// Candidate generation and the joint caching/scheduling model driven by the
// greedy engine.
//
// Enumerating every user subset per (bs, view, slot) is exponential, so the
// default pool offers single-user elements for empty segments and one-user
// augmentations of selected ones. Accepting an augmentation replaces the
// element it extends. Chains of augmentations reach every subset.

#ifndef IMVS_DOMAIN_CANDIDATES_H_
#define IMVS_DOMAIN_CANDIDATES_H_

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "imvs/domain/scenario.h"
#include "imvs/domain/value.h"
#include "imvs/engine/candidate_model.h"
#include "imvs/engine/types.h"

namespace imvs::domain {

enum class CandidateMode { kSingletonAugment, kExhaustiveSubsets };

std::string ToString(CandidateMode mode);
// Accepts "singleton-augment" and "exhaustive-subsets".
CandidateMode ParseCandidateMode(const std::string& text);

inline constexpr int kMaxSubsetUsers = 12;

// Candidates against the policy `current` (at most one element per segment).
// Throws engine::InstanceTooLarge in exhaustive-subsets mode when a base
// station covers more than kMaxSubsetUsers users.
std::vector<GroundElement> CandidatePool(
    std::span<const GroundElement> current, const Scenario& scenario,
    CandidateMode mode);

// Whether replacing the selected `old_element` with `augmented` keeps every
// budget satisfied: only the rate at (n, t) grows, by r per added user.
bool ReplacementFeasible(std::span<const GroundElement> current,
                         const GroundElement& old_element,
                         const GroundElement& augmented,
                         const Scenario& scenario,
                         const engine::BudgetSet& budgets);

struct JointOptions {
  // Charge cache space. Off when the cache contents are already fixed.
  bool charge_cache = true;
  // Segments (SegmentIndex) that may be used; empty means all. The MBS is
  // always allowed.
  std::vector<char> allowed;
};

// Dynamic model for the singleton-augment pool. Element ids are assigned on
// first appearance; an id always denotes the same ground element.
class JointModel : public engine::CandidateModel {
 public:
  // `scenario` must outlive the model.
  explicit JointModel(const Scenario& scenario, JointOptions options = {});

  std::vector<engine::ElementId> InitialCandidates() override;
  bool IsLive(engine::ElementId e) const override;
  double Gain(engine::ElementId e) const override;
  const engine::CostVector& ScoringCost(engine::ElementId e) const override;
  std::optional<engine::ConstraintKey> FindViolation(
      engine::ElementId e) const override;
  void Accept(engine::ElementId e,
              std::vector<engine::ElementId>& spawned) override;
  bool Precedes(engine::ElementId a, engine::ElementId b) const override;
  double Value() const override { return state_.Value(); }
  std::vector<engine::ElementId> Solution() const override;
  std::map<engine::ConstraintKey, double> Usage() const override;

  const GroundElement& Element(engine::ElementId e) const {
    return entries_[e].element;
  }
  std::vector<GroundElement> Policy() const;
  const engine::BudgetSet& budgets() const { return budgets_; }

 private:
  static constexpr engine::ElementId kNone = ~engine::ElementId{0};

  struct Entry {
    GroundElement element;
    engine::CostVector cost;
    // Element this one extends, or kNone for a single-user element.
    engine::ElementId parent = kNone;
    // The user not covered by the parent.
    int added_user = 0;
    std::int64_t segment = 0;
  };

  engine::ElementId Register(GroundElement element, engine::ElementId parent,
                             int added_user);
  double UsageOf(const engine::ConstraintKey& key) const;

  const Scenario& scenario_;
  JointOptions options_;
  GapTable gaps_;
  DeliveryState state_;
  engine::BudgetSet budgets_;
  std::vector<Entry> entries_;
  // Keyed by (segment, user) and by (parent, added user).
  std::map<std::pair<std::int64_t, int>, engine::ElementId> singles_;
  std::map<std::pair<std::int64_t, int>, engine::ElementId> augments_;
  // Selected element per segment, kNone when empty.
  std::vector<engine::ElementId> selected_;
  std::vector<bool> accepted_;
  std::vector<double> cache_used_;
  std::vector<double> rate_used_;
};

// Static knapsack instance over every nonempty user subset (exhaustive-
// subsets mode), with its oracle. Element id i is elements[i].
struct SubsetProblem {
  engine::KnapsackInstance instance;
  std::unique_ptr<ImvsValueOracle> oracle;
};

// Honors JointOptions in the same way as JointModel. Throws
// engine::InstanceTooLarge like CandidatePool.
SubsetProblem BuildSubsetProblem(const Scenario& scenario,
                                 const JointOptions& options = {});

}  // namespace imvs::domain

#endif  // IMVS_DOMAIN_CANDIDATES_H_
