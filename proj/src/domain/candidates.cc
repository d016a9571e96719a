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

#include "imvs/domain/candidates.h"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "imvs/engine/tolerance.h"

namespace imvs::domain {
namespace {

using engine::ConstraintKey;
using engine::CostVector;
using engine::ElementId;

void CheckSubsetSize(const Scenario& scenario, int bs) {
  if (static_cast<int>(scenario.coverage.users_of_bs[bs].size()) >
      kMaxSubsetUsers) {
    throw engine::InstanceTooLarge(
        "exhaustive-subsets: base station " + std::to_string(bs) + " covers " +
        std::to_string(scenario.coverage.users_of_bs[bs].size()) +
        " users, limit " + std::to_string(kMaxSubsetUsers));
  }
}

// All nonempty subsets of `users` (sorted input gives sorted subsets).
std::vector<std::vector<int>> Subsets(const std::vector<int>& users) {
  std::vector<std::vector<int>> out;
  const std::uint32_t count = 1u << users.size();
  for (std::uint32_t mask = 1; mask < count; ++mask) {
    std::vector<int> subset;
    for (std::size_t i = 0; i < users.size(); ++i) {
      if (mask >> i & 1) subset.push_back(users[i]);
    }
    out.push_back(std::move(subset));
  }
  return out;
}

bool Allowed(const JointOptions& options, const Scenario& scenario, int bs,
             int view, int slot) {
  return bs == 0 || options.allowed.empty() ||
         options.allowed[scenario.SegmentIndex(bs, view, slot)];
}

void CheckOptions(const JointOptions& options, const Scenario& scenario) {
  if (!options.allowed.empty() &&
      static_cast<std::int64_t>(options.allowed.size()) !=
          scenario.SegmentCount()) {
    throw std::invalid_argument("allowed-segment mask has the wrong size");
  }
}

CostVector OptionCost(const GroundElement& e, const Scenario& scenario,
                      const JointOptions& options) {
  CostVector cost = ElementCost(e, scenario);
  return options.charge_cache ? cost : cost.WithoutGroup(kCacheGroup);
}

}  // namespace

std::string ToString(CandidateMode mode) {
  return mode == CandidateMode::kSingletonAugment ? "singleton-augment"
                                                  : "exhaustive-subsets";
}

CandidateMode ParseCandidateMode(const std::string& text) {
  if (text == "singleton-augment") return CandidateMode::kSingletonAugment;
  if (text == "exhaustive-subsets") return CandidateMode::kExhaustiveSubsets;
  throw std::invalid_argument("unknown candidate mode: " + text);
}

std::vector<GroundElement> CandidatePool(
    std::span<const GroundElement> current, const Scenario& scenario,
    CandidateMode mode) {
  std::map<std::int64_t, const GroundElement*> selected;
  for (const GroundElement& e : current) {
    CheckElement(e, scenario);
    if (!selected.emplace(scenario.SegmentIndex(e.bs, e.view, e.slot), &e)
             .second) {
      throw engine::InstanceError("two elements share a segment: " +
                                  ToString(e));
    }
  }
  std::vector<GroundElement> out;
  for (int n = 0; n < scenario.num_bs(); ++n) {
    const auto& covered = scenario.coverage.users_of_bs[n];
    if (mode == CandidateMode::kExhaustiveSubsets) CheckSubsetSize(scenario, n);
    for (int v = 1; v < scenario.anchors() - 1; ++v) {
      for (int t = 0; t < scenario.slots; ++t) {
        const auto it = selected.find(scenario.SegmentIndex(n, v, t));
        if (mode == CandidateMode::kExhaustiveSubsets) {
          // A selected segment admits nothing more.
          if (it != selected.end()) continue;
          for (auto& users : Subsets(covered)) {
            out.push_back({n, v, t, std::move(users)});
          }
          continue;
        }
        if (it == selected.end()) {
          for (int u : covered) out.push_back({n, v, t, {u}});
          continue;
        }
        const auto& have = it->second->users;
        for (int u : covered) {
          if (std::binary_search(have.begin(), have.end(), u)) continue;
          GroundElement grown{n, v, t, have};
          grown.users.insert(
              std::upper_bound(grown.users.begin(), grown.users.end(), u), u);
          out.push_back(std::move(grown));
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool ReplacementFeasible(std::span<const GroundElement> current,
                         const GroundElement& old_element,
                         const GroundElement& augmented,
                         const Scenario& scenario,
                         const engine::BudgetSet& budgets) {
  if (old_element.bs != augmented.bs || old_element.view != augmented.view ||
      old_element.slot != augmented.slot ||
      augmented.users.size() != old_element.users.size() + 1 ||
      !std::includes(augmented.users.begin(), augmented.users.end(),
                     old_element.users.begin(), old_element.users.end())) {
    throw std::invalid_argument("not a one-user augmentation");
  }
  std::vector<GroundElement> next;
  bool found = false;
  for (const GroundElement& e : current) {
    if (!found && e == old_element) {
      found = true;
      continue;
    }
    next.push_back(e);
  }
  if (!found) throw std::invalid_argument("element to replace not selected");
  next.push_back(augmented);
  for (const auto& [key, total] : PolicyCosts(next, scenario)) {
    const auto budget = budgets.Find(key);
    if (!budget) throw engine::InstanceError("no budget for " + ToString(key));
    if (!engine::ApproxLe(total, *budget)) return false;
  }
  return true;
}

JointModel::JointModel(const Scenario& scenario, JointOptions options)
    : scenario_(scenario),
      options_(std::move(options)),
      gaps_(scenario),
      state_(scenario, gaps_),
      budgets_(MakeBudgets(scenario)),
      selected_(scenario.SegmentCount(), kNone),
      cache_used_(scenario.num_bs(), 0.0),
      rate_used_(static_cast<std::size_t>(scenario.num_bs()) * scenario.slots,
                 0.0) {
  CheckOptions(options_, scenario_);
}

ElementId JointModel::Register(GroundElement element, ElementId parent,
                               int added_user) {
  const std::int64_t segment =
      scenario_.SegmentIndex(element.bs, element.view, element.slot);
  auto& index = parent == kNone ? singles_ : augments_;
  const auto key = std::make_pair(
      parent == kNone ? segment : static_cast<std::int64_t>(parent),
      added_user);
  if (const auto it = index.find(key); it != index.end()) return it->second;
  const auto id = static_cast<ElementId>(entries_.size());
  CostVector cost = OptionCost(element, scenario_, options_);
  entries_.push_back(
      {std::move(element), std::move(cost), parent, added_user, segment});
  accepted_.push_back(false);
  index.emplace(key, id);
  return id;
}

std::vector<ElementId> JointModel::InitialCandidates() {
  std::vector<ElementId> out;
  for (int n = 0; n < scenario_.num_bs(); ++n) {
    for (int v = 1; v < scenario_.anchors() - 1; ++v) {
      for (int t = 0; t < scenario_.slots; ++t) {
        if (!Allowed(options_, scenario_, n, v, t)) continue;
        for (int u : scenario_.coverage.users_of_bs[n]) {
          out.push_back(Register({n, v, t, {u}}, kNone, u));
        }
      }
    }
  }
  return out;
}

bool JointModel::IsLive(ElementId e) const {
  const Entry& entry = entries_[e];
  return !accepted_[e] && selected_[entry.segment] == entry.parent;
}

double JointModel::Gain(ElementId e) const {
  const Entry& entry = entries_[e];
  return state_.GainForUser(entry.element.view, entry.element.slot,
                            entry.added_user);
}

const CostVector& JointModel::ScoringCost(ElementId e) const {
  return entries_[e].cost;
}

double JointModel::UsageOf(const ConstraintKey& key) const {
  switch (key.group) {
    case kCacheGroup:
      return cache_used_[key.index];
    case kRateGroup:
      return rate_used_[key.index];
    default:
      return selected_[key.index] == kNone ? 0.0 : 1.0;
  }
}

std::optional<ConstraintKey> JointModel::FindViolation(ElementId e) const {
  const Entry& entry = entries_[e];
  for (const engine::CostEntry& c : entry.cost.entries()) {
    double delta = c.amount;
    if (entry.parent != kNone) {
      // Replacing the parent: only the extra user's rate is new.
      delta = c.key.group == kRateGroup ? scenario_.rate_mbps : 0.0;
    }
    if (delta == 0.0) continue;
    const double budget = *budgets_.Find(c.key);
    if (!engine::ApproxLe(UsageOf(c.key) + delta, budget)) return c.key;
  }
  return std::nullopt;
}

void JointModel::Accept(ElementId e, std::vector<ElementId>& spawned) {
  const Entry& entry = entries_[e];
  const GroundElement& g = entry.element;
  if (entry.parent == kNone && options_.charge_cache && g.bs > 0) {
    cache_used_[g.bs] += scenario_.segment_bytes[g.slot] / kBytesPerCacheUnit;
  }
  rate_used_[RateKey(scenario_, g.bs, g.slot).index] += scenario_.rate_mbps;
  const int added = entry.added_user;
  state_.Deliver(g.view, g.slot, std::span<const int>(&added, 1));
  selected_[entry.segment] = e;
  accepted_[e] = true;

  const GroundElement base = g;
  for (int u : scenario_.coverage.users_of_bs[base.bs]) {
    if (std::binary_search(base.users.begin(), base.users.end(), u)) continue;
    GroundElement grown = base;
    grown.users.insert(
        std::upper_bound(grown.users.begin(), grown.users.end(), u), u);
    spawned.push_back(Register(std::move(grown), e, u));
  }
}

bool JointModel::Precedes(ElementId a, ElementId b) const {
  return entries_[a].element < entries_[b].element;
}

std::vector<ElementId> JointModel::Solution() const {
  std::vector<ElementId> out;
  for (ElementId e : selected_) {
    if (e != kNone) out.push_back(e);
  }
  std::sort(out.begin(), out.end(),
            [this](ElementId a, ElementId b) { return Precedes(a, b); });
  return out;
}

std::vector<GroundElement> JointModel::Policy() const {
  std::vector<GroundElement> out;
  for (ElementId e : Solution()) out.push_back(entries_[e].element);
  return out;
}

std::map<ConstraintKey, double> JointModel::Usage() const {
  std::map<ConstraintKey, double> usage;
  for (int n = 1; n < scenario_.num_bs(); ++n) {
    if (options_.charge_cache && cache_used_[n] != 0.0) {
      usage[CacheKey(n)] = cache_used_[n];
    }
  }
  for (std::size_t i = 0; i < rate_used_.size(); ++i) {
    if (rate_used_[i] != 0.0) {
      usage[{kRateGroup, static_cast<std::int64_t>(i)}] = rate_used_[i];
    }
  }
  for (std::size_t s = 0; s < selected_.size(); ++s) {
    if (selected_[s] != kNone) {
      usage[{kUniquenessGroup, static_cast<std::int64_t>(s)}] = 1.0;
    }
  }
  return usage;
}

SubsetProblem BuildSubsetProblem(const Scenario& scenario,
                                 const JointOptions& options) {
  CheckOptions(options, scenario);
  std::vector<GroundElement> elements;
  for (int n = 0; n < scenario.num_bs(); ++n) {
    CheckSubsetSize(scenario, n);
    for (int v = 1; v < scenario.anchors() - 1; ++v) {
      for (int t = 0; t < scenario.slots; ++t) {
        if (!Allowed(options, scenario, n, v, t)) continue;
        for (auto& users : Subsets(scenario.coverage.users_of_bs[n])) {
          elements.push_back({n, v, t, std::move(users)});
        }
      }
    }
  }
  std::sort(elements.begin(), elements.end());
  SubsetProblem problem;
  problem.instance.budgets = MakeBudgets(scenario);
  for (std::size_t i = 0; i < elements.size(); ++i) {
    problem.instance.ground.push_back(static_cast<ElementId>(i));
    problem.instance.costs.push_back(
        OptionCost(elements[i], scenario, options));
  }
  problem.oracle =
      std::make_unique<ImvsValueOracle>(scenario, std::move(elements));
  return problem;
}

}  // namespace imvs::domain
