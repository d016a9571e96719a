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

#include "imvs/domain/value.h"

#include <bit>
#include <set>

namespace imvs::domain {
namespace {

std::uint64_t Extremes(const Scenario& scenario) {
  return 1ULL | (1ULL << scenario.grid.last_anchor());
}

}  // namespace

GapTable::GapTable(const Scenario& scenario)
    : anchors_(scenario.anchors()),
      table_(static_cast<std::size_t>(scenario.slots) * anchors_ * anchors_,
             0.0),
      ceiling_(scenario.slots, 0.0) {
  const ViewGrid& grid = scenario.grid;
  for (int t = 0; t < scenario.slots; ++t) {
    const auto& p = scenario.popularity.Slot(t);
    double mass = 0.0;
    for (double x : p) mass += x;
    ceiling_[t] = scenario.model.d_max() * mass;
    for (int l = 0; l < anchors_; ++l) {
      for (int r = l + 1; r < anchors_; ++r) {
        const int k_l = grid.GridIndex(l);
        const int k_r = grid.GridIndex(r);
        double sum = 0.0;
        for (int k = k_l + 1; k < k_r; ++k) {
          sum += scenario.model.At(k, k_l, k_r) * p[k];
        }
        table_[(static_cast<std::size_t>(t) * anchors_ + l) * anchors_ + r] =
            sum;
      }
    }
  }
}

double GapTable::Distortion(int slot, std::uint64_t delivered) const {
  double total = 0.0;
  int left = std::countr_zero(delivered);
  std::uint64_t rest = delivered & (delivered - 1);
  while (rest) {
    const int right = std::countr_zero(rest);
    total += Gap(slot, left, right);
    left = right;
    rest &= rest - 1;
  }
  return total;
}

double GapTable::Reduction(int slot, std::uint64_t delivered, int view) const {
  if ((delivered >> view) & 1) return 0.0;
  const std::uint64_t below = delivered & ((1ULL << view) - 1);
  const int l = 63 - std::countl_zero(below);
  const int r = view + 1 + std::countr_zero(delivered >> (view + 1));
  return Gap(slot, l, r) - Gap(slot, l, view) - Gap(slot, view, r);
}

std::vector<std::uint64_t> DeliveredAnchors(
    std::span<const GroundElement> policy, const Scenario& scenario) {
  std::vector<std::uint64_t> masks(
      static_cast<std::size_t>(scenario.num_users()) * scenario.slots,
      Extremes(scenario));
  for (const GroundElement& e : policy) {
    CheckElement(e, scenario);
    for (int u : e.users) {
      masks[static_cast<std::size_t>(u) * scenario.slots + e.slot] |=
          1ULL << e.view;
    }
  }
  return masks;
}

double PolicyValue(std::span<const GroundElement> policy,
                   const Scenario& scenario, const GapTable& gaps) {
  const auto masks = DeliveredAnchors(policy, scenario);
  double total = 0.0;
  for (int u = 0; u < scenario.num_users(); ++u) {
    for (int t = 0; t < scenario.slots; ++t) {
      total += gaps.Ceiling(t) -
               gaps.Distortion(
                   t, masks[static_cast<std::size_t>(u) * scenario.slots + t]);
    }
  }
  return total / (static_cast<double>(scenario.num_users()) * scenario.slots);
}

double DistortionReductionValue(std::span<const GroundElement> policy,
                                const Scenario& scenario) {
  std::set<std::int64_t> segments;
  for (const GroundElement& e : policy) {
    CheckElement(e, scenario);
    if (!segments.insert(scenario.SegmentIndex(e.bs, e.view, e.slot)).second) {
      throw engine::InstanceError("two elements share a segment: " +
                                  ToString(e));
    }
  }
  return PolicyValue(policy, scenario, GapTable(scenario));
}

double BaselineValue(const Scenario& scenario) {
  return PolicyValue({}, scenario, GapTable(scenario));
}

DeliveryState::DeliveryState(const Scenario& scenario, const GapTable& gaps)
    : gaps_(gaps),
      slots_(scenario.slots),
      scale_(1.0 / (static_cast<double>(scenario.num_users()) * scenario.slots)),
      masks_(static_cast<std::size_t>(scenario.num_users()) * scenario.slots,
             Extremes(scenario)) {
  double total = 0.0;
  for (int u = 0; u < scenario.num_users(); ++u) {
    for (int t = 0; t < slots_; ++t) {
      total += gaps_.Ceiling(t) - gaps_.Distortion(t, Mask(u, t));
    }
  }
  value_ = total * scale_;
}

double DeliveryState::GainForUser(int view, int slot, int user) const {
  return gaps_.Reduction(slot, Mask(user, slot), view) * scale_;
}

double DeliveryState::Gain(int view, int slot,
                           std::span<const int> users) const {
  double total = 0.0;
  for (int u : users) total += gaps_.Reduction(slot, Mask(u, slot), view);
  return total * scale_;
}

void DeliveryState::Deliver(int view, int slot, std::span<const int> users) {
  value_ += Gain(view, slot, users);
  for (int u : users) {
    masks_[static_cast<std::size_t>(u) * slots_ + slot] |= 1ULL << view;
  }
}

namespace {

class ImvsSession : public engine::OracleSession {
 public:
  explicit ImvsSession(const ImvsValueOracle& oracle)
      : oracle_(oracle), state_(oracle.scenario(), oracle.gaps()) {}

  double Gain(engine::ElementId e) const override {
    const GroundElement& g = oracle_.elements()[e];
    return state_.Gain(g.view, g.slot, g.users);
  }
  void Add(engine::ElementId e) override {
    const GroundElement& g = oracle_.elements()[e];
    state_.Deliver(g.view, g.slot, g.users);
  }
  double Value() const override { return state_.Value(); }

 private:
  const ImvsValueOracle& oracle_;
  DeliveryState state_;
};

}  // namespace

ImvsValueOracle::ImvsValueOracle(const Scenario& scenario,
                                 std::vector<GroundElement> elements)
    : scenario_(scenario), elements_(std::move(elements)), gaps_(scenario) {
  for (const GroundElement& e : elements_) CheckElement(e, scenario_);
}

double ImvsValueOracle::Evaluate(
    std::span<const engine::ElementId> set) const {
  std::vector<GroundElement> policy;
  policy.reserve(set.size());
  for (engine::ElementId e : set) policy.push_back(elements_.at(e));
  return PolicyValue(policy, scenario_, gaps_);
}

double ImvsValueOracle::Marginal(std::span<const engine::ElementId> set,
                                 engine::ElementId e) const {
  DeliveryState state(scenario_, gaps_);
  for (engine::ElementId x : set) {
    const GroundElement& g = elements_.at(x);
    state.Deliver(g.view, g.slot, g.users);
  }
  const GroundElement& g = elements_.at(e);
  return state.Gain(g.view, g.slot, g.users);
}

std::unique_ptr<engine::OracleSession> ImvsValueOracle::NewSession() const {
  return std::make_unique<ImvsSession>(*this);
}

}  // namespace imvs::domain
