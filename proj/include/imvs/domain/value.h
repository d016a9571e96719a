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

// Distortion-reduction objective. With anchors `delivered` to user u in slot
// t, every grid view v has distortion D from its nearest delivered anchors;
// the value of a policy is
//
//   (1 / UT) sum_u sum_t sum_v (D_max - D_u^{v,t}) p^{v,t}.
//
// The two extreme anchors are always delivered, so the empty policy already
// has a positive value.

#ifndef IMVS_DOMAIN_VALUE_H_
#define IMVS_DOMAIN_VALUE_H_

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "imvs/domain/scenario.h"
#include "imvs/engine/value_oracle.h"

namespace imvs::domain {

// G[t][l][r]: popularity-weighted distortion of the views strictly between
// anchors l < r when these two are adjacent in the delivered set.
class GapTable {
 public:
  explicit GapTable(const Scenario& scenario);

  double Gap(int slot, int l, int r) const {
    return table_[(static_cast<std::size_t>(slot) * anchors_ + l) * anchors_ +
                  r];
  }
  // Sum over consecutive delivered anchors.
  double Distortion(int slot, std::uint64_t delivered) const;
  // Reduction in Distortion from also delivering `view`.
  double Reduction(int slot, std::uint64_t delivered, int view) const;
  // D_max * sum_v p^{v,t}.
  double Ceiling(int slot) const { return ceiling_[slot]; }

 private:
  int anchors_;
  std::vector<double> table_;
  std::vector<double> ceiling_;
};

// Delivered-anchor bitmask per (user, slot), index u * T + t.
std::vector<std::uint64_t> DeliveredAnchors(
    std::span<const GroundElement> policy, const Scenario& scenario);

// Objective for a set of elements. Uniqueness is not required here; a
// segment delivered twice to a user counts once.
double PolicyValue(std::span<const GroundElement> policy,
                   const Scenario& scenario, const GapTable& gaps);

// Objective of a policy; throws engine::InstanceError when two elements share
// (bs, view, slot) or an element is malformed.
double DistortionReductionValue(std::span<const GroundElement> policy,
                                const Scenario& scenario);

// Value of the empty policy.
double BaselineValue(const Scenario& scenario);

// Tracks masks and value for a growing policy.
class DeliveryState {
 public:
  DeliveryState(const Scenario& scenario, const GapTable& gaps);

  // Gain from delivering `view` in `slot` to the listed users.
  double Gain(int view, int slot, std::span<const int> users) const;
  double GainForUser(int view, int slot, int user) const;
  void Deliver(int view, int slot, std::span<const int> users);
  double Value() const { return value_; }
  std::uint64_t Mask(int user, int slot) const {
    return masks_[static_cast<std::size_t>(user) * slots_ + slot];
  }

 private:
  const GapTable& gaps_;
  int slots_;
  double scale_;
  std::vector<std::uint64_t> masks_;
  double value_ = 0.0;
};

// Engine oracle over a fixed list of elements; ElementId indexes
// `elements`. Any subset may be evaluated.
class ImvsValueOracle : public engine::ValueOracle {
 public:
  ImvsValueOracle(const Scenario& scenario,
                  std::vector<GroundElement> elements);

  double Evaluate(std::span<const engine::ElementId> set) const override;
  double Marginal(std::span<const engine::ElementId> set,
                  engine::ElementId e) const override;
  std::unique_ptr<engine::OracleSession> NewSession() const override;

  const std::vector<GroundElement>& elements() const { return elements_; }
  const GapTable& gaps() const { return gaps_; }
  const Scenario& scenario() const { return scenario_; }

 private:
  const Scenario& scenario_;
  std::vector<GroundElement> elements_;
  GapTable gaps_;
};

}  // namespace imvs::domain

#endif  // IMVS_DOMAIN_VALUE_H_
