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

#ifndef IMVS_ENGINE_CANDIDATE_MODEL_H_
#define IMVS_ENGINE_CANDIDATE_MODEL_H_

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "imvs/engine/types.h"
#include "imvs/engine/value_oracle.h"

namespace imvs::engine {

// What the greedy driver sees of a problem: a pool of candidate elements,
// their marginal gains and costs against the current solution, and a
// feasibility test. The pool may grow as elements are accepted; an element
// stops being live once accepted or superseded.
//
// Single-writer: one greedy run owns one model.
class CandidateModel {
 public:
  virtual ~CandidateModel() = default;

  // Candidates available before the first pick.
  virtual std::vector<ElementId> InitialCandidates() = 0;

  virtual bool IsLive(ElementId e) const = 0;
  virtual double Gain(ElementId e) const = 0;

  // Cost vector used for weighted cost-benefit scoring.
  virtual const CostVector& ScoringCost(ElementId e) const = 0;

  // First constraint the element would violate if accepted now, if any.
  virtual std::optional<ConstraintKey> FindViolation(ElementId e) const = 0;

  // Commits a feasible element and appends newly available candidates.
  virtual void Accept(ElementId e, std::vector<ElementId>& spawned) = 0;

  // Strict canonical order used for tie-breaking.
  virtual bool Precedes(ElementId a, ElementId b) const = 0;

  virtual double Value() const = 0;
  virtual std::vector<ElementId> Solution() const = 0;
  virtual std::map<ConstraintKey, double> Usage() const = 0;
};

// A fixed ground set with additive costs, as in the textbook formulation.
class StaticKnapsackModel : public CandidateModel {
 public:
  // Validates the instance; `instance` and `oracle` must outlive the model.
  StaticKnapsackModel(const KnapsackInstance& instance,
                      const ValueOracle& oracle);

  std::vector<ElementId> InitialCandidates() override;
  bool IsLive(ElementId e) const override;
  double Gain(ElementId e) const override;
  const CostVector& ScoringCost(ElementId e) const override;
  std::optional<ConstraintKey> FindViolation(ElementId e) const override;
  void Accept(ElementId e, std::vector<ElementId>& spawned) override;
  bool Precedes(ElementId a, ElementId b) const override { return a < b; }
  double Value() const override;
  std::vector<ElementId> Solution() const override;
  std::map<ConstraintKey, double> Usage() const override { return usage_; }

 private:
  const KnapsackInstance& instance_;
  std::unique_ptr<OracleSession> session_;
  std::vector<bool> accepted_;
  std::vector<ElementId> solution_;
  std::map<ConstraintKey, double> usage_;
};

}  // namespace imvs::engine

#endif  // IMVS_ENGINE_CANDIDATE_MODEL_H_
