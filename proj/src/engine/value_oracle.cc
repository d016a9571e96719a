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

#include "imvs/engine/value_oracle.h"

#include <algorithm>

namespace imvs::engine {
namespace {

class EvaluatingSession : public OracleSession {
 public:
  explicit EvaluatingSession(const ValueOracle& oracle)
      : oracle_(oracle), value_(oracle.Evaluate({})) {}

  double Gain(ElementId e) const override {
    set_.push_back(e);
    const double with = oracle_.Evaluate(set_);
    set_.pop_back();
    return with - value_;
  }

  void Add(ElementId e) override {
    set_.push_back(e);
    value_ = oracle_.Evaluate(set_);
  }

  double Value() const override { return value_; }

 private:
  const ValueOracle& oracle_;
  // Scratch space for Gain(); restored before returning.
  mutable std::vector<ElementId> set_;
  double value_;
};

}  // namespace

double ValueOracle::Marginal(std::span<const ElementId> set,
                             ElementId e) const {
  std::vector<ElementId> with(set.begin(), set.end());
  with.push_back(e);
  return Evaluate(with) - Evaluate(set);
}

std::unique_ptr<OracleSession> ValueOracle::NewSession() const {
  return std::make_unique<EvaluatingSession>(*this);
}

double ModularOracle::Evaluate(std::span<const ElementId> set) const {
  double total = 0.0;
  for (ElementId e : set) total += weights_.at(e);
  return total;
}

double ModularOracle::Marginal(std::span<const ElementId> set,
                               ElementId e) const {
  if (std::find(set.begin(), set.end(), e) != set.end()) return 0.0;
  return weights_.at(e);
}

class CoverageSession : public OracleSession {
 public:
  explicit CoverageSession(const CoverageOracle& oracle)
      : oracle_(oracle), covered_(oracle.item_weights_.size(), false) {}

  double Gain(ElementId e) const override {
    double gain = 0.0;
    for (int item : oracle_.covers_.at(e)) {
      if (!covered_[item]) gain += oracle_.item_weights_[item];
    }
    return gain;
  }

  void Add(ElementId e) override {
    for (int item : oracle_.covers_.at(e)) {
      if (!covered_[item]) {
        covered_[item] = true;
        value_ += oracle_.item_weights_[item];
      }
    }
  }

  double Value() const override { return value_; }

 private:
  const CoverageOracle& oracle_;
  std::vector<bool> covered_;
  double value_ = 0.0;
};

double CoverageOracle::Evaluate(std::span<const ElementId> set) const {
  std::vector<bool> covered(item_weights_.size(), false);
  for (ElementId e : set) {
    for (int item : covers_.at(e)) covered[item] = true;
  }
  double total = 0.0;
  for (std::size_t i = 0; i < covered.size(); ++i) {
    if (covered[i]) total += item_weights_[i];
  }
  return total;
}

std::unique_ptr<OracleSession> CoverageOracle::NewSession() const {
  return std::make_unique<CoverageSession>(*this);
}

}  // namespace imvs::engine
