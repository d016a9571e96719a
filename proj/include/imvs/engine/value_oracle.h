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

#ifndef IMVS_ENGINE_VALUE_ORACLE_H_
#define IMVS_ENGINE_VALUE_ORACLE_H_

#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "imvs/engine/types.h"

namespace imvs::engine {

// Incremental view of an oracle: holds a current set and answers marginal
// gains against it.
class OracleSession {
 public:
  virtual ~OracleSession() = default;

  virtual double Gain(ElementId e) const = 0;
  virtual void Add(ElementId e) = 0;
  virtual double Value() const = 0;
};

// Set-function value query g(Z). Implementations must be read-only: queries
// never mutate the instance, so one oracle may serve concurrent sessions.
class ValueOracle {
 public:
  virtual ~ValueOracle() = default;

  virtual double Evaluate(std::span<const ElementId> set) const = 0;

  // g(set + e) - g(set). The default evaluates both sides.
  virtual double Marginal(std::span<const ElementId> set, ElementId e) const;

  // The default session re-evaluates from scratch on every query.
  virtual std::unique_ptr<OracleSession> NewSession() const;
};

// Oracle backed by a callable; used for synthetic test functions.
class FunctionOracle : public ValueOracle {
 public:
  using Fn = std::function<double(std::span<const ElementId>)>;

  explicit FunctionOracle(Fn fn) : fn_(std::move(fn)) {}

  double Evaluate(std::span<const ElementId> set) const override {
    return fn_(set);
  }

 private:
  Fn fn_;
};

// g(S) = sum of fixed nonnegative weights.
class ModularOracle : public ValueOracle {
 public:
  explicit ModularOracle(std::vector<double> weights)
      : weights_(std::move(weights)) {}

  double Evaluate(std::span<const ElementId> set) const override;
  double Marginal(std::span<const ElementId> set, ElementId e) const override;

 private:
  std::vector<double> weights_;
};

// Weighted coverage: element e covers items covers[e]; g(S) is the total
// weight of covered items. Monotone submodular.
class CoverageOracle : public ValueOracle {
 public:
  CoverageOracle(std::vector<std::vector<int>> covers,
                 std::vector<double> item_weights)
      : covers_(std::move(covers)), item_weights_(std::move(item_weights)) {}

  double Evaluate(std::span<const ElementId> set) const override;
  std::unique_ptr<OracleSession> NewSession() const override;

 private:
  friend class CoverageSession;
  std::vector<std::vector<int>> covers_;
  std::vector<double> item_weights_;
};

// Sum of two oracles over the same ground set.
class SumOracle : public ValueOracle {
 public:
  SumOracle(std::shared_ptr<const ValueOracle> a,
            std::shared_ptr<const ValueOracle> b)
      : a_(std::move(a)), b_(std::move(b)) {}

  double Evaluate(std::span<const ElementId> set) const override {
    return a_->Evaluate(set) + b_->Evaluate(set);
  }

 private:
  std::shared_ptr<const ValueOracle> a_;
  std::shared_ptr<const ValueOracle> b_;
};

}  // namespace imvs::engine

#endif  // IMVS_ENGINE_VALUE_ORACLE_H_
