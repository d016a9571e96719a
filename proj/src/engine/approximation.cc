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

#include "imvs/engine/approximation.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "imvs/engine/greedy.h"
#include "imvs/engine/tolerance.h"

namespace imvs::engine {

ApproximationReport ComputeApproximationReport(const KnapsackInstance& instance,
                                               const ValueOracle& oracle,
                                               const GreedyConfig& config,
                                               std::uint64_t state_limit) {
  ApproximationReport report;
  report.base_value = oracle.Evaluate({});
  const double base = report.base_value;
  report.uc_value = UcGreedy(instance, oracle, config.lazy).final_value - base;
  report.wcb_value = WcbGreedy(instance, oracle, config).final_value - base;
  report.best_value = std::max(report.uc_value, report.wcb_value);
  report.opt_value =
      ExhaustiveOptimum(instance, oracle, state_limit).value - base;
  if (report.best_value > report.opt_value + Slack(base + report.opt_value)) {
    throw std::logic_error("greedy value exceeds exhaustive optimum");
  }
  // Rounding can leave greedy a hair above the enumerated optimum.
  report.opt_value = std::max(report.opt_value, report.best_value);
  report.ratio = report.opt_value > kAbsTol * (1.0 + std::abs(base))
                     ? report.best_value / report.opt_value
                     : 1.0;
  return report;
}

}  // namespace imvs::engine
