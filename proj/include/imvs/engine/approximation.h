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

#ifndef IMVS_ENGINE_APPROXIMATION_H_
#define IMVS_ENGINE_APPROXIMATION_H_

#include <cmath>
#include <cstdint>

#include "imvs/engine/exhaustive.h"
#include "imvs/engine/types.h"
#include "imvs/engine/value_oracle.h"

namespace imvs::engine {

// Guarantee for the better of UC and WCB: (1 - 1/e) / 2.
inline const double kGreedyGuarantee = 0.5 * (1.0 - std::exp(-1.0));

// Threshold used when certifying instances; the guarantee rounded up to four
// decimals.
inline constexpr double kCertifyThreshold = 0.3161;

// Values are improvements over g(empty set), so a constant offset in the
// oracle cannot inflate the ratio.
struct ApproximationReport {
  double base_value = 0.0;
  double uc_value = 0.0;
  double wcb_value = 0.0;
  double best_value = 0.0;
  double opt_value = 0.0;
  // best / opt; defined as 1 when opt is 0.
  double ratio = 1.0;

  bool Certified() const { return ratio > kCertifyThreshold - 1e-9; }
};

// Runs UC, WCB and the exhaustive optimum on one instance.
ApproximationReport ComputeApproximationReport(
    const KnapsackInstance& instance, const ValueOracle& oracle,
    const GreedyConfig& config,
    std::uint64_t state_limit = kDefaultStateLimit);

}  // namespace imvs::engine

#endif  // IMVS_ENGINE_APPROXIMATION_H_
