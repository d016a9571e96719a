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

// Randomized checks of set-function structure. A clean report is evidence,
// not proof.

#ifndef IMVS_ENGINE_PROBES_H_
#define IMVS_ENGINE_PROBES_H_

#include <cstdint>
#include <span>
#include <vector>

#include "imvs/engine/types.h"
#include "imvs/engine/value_oracle.h"

namespace imvs::engine {

struct ProbeReport {
  int trials = 0;
  int violations = 0;
  // Largest amount by which a checked inequality failed (0 if none did).
  double max_violation = 0.0;
};

// Samples Z1 subset of Z2 subset of ground and w outside Z2, and checks
// g(Z1+w) - g(Z1) >= g(Z2+w) - g(Z2). Needs at least 2 elements.
ProbeReport SubmodularityProbe(const ValueOracle& oracle,
                               std::span<const ElementId> ground, int trials,
                               std::uint64_t seed);

// Samples Z1 subset of Z2 and checks g(Z1) <= g(Z2).
ProbeReport MonotonicityProbe(const ValueOracle& oracle,
                              std::span<const ElementId> ground, int trials,
                              std::uint64_t seed);

// Checks that Marginal(S, e) agrees with the difference of two Evaluate
// calls on random (S, e).
ProbeReport MarginalConsistencyProbe(const ValueOracle& oracle,
                                     std::span<const ElementId> ground,
                                     int trials, std::uint64_t seed);

}  // namespace imvs::engine

#endif  // IMVS_ENGINE_PROBES_H_
