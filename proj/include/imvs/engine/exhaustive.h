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

#ifndef IMVS_ENGINE_EXHAUSTIVE_H_
#define IMVS_ENGINE_EXHAUSTIVE_H_

#include <cstdint>
#include <vector>

#include "imvs/engine/types.h"
#include "imvs/engine/value_oracle.h"

namespace imvs::engine {

inline constexpr std::uint64_t kDefaultStateLimit = 10'000'000;

struct OptimumResult {
  std::vector<ElementId> set;
  double value = 0.0;
  std::uint64_t states_visited = 0;
};

// Exact maximum of a monotone submodular oracle over feasible subsets.
//
// Depth-first include/exclude enumeration in ascending ElementId order. A
// branch is cut when it cannot fit, or when
//   g(current) + sum of marginals of still-insertable elements <= incumbent,
// which bounds every feasible extension for monotone submodular g.
//
// Throws InstanceTooLarge when the ground set exceeds 63 elements or the
// search visits more than `state_limit` partial states.
OptimumResult ExhaustiveOptimum(const KnapsackInstance& instance,
                                const ValueOracle& oracle,
                                std::uint64_t state_limit = kDefaultStateLimit);

}  // namespace imvs::engine

#endif  // IMVS_ENGINE_EXHAUSTIVE_H_
