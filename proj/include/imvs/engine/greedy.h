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

// Uniform-cost (UC) and weighted cost-benefit (WCB) greedy maximization.
//
// Each iteration takes the best-scoring remaining candidate regardless of
// feasibility. A feasible pick joins the solution; an infeasible one is
// discarded for good. The loop ends when no candidate remains. Ties go to the
// element that comes first in the model's canonical order.

#ifndef IMVS_ENGINE_GREEDY_H_
#define IMVS_ENGINE_GREEDY_H_

#include <span>

#include "imvs/engine/candidate_model.h"
#include "imvs/engine/types.h"
#include "imvs/engine/value_oracle.h"

namespace imvs::engine {

// Weighted cost-benefit score of an element with marginal gain `gain`:
//   sum_i w_i * gain / (summed group-i cost)
// Groups in which the element costs nothing are left out and the remaining
// weights rescaled to sum to 1. Throws InstanceError if nothing remains.
double WcbScore(double gain, const CostVector& cost,
                std::span<const double> weights);

// Drives any candidate model. `config` is only read for WCB (weights) and
// for the lazy flag.
SolutionTrace RunGreedy(CandidateModel& model, GreedyRule rule,
                        const GreedyConfig& config);

SolutionTrace UcGreedy(const KnapsackInstance& instance,
                       const ValueOracle& oracle, bool lazy = true);

SolutionTrace WcbGreedy(const KnapsackInstance& instance,
                        const ValueOracle& oracle, const GreedyConfig& config);

}  // namespace imvs::engine

#endif  // IMVS_ENGINE_GREEDY_H_
