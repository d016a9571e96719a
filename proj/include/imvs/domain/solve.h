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

#ifndef IMVS_DOMAIN_SOLVE_H_
#define IMVS_DOMAIN_SOLVE_H_

#include <map>
#include <vector>

#include "imvs/domain/candidates.h"
#include "imvs/domain/scenario.h"
#include "imvs/engine/greedy.h"
#include "imvs/engine/trace_io.h"
#include "imvs/engine/types.h"

namespace imvs::domain {

struct SolveResult {
  engine::SolutionTrace trace;
  // Final policy in canonical order.
  std::vector<GroundElement> policy;
  // Ground element of every id that appears in the trace.
  std::map<engine::ElementId, GroundElement> elements;

  engine::ElementLabeler Labeler() const;
};

// One greedy run over the scenario in the given candidate mode.
SolveResult Solve(const Scenario& scenario, engine::GreedyRule rule,
                  const engine::GreedyConfig& config, CandidateMode mode,
                  const JointOptions& options = {});

}  // namespace imvs::domain

#endif  // IMVS_DOMAIN_SOLVE_H_
