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

#include "imvs/domain/solve.h"

namespace imvs::domain {
namespace {

template <typename Lookup>
void Collect(SolveResult& result, const Lookup& lookup) {
  for (const engine::Pick& pick : result.trace.picks) {
    result.elements.emplace(pick.element, lookup(pick.element));
  }
  for (engine::ElementId e : result.trace.solution) {
    result.policy.push_back(lookup(e));
    result.elements.emplace(e, lookup(e));
  }
}

}  // namespace

engine::ElementLabeler SolveResult::Labeler() const {
  return [this](engine::ElementId e) {
    const auto it = elements.find(e);
    return it == elements.end() ? std::string("?") : ToString(it->second);
  };
}

SolveResult Solve(const Scenario& scenario, engine::GreedyRule rule,
                  const engine::GreedyConfig& config, CandidateMode mode,
                  const JointOptions& options) {
  SolveResult result;
  if (mode == CandidateMode::kSingletonAugment) {
    JointModel model(scenario, options);
    result.trace = engine::RunGreedy(model, rule, config);
    Collect(result, [&](engine::ElementId e) { return model.Element(e); });
    return result;
  }
  SubsetProblem problem = BuildSubsetProblem(scenario, options);
  engine::StaticKnapsackModel model(problem.instance, *problem.oracle);
  result.trace = engine::RunGreedy(model, rule, config);
  const auto& elements = problem.oracle->elements();
  Collect(result, [&](engine::ElementId e) { return elements[e]; });
  return result;
}

}  // namespace imvs::domain
