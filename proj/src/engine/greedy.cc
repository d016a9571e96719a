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

#include "imvs/engine/greedy.h"

#include <queue>
#include <unordered_set>
#include <vector>

namespace imvs::engine {
namespace {

class Scorer {
 public:
  Scorer(const CandidateModel& model, GreedyRule rule,
         const GreedyConfig& config)
      : model_(model), rule_(rule), config_(config) {}

  // Returns {score, gain}.
  std::pair<double, double> Score(ElementId e) const {
    const double gain = model_.Gain(e);
    if (rule_ == GreedyRule::kUniformCost) return {gain, gain};
    return {WcbScore(gain, model_.ScoringCost(e), config_.weights), gain};
  }

 private:
  const CandidateModel& model_;
  GreedyRule rule_;
  const GreedyConfig& config_;
};

struct Choice {
  ElementId element;
  double gain;
};

// Plain re-evaluation of every remaining candidate per iteration.
class NaiveSelector {
 public:
  NaiveSelector(const CandidateModel& model, const Scorer& scorer)
      : model_(model), scorer_(scorer) {}

  void Insert(std::span<const ElementId> ids) {
    for (ElementId e : ids) {
      if (seen_.insert(e).second) pool_.push_back(e);
    }
  }

  std::optional<Choice> Next(const std::unordered_set<ElementId>& discarded) {
    std::optional<Choice> best;
    double best_score = 0.0;
    std::vector<ElementId> keep;
    keep.reserve(pool_.size());
    for (ElementId e : pool_) {
      if (!model_.IsLive(e) || discarded.contains(e)) {
        seen_.erase(e);
        continue;
      }
      keep.push_back(e);
      const auto [score, gain] = scorer_.Score(e);
      if (!best || score > best_score ||
          (score == best_score && model_.Precedes(e, best->element))) {
        best = Choice{e, gain};
        best_score = score;
      }
    }
    pool_.swap(keep);
    return best;
  }

  void OnAccepted() {}

 private:
  const CandidateModel& model_;
  const Scorer& scorer_;
  std::vector<ElementId> pool_;
  std::unordered_set<ElementId> seen_;
};

// Lazy evaluation: stale scores are upper bounds because gains only shrink
// as the solution grows, so the top entry is the argmax once it is fresh.
class LazySelector {
 public:
  LazySelector(const CandidateModel& model, const Scorer& scorer)
      : model_(model),
        scorer_(scorer),
        heap_(HeapOrder{&model}) {}

  void Insert(std::span<const ElementId> ids) {
    for (ElementId e : ids) {
      const auto [score, gain] = scorer_.Score(e);
      heap_.push({score, gain, e, version_});
    }
  }

  std::optional<Choice> Next(const std::unordered_set<ElementId>& discarded) {
    while (!heap_.empty()) {
      Entry top = heap_.top();
      if (!model_.IsLive(top.element) || discarded.contains(top.element)) {
        heap_.pop();
        continue;
      }
      if (top.version == version_) {
        heap_.pop();
        return Choice{top.element, top.gain};
      }
      heap_.pop();
      const auto [score, gain] = scorer_.Score(top.element);
      heap_.push({score, gain, top.element, version_});
    }
    return std::nullopt;
  }

  void OnAccepted() { ++version_; }

 private:
  struct Entry {
    double score;
    double gain;
    ElementId element;
    std::uint64_t version;
  };
  struct HeapOrder {
    const CandidateModel* model;
    // True when a ranks below b.
    bool operator()(const Entry& a, const Entry& b) const {
      if (a.score != b.score) return a.score < b.score;
      if (a.element == b.element) return a.version < b.version;
      return model->Precedes(b.element, a.element);
    }
  };

  const CandidateModel& model_;
  const Scorer& scorer_;
  std::priority_queue<Entry, std::vector<Entry>, HeapOrder> heap_;
  std::uint64_t version_ = 0;
};

template <typename Selector>
SolutionTrace Drive(CandidateModel& model, Selector& selector) {
  SolutionTrace trace;
  std::unordered_set<ElementId> discarded;
  std::vector<ElementId> spawned = model.InitialCandidates();
  selector.Insert(spawned);

  while (auto choice = selector.Next(discarded)) {
    Pick pick{choice->element, choice->gain, false, std::nullopt};
    if (auto violated = model.FindViolation(choice->element)) {
      pick.rejected_by = *violated;
      discarded.insert(choice->element);
    } else {
      pick.accepted = true;
      spawned.clear();
      model.Accept(choice->element, spawned);
      selector.OnAccepted();
      selector.Insert(spawned);
    }
    trace.picks.push_back(pick);
  }

  trace.solution = model.Solution();
  trace.final_value = model.Value();
  trace.final_costs = model.Usage();
  return trace;
}

}  // namespace

double WcbScore(double gain, const CostVector& cost,
                std::span<const double> weights) {
  const int max_group = cost.MaxGroup();
  if (max_group >= static_cast<int>(weights.size())) {
    throw InstanceError("no WCB weight for constraint group " +
                        std::to_string(max_group));
  }
  double weight_sum = 0.0;
  for (int group = 0; group <= max_group; ++group) {
    if (cost.GroupTotal(group) > 0.0) weight_sum += weights[group];
  }
  if (weight_sum <= 0.0) {
    throw InstanceError("WCB score undefined: no weighted positive cost");
  }
  double score = 0.0;
  for (int group = 0; group <= max_group; ++group) {
    const double total = cost.GroupTotal(group);
    if (total > 0.0) score += (weights[group] / weight_sum) * gain / total;
  }
  return score;
}

SolutionTrace RunGreedy(CandidateModel& model, GreedyRule rule,
                        const GreedyConfig& config) {
  if (rule == GreedyRule::kWeightedCostBenefit) config.Validate();
  Scorer scorer(model, rule, config);
  if (config.lazy) {
    LazySelector selector(model, scorer);
    return Drive(model, selector);
  }
  NaiveSelector selector(model, scorer);
  return Drive(model, selector);
}

SolutionTrace UcGreedy(const KnapsackInstance& instance,
                       const ValueOracle& oracle, bool lazy) {
  StaticKnapsackModel model(instance, oracle);
  GreedyConfig config;
  config.lazy = lazy;
  return RunGreedy(model, GreedyRule::kUniformCost, config);
}

SolutionTrace WcbGreedy(const KnapsackInstance& instance,
                        const ValueOracle& oracle,
                        const GreedyConfig& config) {
  StaticKnapsackModel model(instance, oracle);
  config.Validate();
  // Every score must be defined before the first iteration.
  for (ElementId e : instance.ground) {
    WcbScore(1.0, instance.costs[e], config.weights);
  }
  return RunGreedy(model, GreedyRule::kWeightedCostBenefit, config);
}

}  // namespace imvs::engine
