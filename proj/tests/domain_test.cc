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

#include <algorithm>
#include <bit>
#include <cmath>
#include <set>
#include <vector>

#include "gtest/gtest.h"
#include "imvs/domain/candidates.h"
#include "imvs/domain/distortion.h"
#include "imvs/domain/popularity.h"
#include "imvs/domain/scenario.h"
#include "imvs/domain/solve.h"
#include "imvs/domain/value.h"
#include "imvs/engine/greedy.h"
#include "imvs/engine/random.h"
#include "support/monte_carlo.h"
#include "support/reference.h"

namespace imvs::domain {
namespace {

using engine::ElementId;
using engine::GreedyRule;
using ::imvs::testing::LiteralDistortion;
using ::imvs::testing::LiteralSegmentDistortion;
using ::imvs::testing::RandomPolicy;
using ::imvs::testing::SimulateViewers;
using ::imvs::testing::ToXy;
using ::imvs::testing::XyAverageDistortion;
using ::imvs::testing::XyFeasible;

constexpr double kSegmentBytes = 250000.0;  // 2 Mbps for 1 s

// Scenario with explicit coverage; users_of_sbs[i] lists the users of small
// cell i + 1.
Scenario MakeScenario(const ScenarioParams& params, int num_users,
                      const std::vector<std::vector<int>>& users_of_sbs,
                      double cache_bytes, double sbs_rate, double mbs_rate) {
  network::CellTopology topology;
  topology.mbs_radius_m = 1.0;
  topology.mbs_rate_mbps = mbs_rate;
  topology.users.assign(num_users, {});
  std::vector<std::vector<int>> lists = {{}};
  for (int u = 0; u < num_users; ++u) lists[0].push_back(u);
  for (const auto& users : users_of_sbs) {
    topology.sbs.push_back({{}, 1.0, cache_bytes, sbs_rate});
    lists.push_back(users);
  }
  return BuildScenario(
      params, topology,
      network::CoverageSets::FromUsersOfBs(std::move(lists), num_users));
}

// Up to 3 small cells and 5 users with random coverage, budgets and
// per-view distortion parameters.
Scenario RandomScenario(Rng& rng, int anchors = 5, int virtual_per_gap = 2,
                        int slots = 2) {
  ScenarioParams params;
  params.anchors = anchors;
  params.virtual_per_gap = virtual_per_gap;
  params.slots = slots;
  const int users = static_cast<int>(rng.UniformInt(1, 5));
  const int cells = static_cast<int>(rng.UniformInt(1, 3));
  std::vector<std::vector<int>> cover(cells);
  for (auto& list : cover) {
    for (int u = 0; u < users; ++u) {
      if (rng.Bernoulli(0.6)) list.push_back(u);
    }
  }
  Scenario s = MakeScenario(params, users, cover,
                            kSegmentBytes * rng.UniformInt(0, 4),
                            2.0 * rng.UniformInt(0, 4), 2.0 * rng.UniformInt(0, 4));
  const int K = s.grid.size();
  std::vector<double> alpha(K), beta(K);
  for (int k = 0; k < K; ++k) {
    alpha[k] = rng.Uniform(0.0, 0.5);
    beta[k] = rng.Uniform(0.05, 1.0);
  }
  s.model = DistortionModel(s.grid, rng.Uniform(0.5, 2.0), alpha, beta);
  return s;
}

std::uint64_t RandomMask(Rng& rng, int anchors) {
  std::uint64_t mask = 1 | (std::uint64_t{1} << (anchors - 1));
  for (int a = 1; a < anchors - 1; ++a) {
    if (rng.Bernoulli(0.5)) mask |= std::uint64_t{1} << a;
  }
  return mask;
}

TEST(SynthDistortion, Examples) {
  EXPECT_EQ(SynthDistortion(1.0, 1.0, 2.0, 1.0, 0.3, 0.7), 0.0);
  EXPECT_EQ(SynthDistortion(2.0, 1.0, 2.0, 1.0, 0.3, 0.7), 0.0);
  EXPECT_NEAR(SynthDistortion(1.5, 1.0, 2.0, 1.0, 0.0, 1.0), 0.6487212707,
              1e-10);
  EXPECT_DOUBLE_EQ(SynthDistortion(1.25, 1.0, 2.0, 1.3, 0.2, 0.9),
                   SynthDistortion(1.75, 1.0, 2.0, 1.3, 0.2, 0.9));
}

TEST(SynthDistortion, OutsideIntervalIsDomainError) {
  EXPECT_THROW(SynthDistortion(0.5, 1.0, 2.0, 1, 0, 1), std::domain_error);
  EXPECT_THROW(SynthDistortion(2.5, 1.0, 2.0, 1, 0, 1), std::domain_error);
  EXPECT_THROW(SynthDistortion(1.0, 1.0, 1.0, 1, 0, 1), std::domain_error);
}

TEST(DistortionModel, GridEvaluationMatchesPositions) {
  const ViewGrid grid(5, 3);
  const DistortionModel model = DistortionModel::Uniform(grid, 1.2, 0.1, 0.4);
  for (int kl = 0; kl < grid.size(); kl += grid.step()) {
    for (int kr = kl + grid.step(); kr < grid.size(); kr += grid.step()) {
      for (int k = kl; k <= kr; ++k) {
        EXPECT_NEAR(model.At(k, kl, kr),
                    LiteralDistortion(grid.Position(k), grid.Position(kl),
                                      grid.Position(kr), 1.2, 0.1, 0.4),
                    1e-12);
      }
    }
  }
}

TEST(DistortionModel, DmaxIsWorstViewBetweenExtremes) {
  const ViewGrid grid(8, 3);
  const DistortionModel model =
      DistortionModel::Uniform(grid, kDefaultGamma, kDefaultAlpha, kDefaultBeta);
  double expect = 0.0;
  for (int k = 0; k < grid.size(); ++k) {
    expect = std::max(expect, LiteralDistortion(1.0 + k / 4.0, 1.0, 8.0, 1.0,
                                                0.05, 0.3));
  }
  EXPECT_NEAR(model.d_max(), expect, 1e-12);
  // The middle of the span: 1 * e^{0.35} * (e^{0.3 * 3.5} - 1).
  EXPECT_NEAR(model.d_max(), std::exp(0.35) * (std::exp(1.05) - 1.0), 1e-12);
}

TEST(DistortionModel, RejectsBadParameters) {
  const ViewGrid grid(3, 1);
  EXPECT_THROW(DistortionModel::Uniform(grid, 0.0, 0.1, 0.1),
               std::invalid_argument);
  EXPECT_THROW(DistortionModel::Uniform(grid, 1.0, -0.1, 0.1),
               std::invalid_argument);
  EXPECT_THROW(DistortionModel(grid, 1.0, {0.1}, {0.1}), std::invalid_argument);
  EXPECT_THROW(ViewGrid(2, 1), std::invalid_argument);
  EXPECT_THROW(ViewGrid(65, 1), std::invalid_argument);
}

TEST(SegmentDistortions, ExtremesOnlyUseTheOuterPair) {
  const ViewGrid grid(5, 2);
  const DistortionModel model = DistortionModel::Uniform(grid, 1.0, 0.1, 0.5);
  const std::uint64_t mask = 1 | (1u << 4);
  const std::vector<double> d = SegmentDistortions(mask, model);
  for (int k = 0; k < grid.size(); ++k) {
    EXPECT_NEAR(d[k], model.At(k, 0, grid.size() - 1), 1e-15);
  }
  EXPECT_EQ(d.front(), 0.0);
  EXPECT_EQ(d.back(), 0.0);
  EXPECT_THROW(SegmentDistortions(1, model), std::invalid_argument);
}

TEST(SegmentDistortions, MatchesIndicatorDoubleSum) {
  Rng rng(13);
  const int anchors = 5, L = 2;
  const ViewGrid grid(anchors, L);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> alpha(grid.size()), beta(grid.size());
    for (int k = 0; k < grid.size(); ++k) {
      alpha[k] = rng.Uniform(0.0, 0.5);
      beta[k] = rng.Uniform(0.05, 1.0);
    }
    const double gamma = rng.Uniform(0.5, 2.0);
    const DistortionModel model(grid, gamma, alpha, beta);
    const std::uint64_t mask = RandomMask(rng, anchors);
    std::vector<int> delivered(anchors);
    for (int a = 0; a < anchors; ++a) delivered[a] = (mask >> a) & 1;
    const std::vector<double> d = SegmentDistortions(mask, model);
    for (int k = 0; k < grid.size(); ++k) {
      const auto literal = LiteralSegmentDistortion(k, delivered, anchors, L,
                                                    gamma, alpha[k], beta[k]);
      EXPECT_NEAR(d[k], literal.distortion, 1e-12);
      const bool delivered_anchor = grid.IsAnchor(k) && delivered[k / (L + 1)];
      EXPECT_EQ(literal.active_pairs, delivered_anchor ? 0 : 1) << "view " << k;
    }
  }
}

// For V1 subset of V2 (both with the extremes), adding an anchor reduces a
// view's distortion at least as much under V1 as under V2.
TEST(SegmentDistortions, DiminishingReductions) {
  Rng rng(21);
  for (int trial = 0; trial < 2000; ++trial) {
    const int anchors = static_cast<int>(rng.UniformInt(3, 9));
    const int L = static_cast<int>(rng.UniformInt(0, 3));
    const ViewGrid grid(anchors, L);
    std::vector<double> alpha(grid.size()), beta(grid.size());
    for (int k = 0; k < grid.size(); ++k) {
      alpha[k] = rng.Uniform(0.0, 0.5);
      beta[k] = rng.Uniform(0.05, 1.0);
    }
    const DistortionModel model(grid, rng.Uniform(0.5, 2.0), alpha, beta);
    const std::uint64_t v1 = RandomMask(rng, anchors);
    const std::uint64_t v2 = v1 | RandomMask(rng, anchors);
    const std::uint64_t extra = std::uint64_t{1}
                                << rng.UniformInt(0, anchors - 1);
    const auto d1 = SegmentDistortions(v1, model);
    const auto d1x = SegmentDistortions(v1 | extra, model);
    const auto d2 = SegmentDistortions(v2, model);
    const auto d2x = SegmentDistortions(v2 | extra, model);
    for (int k = 0; k < grid.size(); ++k) {
      EXPECT_GE(d1[k] - d1x[k], d2[k] - d2x[k] - 1e-9);
    }
  }
}

TEST(Popularity, FirstSlotUniformOverAnchors) {
  const ViewGrid grid(6, 3);
  const PopularityTable p = BuildPopularity(grid, 4, 8.0, DefaultSigma2(grid));
  for (int k = 0; k < grid.size(); ++k) {
    EXPECT_DOUBLE_EQ(p.At(k, 0), grid.IsAnchor(k) ? 1.0 / 6.0 : 0.0);
  }
  for (int t = 0; t < p.slots(); ++t) {
    double sum = 0.0;
    for (double x : p.Slot(t)) {
      EXPECT_GE(x, 0.0);
      sum += x;
    }
    EXPECT_NEAR(sum, 1.0, 1e-12);
  }
  EXPECT_DOUBLE_EQ(DefaultSigma2(grid), 5.0 / 4.0);
}

TEST(Popularity, RejectsBadParameters) {
  const ViewGrid grid(4, 1);
  EXPECT_THROW(BuildPopularity(grid, 0, 8.0, 1.0), std::invalid_argument);
  EXPECT_THROW(BuildPopularity(grid, 2, 0.0, 1.0), std::invalid_argument);
  EXPECT_THROW(BuildPopularity(grid, 2, 8.0, 0.0), std::invalid_argument);
}

TEST(Popularity, WindowTruncatesMoves) {
  const ViewGrid grid(6, 1);
  const auto kernel = TransitionKernel(grid, 1.0, 1.0);
  for (int i = 0; i < grid.size(); ++i) {
    for (int j = 0; j < grid.size(); ++j) {
      const bool within =
          std::abs(grid.Position(i) - grid.Position(j)) <= 1.0 + 1e-12;
      EXPECT_EQ(kernel[i][j] > 0.0, within);
    }
  }
}

TEST(Popularity, MatchesMonteCarloWalks) {
  const int anchors = 4, L = 1, slots = 3;
  const double window = 8.0, sigma2 = 5.0 / (L + 1);
  const ViewGrid grid(anchors, L);
  const PopularityTable table = BuildPopularity(grid, slots, window, sigma2);

  const int walks = 1000000;
  const auto freq =
      SimulateViewers(anchors, L, slots, window, sigma2, walks, 20240601);
  for (int t = 0; t < slots; ++t) {
    for (int k = 0; k < grid.size(); ++k) {
      const double p = table.At(k, t);
      const double sigma = std::sqrt(p * (1 - p) / walks);
      EXPECT_NEAR(freq[t][k], p, 3 * sigma + 1e-12)
          << "slot " << t << " view " << k;
    }
  }
}

TEST(Value, EmptyPolicyBaseline) {
  ScenarioParams params;
  const Scenario s = MakeScenario(params, 3, {{0, 1}}, 0.0, 0.0, 0.0);
  const int K = s.grid.size();
  const double last = s.anchors();
  double dmax = 0.0;
  for (int k = 0; k < K; ++k) {
    dmax = std::max(dmax, LiteralDistortion(s.grid.Position(k), 1.0, last,
                                            params.gamma, params.alpha,
                                            params.beta));
  }
  double expect = 0.0;
  for (int t = 0; t < s.slots; ++t) {
    for (int k = 0; k < K; ++k) {
      const double d = LiteralDistortion(s.grid.Position(k), 1.0, last,
                                         params.gamma, params.alpha,
                                         params.beta);
      expect += (dmax - d) * s.popularity.At(k, t);
    }
  }
  expect /= s.slots;
  EXPECT_GT(BaselineValue(s), 0.0);
  EXPECT_NEAR(BaselineValue(s), expect, 1e-12);
  EXPECT_NEAR(DistortionReductionValue({}, s), expect, 1e-12);
}

TEST(Value, DuplicateSegmentIsInstanceError) {
  const Scenario s = MakeScenario(ScenarioParams(), 2, {{0, 1}}, 0, 0, 0);
  const std::vector<GroundElement> policy = {{1, 1, 0, {0}}, {1, 1, 0, {1}}};
  EXPECT_THROW(DistortionReductionValue(policy, s), engine::InstanceError);
  const std::vector<GroundElement> bad = {{1, 0, 0, {0}}};
  EXPECT_THROW(DistortionReductionValue(bad, s), engine::InstanceError);
}

TEST(Value, MatchesXyFormulation) {
  Rng rng(404);
  for (int trial = 0; trial < 200; ++trial) {
    const Scenario s = RandomScenario(rng);
    const auto policy = RandomPolicy(rng, s);
    const double value = DistortionReductionValue(policy, s);
    const double distortion = XyAverageDistortion(ToXy(policy, s), s);
    EXPECT_NEAR(value + distortion, s.model.d_max(), 1e-9);
  }
}

TEST(Value, AddingAnElementNeverHurts) {
  Rng rng(405);
  for (int trial = 0; trial < 200; ++trial) {
    const Scenario s = RandomScenario(rng);
    auto policy = RandomPolicy(rng, s);
    if (policy.empty()) continue;
    const GroundElement last = policy.back();
    policy.pop_back();
    EXPECT_GE(DistortionReductionValue(std::vector{last}, s) + 1e-12,
              BaselineValue(s));
    const double without = DistortionReductionValue(policy, s);
    policy.push_back(last);
    EXPECT_GE(DistortionReductionValue(policy, s), without - 1e-12);
  }
}

TEST(Value, OracleMatchesPolicyValue) {
  Rng rng(406);
  for (int trial = 0; trial < 50; ++trial) {
    const Scenario s = RandomScenario(rng);
    const auto policy = RandomPolicy(rng, s);
    if (policy.empty()) continue;
    const ImvsValueOracle oracle(s, policy);
    std::vector<ElementId> all(policy.size());
    for (ElementId e = 0; e < all.size(); ++e) all[e] = e;
    EXPECT_NEAR(oracle.Evaluate(all), DistortionReductionValue(policy, s), 1e-12);
    std::vector<ElementId> prefix(all.begin(), all.end() - 1);
    EXPECT_NEAR(oracle.Marginal(prefix, all.back()),
                oracle.Evaluate(all) - oracle.Evaluate(prefix), 1e-12);
  }
}

TEST(Cost, MbsElementHasNoCacheCost) {
  const Scenario s = MakeScenario(ScenarioParams(), 3, {{0}}, 0, 0, 0);
  const GroundElement e{0, 2, 1, {0, 1, 2}};
  const engine::CostVector cost = ElementCost(e, s);
  EXPECT_EQ(cost.GroupTotal(kCacheGroup), 0.0);
  ASSERT_EQ(cost.entries().size(), 2u);
  EXPECT_EQ(cost.entries()[0].key, RateKey(s, 0, 1));
  EXPECT_DOUBLE_EQ(cost.entries()[0].amount, 6.0);
  EXPECT_EQ(cost.entries()[1].key, UniquenessKey(s, 0, 2, 1));
  EXPECT_EQ(cost.entries()[1].amount, 1.0);
}

TEST(Cost, SmallCellElement) {
  const Scenario s = MakeScenario(ScenarioParams(), 1, {{0}}, 0, 0, 0);
  EXPECT_EQ(s.segment_bytes[0], kSegmentBytes);
  const engine::CostVector cost = ElementCost({1, 1, 0, {0}}, s);
  EXPECT_DOUBLE_EQ(cost.GroupTotal(kCacheGroup), 0.25);  // MB
  EXPECT_DOUBLE_EQ(cost.GroupTotal(kRateGroup), 2.0);
  EXPECT_EQ(cost.GroupTotal(kUniquenessGroup), 1.0);
}

TEST(Cost, SameSegmentTwiceBreaksUniqueness) {
  const Scenario s = MakeScenario(ScenarioParams(), 2, {{0, 1}}, 1e9, 100, 100);
  const std::vector<GroundElement> policy = {{1, 1, 0, {0}}, {1, 1, 0, {1}}};
  const engine::BudgetSet budgets = MakeBudgets(s);
  for (const auto& [key, total] : PolicyCosts(policy, s)) {
    if (key.group != kUniquenessGroup) continue;
    EXPECT_EQ(total, 2.0);
    EXPECT_EQ(*budgets.Find(key), 1.0);
  }
}

TEST(Cost, TotalVideoSizeCountsEveryAnchor) {
  const Scenario s = MakeScenario(ScenarioParams(), 1, {{0}}, 0, 0, 0);
  EXPECT_DOUBLE_EQ(s.TotalVideoBytes(), 6 * 5 * kSegmentBytes);
}

TEST(CandidatePool, SingletonsForEmptyPolicy) {
  ScenarioParams params;
  params.anchors = 4;
  params.slots = 1;
  const Scenario s = MakeScenario(params, 2, {{0, 1}}, 1e9, 100, 100);
  const auto pool = CandidatePool({}, s, CandidateMode::kSingletonAugment);
  int small_cell = 0;
  for (const GroundElement& e : pool) {
    EXPECT_EQ(e.users.size(), 1u);
    if (e.bs == 1) ++small_cell;
  }
  EXPECT_EQ(small_cell, 4);
  EXPECT_EQ(pool.size(), 8u);  // the MBS offers the same four
  EXPECT_TRUE(std::is_sorted(pool.begin(), pool.end()));
}

TEST(CandidatePool, AugmentationReplacesSingleton) {
  ScenarioParams params;
  params.anchors = 4;
  params.slots = 1;
  const Scenario s = MakeScenario(params, 2, {{0, 1}}, 1e9, 100, 100);
  const std::vector<GroundElement> current = {{1, 1, 0, {0}}};
  const auto pool = CandidatePool(current, s, CandidateMode::kSingletonAugment);
  auto has = [&](const GroundElement& e) {
    return std::find(pool.begin(), pool.end(), e) != pool.end();
  };
  EXPECT_TRUE(has({1, 1, 0, {0, 1}}));
  EXPECT_FALSE(has({1, 1, 0, {0}}));
  EXPECT_FALSE(has({1, 1, 0, {1}}));
  EXPECT_TRUE(has({1, 2, 0, {1}}));
}

TEST(CandidatePool, ExhaustiveSubsets) {
  ScenarioParams params;
  params.anchors = 3;
  params.slots = 1;
  const Scenario s = MakeScenario(params, 3, {{0, 2}}, 1e9, 100, 100);
  const auto pool = CandidatePool({}, s, CandidateMode::kExhaustiveSubsets);
  // 7 subsets at the MBS, 3 at the small cell.
  EXPECT_EQ(pool.size(), 10u);
  const Scenario big = MakeScenario(params, 13, {{0}}, 1e9, 100, 100);
  EXPECT_THROW(CandidatePool({}, big, CandidateMode::kExhaustiveSubsets),
               engine::InstanceTooLarge);
  EXPECT_THROW(BuildSubsetProblem(big), engine::InstanceTooLarge);
}

TEST(CandidateMode, Names) {
  EXPECT_EQ(ParseCandidateMode("singleton-augment"),
            CandidateMode::kSingletonAugment);
  EXPECT_EQ(ParseCandidateMode(ToString(CandidateMode::kExhaustiveSubsets)),
            CandidateMode::kExhaustiveSubsets);
  EXPECT_THROW(ParseCandidateMode("all"), std::invalid_argument);
}

TEST(Replacement, ExhaustedRateBlocksAugmentation) {
  const Scenario s = MakeScenario(ScenarioParams(), 2, {{0, 1}}, 1e9, 2.0, 0);
  const std::vector<GroundElement> current = {{1, 1, 0, {0}}};
  EXPECT_FALSE(ReplacementFeasible(current, current[0], {1, 1, 0, {0, 1}}, s,
                                   MakeBudgets(s)));
}

TEST(Replacement, ExhaustedCacheStillAllowsAugmentation) {
  const Scenario s =
      MakeScenario(ScenarioParams(), 2, {{0, 1}}, kSegmentBytes, 100.0, 0);
  const std::vector<GroundElement> current = {{1, 1, 0, {0}}};
  EXPECT_TRUE(ReplacementFeasible(current, current[0], {1, 1, 0, {0, 1}}, s,
                                  MakeBudgets(s)));
  EXPECT_THROW(ReplacementFeasible(current, current[0], {1, 2, 0, {0, 1}}, s,
                                   MakeBudgets(s)),
               std::invalid_argument);
}

TEST(Replacement, AgreesWithFromScratchFeasibility) {
  Rng rng(505);
  int checked = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const Scenario s = RandomScenario(rng);
    engine::GreedyConfig config;
    config.weights = {0.2, 0.5, 0.3};
    const auto policy =
        Solve(s, GreedyRule::kUniformCost, config, CandidateMode::kSingletonAugment)
            .policy;
    ASSERT_TRUE(XyFeasible(ToXy(policy, s), s));
    for (const GroundElement& old : policy) {
      for (int u : s.coverage.users_of_bs[old.bs]) {
        if (std::binary_search(old.users.begin(), old.users.end(), u)) continue;
        GroundElement next = old;
        next.users.insert(std::upper_bound(next.users.begin(), next.users.end(), u), u);
        std::vector<GroundElement> replaced;
        for (const auto& e : policy) replaced.push_back(e == old ? next : e);
        EXPECT_EQ(ReplacementFeasible(policy, old, next, s, MakeBudgets(s)),
                  XyFeasible(ToXy(replaced, s), s));
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 0);
}

TEST(JointModel, SolutionsAreFeasibleAndValued) {
  Rng rng(606);
  for (int trial = 0; trial < 100; ++trial) {
    const Scenario s = RandomScenario(rng);
    engine::GreedyConfig config;
    config.weights = {0.2, 0.5, 0.3};
    for (GreedyRule rule :
         {GreedyRule::kUniformCost, GreedyRule::kWeightedCostBenefit}) {
      const SolveResult r =
          Solve(s, rule, config, CandidateMode::kSingletonAugment);
      EXPECT_TRUE(XyFeasible(ToXy(r.policy, s), s));
      std::set<std::tuple<int, int, int>> segments;
      for (const auto& e : r.policy) {
        EXPECT_TRUE(segments.insert({e.bs, e.view, e.slot}).second);
      }
      EXPECT_NEAR(r.trace.final_value,
                  s.model.d_max() - XyAverageDistortion(ToXy(r.policy, s), s),
                  1e-9);
      for (const engine::Pick& p : r.trace.picks) EXPECT_GE(p.gain, -1e-12);
    }
  }
}

TEST(JointModel, LazyMatchesNaive) {
  Rng rng(707);
  for (int trial = 0; trial < 60; ++trial) {
    const Scenario s = RandomScenario(rng, 6, 1, 2);
    engine::GreedyConfig config;
    config.weights = {0.2, 0.5, 0.3};
    for (GreedyRule rule :
         {GreedyRule::kUniformCost, GreedyRule::kWeightedCostBenefit}) {
      config.lazy = true;
      const SolveResult lazy =
          Solve(s, rule, config, CandidateMode::kSingletonAugment);
      config.lazy = false;
      const SolveResult naive =
          Solve(s, rule, config, CandidateMode::kSingletonAugment);
      EXPECT_EQ(lazy.trace, naive.trace);
      EXPECT_EQ(lazy.policy, naive.policy);
    }
  }
}

TEST(JointModel, AllowedMaskAndFreeCache) {
  ScenarioParams params;
  params.anchors = 4;
  params.slots = 1;
  const Scenario s = MakeScenario(params, 2, {{0, 1}}, 0.0, 100.0, 0.0);
  engine::GreedyConfig config;
  config.weights = {0.2, 0.5, 0.3};
  // No cache: nothing fits.
  EXPECT_TRUE(Solve(s, GreedyRule::kUniformCost, config,
                    CandidateMode::kSingletonAugment)
                  .policy.empty());
  // Cache contents fixed elsewhere: only the allowed segment is used.
  JointOptions options;
  options.charge_cache = false;
  options.allowed.assign(s.SegmentCount(), 0);
  options.allowed[s.SegmentIndex(1, 2, 0)] = 1;
  const auto policy = Solve(s, GreedyRule::kUniformCost, config,
                            CandidateMode::kSingletonAugment, options)
                          .policy;
  ASSERT_EQ(policy.size(), 1u);
  EXPECT_EQ(policy[0], (GroundElement{1, 2, 0, {0, 1}}));
}

TEST(Solve, ModesAgreeOnValueScale) {
  Rng rng(808);
  for (int trial = 0; trial < 30; ++trial) {
    const Scenario s = RandomScenario(rng, 4, 1, 1);
    engine::GreedyConfig config;
    config.weights = {0.2, 0.5, 0.3};
    const SolveResult a = Solve(s, GreedyRule::kUniformCost, config,
                                CandidateMode::kExhaustiveSubsets);
    EXPECT_TRUE(XyFeasible(ToXy(a.policy, s), s));
    EXPECT_NEAR(a.trace.final_value, DistortionReductionValue(a.policy, s),
                1e-12);
    EXPECT_GE(a.trace.final_value + 1e-12, BaselineValue(s));
  }
}

}  // namespace
}  // namespace imvs::domain
