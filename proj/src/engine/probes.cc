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

#include "imvs/engine/probes.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "imvs/engine/random.h"
#include "imvs/engine/tolerance.h"

namespace imvs::engine {
namespace {

// Moves `count` uniformly chosen elements to the front of `pool`.
void PartialShuffle(std::vector<ElementId>& pool, std::size_t count,
                    Rng& rng) {
  for (std::size_t i = 0; i < count && i < pool.size(); ++i) {
    const auto j = static_cast<std::size_t>(
        rng.UniformInt(static_cast<std::int64_t>(i),
                       static_cast<std::int64_t>(pool.size()) - 1));
    std::swap(pool[i], pool[j]);
  }
}

// Set size in [0, max_size], skewed toward small sets so that marginals are
// not all zero on large ground sets.
std::size_t SampleSize(std::size_t max_size, Rng& rng) {
  const double u = rng.Uniform();
  return std::min(max_size, static_cast<std::size_t>(
                                 std::floor(u * u * u * (max_size + 1))));
}

std::vector<ElementId> SubsetOf(const std::vector<ElementId>& set, Rng& rng) {
  std::vector<ElementId> subset;
  for (ElementId e : set) {
    if (rng.Bernoulli(0.5)) subset.push_back(e);
  }
  return subset;
}

void Record(ProbeReport& report, double shortfall, double scale) {
  if (shortfall > Slack(scale)) {
    ++report.violations;
    report.max_violation = std::max(report.max_violation, shortfall);
  }
}

void CheckArgs(std::span<const ElementId> ground, int trials,
               std::size_t min_ground) {
  if (trials < 1) throw std::invalid_argument("probe needs trials >= 1");
  if (ground.size() < min_ground) {
    throw std::invalid_argument("probe needs at least " +
                                std::to_string(min_ground) + " elements");
  }
}

}  // namespace

ProbeReport SubmodularityProbe(const ValueOracle& oracle,
                               std::span<const ElementId> ground, int trials,
                               std::uint64_t seed) {
  CheckArgs(ground, trials, 2);
  Rng rng(seed);
  std::vector<ElementId> pool(ground.begin(), ground.end());
  ProbeReport report;
  report.trials = trials;
  for (int trial = 0; trial < trials; ++trial) {
    const std::size_t size = SampleSize(pool.size() - 1, rng);
    PartialShuffle(pool, size + 1, rng);
    const ElementId w = pool[0];
    std::vector<ElementId> z2(pool.begin() + 1, pool.begin() + 1 + size);
    std::vector<ElementId> z1 = SubsetOf(z2, rng);

    const double g1 = oracle.Evaluate(z1);
    const double g2 = oracle.Evaluate(z2);
    z1.push_back(w);
    z2.push_back(w);
    const double g1w = oracle.Evaluate(z1);
    const double g2w = oracle.Evaluate(z2);
    const double scale = std::max({std::abs(g1), std::abs(g2),
                                   std::abs(g1w), std::abs(g2w)});
    Record(report, (g2w - g2) - (g1w - g1), scale);
  }
  return report;
}

ProbeReport MonotonicityProbe(const ValueOracle& oracle,
                              std::span<const ElementId> ground, int trials,
                              std::uint64_t seed) {
  CheckArgs(ground, trials, 1);
  Rng rng(seed);
  std::vector<ElementId> pool(ground.begin(), ground.end());
  ProbeReport report;
  report.trials = trials;
  for (int trial = 0; trial < trials; ++trial) {
    // Z2 is never empty, otherwise the check is vacuous.
    const std::size_t size = 1 + SampleSize(pool.size() - 1, rng);
    PartialShuffle(pool, size, rng);
    std::vector<ElementId> z2(pool.begin(), pool.begin() + size);
    std::vector<ElementId> z1 = SubsetOf(z2, rng);
    const double g1 = oracle.Evaluate(z1);
    const double g2 = oracle.Evaluate(z2);
    Record(report, g1 - g2, std::max(std::abs(g1), std::abs(g2)));
  }
  return report;
}

ProbeReport MarginalConsistencyProbe(const ValueOracle& oracle,
                                     std::span<const ElementId> ground,
                                     int trials, std::uint64_t seed) {
  CheckArgs(ground, trials, 1);
  Rng rng(seed);
  std::vector<ElementId> pool(ground.begin(), ground.end());
  ProbeReport report;
  report.trials = trials;
  for (int trial = 0; trial < trials; ++trial) {
    const std::size_t size = SampleSize(pool.size() - 1, rng);
    PartialShuffle(pool, size + 1, rng);
    const ElementId e = pool[0];
    std::vector<ElementId> set(pool.begin() + 1, pool.begin() + 1 + size);
    const double marginal = oracle.Marginal(set, e);
    const double base = oracle.Evaluate(set);
    set.push_back(e);
    const double with = oracle.Evaluate(set);
    const double diff = with - base;
    Record(report, std::abs(marginal - diff),
           std::max({std::abs(with), std::abs(base), std::abs(marginal)}));
  }
  return report;
}

}  // namespace imvs::engine
