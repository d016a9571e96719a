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

// Acceptance report: one PASS/FAIL line per criterion. Exits 0 only when
// every criterion passes.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "imvs/domain/distortion.h"
#include "imvs/domain/popularity.h"
#include "imvs/domain/value.h"
#include "imvs/engine/approximation.h"
#include "imvs/engine/random.h"
#include "imvs/experiment/certify.h"
#include "imvs/experiment/config.h"
#include "imvs/experiment/sweep.h"
#include "support/monte_carlo.h"
#include "support/reference.h"

namespace {

using namespace imvs;
namespace fs = std::filesystem;

// Pinned tolerances.
constexpr double kRatioSlack = 1e-9;
constexpr double kAnchorSlack = 1e-9;
constexpr double kEquivalenceTol = 1e-9;
constexpr double kSumTol = 1e-9;
constexpr double kMonteCarloSigmas = 3.0;
constexpr double kStrictShare = 0.8;

constexpr int kCertifyInstances = 50;
constexpr int kProbeTrials = 1000;
constexpr int kAnchorTuples = 10000;
constexpr int kEquivalencePolicies = 200;
constexpr int kWalks = 1000000;

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double Seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start)
        .count();
  }
};

int failures = 0;

void Report(int id, bool pass, const std::string& name,
            const std::string& detail, const Timer& timer) {
  if (!pass) ++failures;
  std::printf("criterion %d %s %s: %s (%.2f s)\n", id, pass ? "PASS" : "FAIL",
              name.c_str(), detail.c_str(), timer.Seconds());
  std::fflush(stdout);
}

std::string Fmt(const char* format, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), format, args...);
  return buf;
}

void ApproximationBound() {
  const Timer timer;
  const auto report = experiment::TinyCertify(kCertifyInstances, 1);
  bool pass = report.rows.size() == kCertifyInstances;
  for (const auto& row : report.rows) {
    pass = pass && row.report.ratio > engine::kCertifyThreshold - kRatioSlack;
  }
  Report(1, pass, "approximation bound",
         Fmt("%zu instances, min ratio %.6f, median %.6f, threshold %.4f",
             report.rows.size(), report.min_ratio, report.median_ratio,
             engine::kCertifyThreshold),
         timer);
}

void StructureProbes() {
  const Timer timer;
  const auto r = experiment::RunProbeSuite(kProbeTrials, 1);
  const bool pass = r.submodularity.trials >= kProbeTrials &&
                    r.monotonicity.trials >= kProbeTrials && r.ok();
  Report(2, pass, "submodularity and monotonicity",
         Fmt("%d/%d submodularity and %d/%d monotonicity violations, control "
             "flagged %d times",
             r.submodularity.violations, r.submodularity.trials,
             r.monotonicity.violations, r.monotonicity.trials,
             r.control.violations),
         timer);
}

void DiminishingReduction() {
  const Timer timer;
  Rng rng(31337);
  int violations = 0;
  double worst = 0.0;
  for (int i = 0; i < kAnchorTuples; ++i) {
    const int anchors = static_cast<int>(rng.UniformInt(3, 10));
    const domain::ViewGrid grid(anchors,
                                static_cast<int>(rng.UniformInt(0, 4)));
    std::vector<double> alpha(grid.size()), beta(grid.size());
    for (int k = 0; k < grid.size(); ++k) {
      alpha[k] = rng.Uniform(0.01, 1.0);
      beta[k] = rng.Uniform(0.01, 2.0);
    }
    const domain::DistortionModel model(grid, rng.Uniform(0.1, 5.0), alpha,
                                        beta);
    auto random_mask = [&] {
      std::uint64_t m = 1 | (std::uint64_t{1} << (anchors - 1));
      for (int a = 1; a < anchors - 1; ++a) {
        if (rng.Bernoulli(0.5)) m |= std::uint64_t{1} << a;
      }
      return m;
    };
    const std::uint64_t v1 = random_mask();
    const std::uint64_t v2 = v1 | random_mask();
    const std::uint64_t extra = std::uint64_t{1}
                                << rng.UniformInt(0, anchors - 1);
    const int k = static_cast<int>(rng.UniformInt(0, grid.size() - 1));
    const double gain1 = domain::SegmentDistortions(v1, model)[k] -
                         domain::SegmentDistortions(v1 | extra, model)[k];
    const double gain2 = domain::SegmentDistortions(v2, model)[k] -
                         domain::SegmentDistortions(v2 | extra, model)[k];
    if (gain1 < gain2 - kAnchorSlack) {
      ++violations;
      worst = std::max(worst, gain2 - gain1);
    }
  }
  Report(3, violations == 0, "diminishing distortion reduction",
         Fmt("%d/%d tuples violate, worst %.3g", violations, kAnchorTuples,
             worst),
         timer);
}

void FormulationEquivalence() {
  const Timer timer;
  Rng rng(4242);
  double worst = 0.0;
  for (int i = 0; i < kEquivalencePolicies; ++i) {
    const domain::Scenario s = experiment::ProbeScenario(i + 1);
    const auto policy = testing::RandomPolicy(rng, s);
    const double value = domain::DistortionReductionValue(policy, s);
    const double distortion =
        testing::XyAverageDistortion(testing::ToXy(policy, s), s);
    worst = std::max(worst, std::abs(value + distortion - s.model.d_max()));
  }
  Report(4, worst <= kEquivalenceTol, "formulation equivalence",
         Fmt("%d policies, max |value + distortion - D_max| = %.3g",
             kEquivalencePolicies, worst),
         timer);
}

experiment::ExperimentConfig GridConfig(experiment::SweepAxis axis,
                                        std::vector<double> values) {
  experiment::ExperimentConfig c = experiment::DeskProfile();
  c.axis = axis;
  c.axis_values = std::move(values);
  return c;
}

const std::vector<double> kCacheFractions = {0.05, 0.1, 0.2};
const std::vector<double> kMbsRates = {50.0, 100.0};

// Cache sweeps at each R_0, then R_0 sweeps at each cache fraction.
struct GridResults {
  std::vector<experiment::SweepResult> cache_axis;
  std::vector<experiment::SweepResult> rate_axis;
};

GridResults RunGrid() {
  GridResults out;
  for (double rate : kMbsRates) {
    auto c = GridConfig(experiment::SweepAxis::kCacheFraction, kCacheFractions);
    c.network.mbs_rate_mbps = rate;
    out.cache_axis.push_back(experiment::RunSweep(c));
  }
  for (double fraction : kCacheFractions) {
    auto c = GridConfig(experiment::SweepAxis::kMbsRate, kMbsRates);
    c.cache_fraction = fraction;
    out.rate_axis.push_back(experiment::RunSweep(c));
  }
  return out;
}

void Dominance(const GridResults& grid, const Timer& timer) {
  int checked = 0, violations = 0, strict = 0;
  for (const auto& r : grid.cache_axis) {
    checked += r.properties.dominance_checked;
    violations += r.properties.dominance_violations;
    strict += r.properties.dominance_strict;
  }
  const double share = checked ? double(strict) / checked : 0.0;
  Report(5, checked > 0 && violations == 0 && share >= kStrictShare,
         "joint beats max-popularity",
         Fmt("%d/%d points violate, strict on %.1f%% (need 0 and >= %.0f%%)",
             violations, checked, 100 * share, 100 * kStrictShare),
         timer);
}

void UcWcbIdentity(const GridResults& grid, const Timer& timer) {
  int compared = 0, identical = 0;
  for (const auto& r : grid.cache_axis) {
    compared += r.properties.uc_wcb_compared;
    identical += r.properties.uc_wcb_identical;
  }
  Report(6, compared > 0 && identical == compared, "UC-J and WCB-J identical",
         Fmt("%d/%d points with identical picks and values", identical,
             compared),
         timer);
}

void MonotoneTrends(const GridResults& grid, const Timer& timer) {
  int checked[2] = {0, 0}, violations[2] = {0, 0};
  for (const auto& r : grid.cache_axis) {
    checked[0] += r.properties.monotone_checked;
    violations[0] += r.properties.monotone_violations;
  }
  for (const auto& r : grid.rate_axis) {
    checked[1] += r.properties.monotone_checked;
    violations[1] += r.properties.monotone_violations;
  }
  Report(7, checked[0] > 0 && checked[1] > 0 && violations[0] + violations[1] == 0,
         "monotone trends",
         Fmt("%d/%d cache steps and %d/%d R0 steps decrease", violations[0],
             checked[0], violations[1], checked[1]),
         timer);
}

std::string ReadFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream text;
  text << in.rdbuf();
  return text.str();
}

// Every file under `dir`, keyed by relative path, concatenated.
std::string Snapshot(const fs::path& dir) {
  std::vector<fs::path> files;
  for (const auto& e : fs::recursive_directory_iterator(dir)) {
    if (e.is_regular_file()) files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  std::string out;
  for (const auto& f : files) {
    out += fs::relative(f, dir).string() + "\n" + ReadFile(f);
  }
  return out;
}

void Determinism() {
  const Timer timer;
  // Same paths both times: the output location is part of the config.
  const fs::path dir = fs::temp_directory_path() / "imvs_acceptance";
  std::string snapshot[2];
  std::size_t bytes = 0;
  for (int run = 0; run < 2; ++run) {
    fs::remove_all(dir);
    fs::create_directories(dir);
    for (auto axis : {experiment::SweepAxis::kCacheFraction,
                      experiment::SweepAxis::kMbsRate}) {
      auto c = axis == experiment::SweepAxis::kCacheFraction
                   ? GridConfig(axis, kCacheFractions)
                   : GridConfig(axis, kMbsRates);
      const std::string name = experiment::ToString(axis);
      c.output = (dir / (name + ".csv")).string();
      c.trace_dir = (dir / (name + "_traces")).string();
      experiment::RunSweepCommand(c);
    }
    std::ofstream(dir / "certify.csv", std::ios::binary)
        << experiment::FormatCertify(experiment::TinyCertify(10, 7));
    std::ofstream(dir / "probe.txt", std::ios::binary)
        << experiment::FormatProbeSuite(experiment::RunProbeSuite(200, 7));
    snapshot[run] = Snapshot(dir);
    bytes = snapshot[run].size();
  }
  fs::remove_all(dir);
  Report(8, !snapshot[0].empty() && snapshot[0] == snapshot[1],
         "byte-identical reruns",
         Fmt("CSV, metadata, traces, certify and probe output, %zu bytes",
             bytes),
         timer);
}

void PopularityChain() {
  const Timer timer;
  const int anchors = 4, L = 1, slots = 3;
  const double window = domain::kDefaultWindow;
  const domain::ViewGrid grid(anchors, L);
  const double sigma2 = domain::DefaultSigma2(grid);
  const auto table = domain::BuildPopularity(grid, slots, window, sigma2);
  bool first_exact = true;
  double worst_sum = 0.0;
  for (int k = 0; k < grid.size(); ++k) {
    first_exact = first_exact &&
                  table.At(k, 0) == (grid.IsAnchor(k) ? 1.0 / anchors : 0.0);
  }
  for (int t = 0; t < slots; ++t) {
    double sum = 0.0;
    for (double p : table.Slot(t)) sum += p;
    worst_sum = std::max(worst_sum, std::abs(sum - 1.0));
  }
  const auto freq = testing::SimulateViewers(anchors, L, slots, window, sigma2,
                                             kWalks, 20240601);
  int outside = 0;
  double worst_z = 0.0;
  for (int t = 0; t < slots; ++t) {
    for (int k = 0; k < grid.size(); ++k) {
      const double p = table.At(k, t);
      const double sigma = std::sqrt(p * (1 - p) / kWalks);
      const double err = std::abs(freq[t][k] - p);
      if (sigma > 0) worst_z = std::max(worst_z, err / sigma);
      if (err > kMonteCarloSigmas * sigma + 1e-12) ++outside;
    }
  }
  Report(9, first_exact && worst_sum <= kSumTol && outside == 0,
         "popularity chain",
         Fmt("first slot %s, max |sum - 1| = %.2g, %d cells beyond 3 sigma "
             "(max %.2f sigma) over %d walks",
             first_exact ? "exact" : "not exact", worst_sum, outside, worst_z,
             kWalks),
         timer);
}

}  // namespace

int main() {
  ApproximationBound();
  StructureProbes();
  DiminishingReduction();
  FormulationEquivalence();
  {
    const Timer timer;
    const GridResults grid = RunGrid();
    Dominance(grid, timer);
    UcWcbIdentity(grid, timer);
    MonotoneTrends(grid, timer);
  }
  Determinism();
  PopularityChain();
  std::printf("%d of 9 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
