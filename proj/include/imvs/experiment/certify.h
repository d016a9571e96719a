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

// Approximation certification on tiny random instances solved exactly, and
// structure probes of the distortion-reduction objective.

#ifndef IMVS_EXPERIMENT_CERTIFY_H_
#define IMVS_EXPERIMENT_CERTIFY_H_

#include <cstdint>
#include <string>
#include <vector>

#include "imvs/domain/scenario.h"
#include "imvs/engine/approximation.h"
#include "imvs/engine/exhaustive.h"
#include "imvs/engine/probes.h"

namespace imvs::experiment {

// Random instance with N <= 2 small cells, U <= 3 users, V_p = 4, L = 1,
// T = 1 and random budgets and distortion parameters.
domain::Scenario TinyScenario(std::uint64_t seed);

struct CertifyRow {
  std::uint64_t seed = 0;
  int num_sbs = 0;
  int num_users = 0;
  int elements = 0;
  engine::ApproximationReport report;
};

struct CertifyReport {
  std::vector<CertifyRow> rows;
  double min_ratio = 1.0;
  double median_ratio = 1.0;
  int failures = 0;

  bool ok() const { return failures == 0; }
};

// Seeds first_seed .. first_seed + count - 1, exhaustive-subsets pool.
CertifyReport TinyCertify(int count, std::uint64_t first_seed,
                          std::uint64_t state_limit = engine::kDefaultStateLimit);

std::string FormatCertify(const CertifyReport& report);

// Random instance with V_p <= 6, N <= 3, U <= 6, T <= 2.
domain::Scenario ProbeScenario(std::uint64_t seed);

struct ProbeSuiteReport {
  int instances = 0;
  engine::ProbeReport submodularity;
  engine::ProbeReport monotonicity;
  engine::ProbeReport consistency;
  // |S|^2, which is supermodular; the probe must flag it.
  engine::ProbeReport control;

  bool ok() const {
    return submodularity.violations == 0 && monotonicity.violations == 0 &&
           consistency.violations == 0 && control.violations > 0;
  }
};

// About `trials` samples per property, spread over several instances.
ProbeSuiteReport RunProbeSuite(int trials, std::uint64_t seed);

std::string FormatProbeSuite(const ProbeSuiteReport& report);

}  // namespace imvs::experiment

#endif  // IMVS_EXPERIMENT_CERTIFY_H_
