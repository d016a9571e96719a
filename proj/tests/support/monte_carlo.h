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

// Monte Carlo estimate of segment popularity by simulating viewers, with its
// own transition kernel built from the view positions.

#ifndef IMVS_TESTS_SUPPORT_MONTE_CARLO_H_
#define IMVS_TESTS_SUPPORT_MONTE_CARLO_H_

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace imvs::testing {

// Visit frequencies freq[t][k] over `walks` simulated viewers.
inline std::vector<std::vector<double>> SimulateViewers(
    int anchors, int virtual_per_gap, int slots, double window, double sigma2,
    int walks, std::uint64_t seed) {
  const int step = virtual_per_gap + 1;
  const int K = (anchors - 1) * step + 1;
  std::vector<std::discrete_distribution<int>> move;
  for (int i = 0; i < K; ++i) {
    std::vector<double> w(K, 0.0);
    for (int j = 0; j < K; ++j) {
      const double dv = static_cast<double>(j - i) / step;
      if (std::abs(dv) <= window) w[j] = std::exp(-dv * dv / (2 * sigma2));
    }
    move.emplace_back(w.begin(), w.end());
  }
  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<int> first(0, anchors - 1);
  std::vector<std::vector<double>> freq(slots, std::vector<double>(K, 0.0));
  for (int w = 0; w < walks; ++w) {
    int k = first(gen) * step;
    freq[0][k] += 1;
    for (int t = 1; t < slots; ++t) {
      k = move[k](gen);
      freq[t][k] += 1;
    }
  }
  for (auto& row : freq) {
    for (double& x : row) x /= walks;
  }
  return freq;
}

}  // namespace imvs::testing

#endif  // IMVS_TESTS_SUPPORT_MONTE_CARLO_H_
