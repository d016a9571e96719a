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

#include "imvs/domain/popularity.h"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace imvs::domain {

double DefaultSigma2(const ViewGrid& grid) { return 5.0 / grid.step(); }

std::vector<std::vector<double>> TransitionKernel(const ViewGrid& grid,
                                                  double window,
                                                  double sigma2) {
  const int n = grid.size();
  const double delta = 1.0 / grid.step();
  std::vector<std::vector<double>> kernel(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i) {
    double row_sum = 0.0;
    for (int j = 0; j < n; ++j) {
      const double gap = std::abs(j - i) * delta;
      if (gap > window + 1e-12) continue;
      kernel[i][j] = std::exp(-gap * gap / (2.0 * sigma2));
      row_sum += kernel[i][j];
    }
    for (double& w : kernel[i]) w /= row_sum;
  }
  return kernel;
}

PopularityTable BuildPopularity(const ViewGrid& grid, int slots, double window,
                                double sigma2) {
  if (slots < 1) throw std::invalid_argument("need at least one slot");
  if (!(window > 0.0)) throw std::invalid_argument("window must be positive");
  if (!(sigma2 > 0.0)) throw std::invalid_argument("sigma2 must be positive");
  const int n = grid.size();
  const auto kernel = TransitionKernel(grid, window, sigma2);
  std::vector<std::vector<double>> p(slots, std::vector<double>(n, 0.0));
  for (int a = 0; a < grid.anchors(); ++a) {
    p[0][grid.GridIndex(a)] = 1.0 / grid.anchors();
  }
  for (int t = 1; t < slots; ++t) {
    for (int i = 0; i < n; ++i) {
      if (p[t - 1][i] == 0.0) continue;
      for (int j = 0; j < n; ++j) p[t][j] += p[t - 1][i] * kernel[i][j];
    }
  }
  return PopularityTable(std::move(p));
}

}  // namespace imvs::domain
