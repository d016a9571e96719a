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

// Segment popularity from a view-switching Markov chain. The first segment
// is drawn uniformly among the anchors; afterwards a viewer at position v_i
// moves to any grid view v_j with |v_j - v_i| <= W with probability
// proportional to exp(-(v_j - v_i)^2 / (2 sigma^2)). Staying put is one of
// the moves.

#ifndef IMVS_DOMAIN_POPULARITY_H_
#define IMVS_DOMAIN_POPULARITY_H_

#include <vector>

#include "imvs/domain/view_grid.h"

namespace imvs::domain {

class PopularityTable {
 public:
  PopularityTable() = default;
  // p[t][k]; every row must have grid.size() entries.
  explicit PopularityTable(std::vector<std::vector<double>> p)
      : p_(std::move(p)) {}

  double At(int k, int t) const { return p_[t][k]; }
  const std::vector<double>& Slot(int t) const { return p_[t]; }
  int slots() const { return static_cast<int>(p_.size()); }

 private:
  std::vector<std::vector<double>> p_;
};

inline constexpr double kDefaultWindow = 8.0;

// sigma^2 = 5 / (L + 1).
double DefaultSigma2(const ViewGrid& grid);

// Row-normalized transition matrix over all grid views.
std::vector<std::vector<double>> TransitionKernel(const ViewGrid& grid,
                                                  double window,
                                                  double sigma2);

// Throws std::invalid_argument unless slots >= 1, window > 0, sigma2 > 0.
PopularityTable BuildPopularity(const ViewGrid& grid, int slots, double window,
                                double sigma2);

}  // namespace imvs::domain

#endif  // IMVS_DOMAIN_POPULARITY_H_
