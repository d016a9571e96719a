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

#ifndef IMVS_DOMAIN_VIEW_GRID_H_
#define IMVS_DOMAIN_VIEW_GRID_H_

#include <stdexcept>

namespace imvs::domain {

// Viewpoints on a uniform grid. Grid index k = 0..(V_p - 1)(L + 1) sits at
// position 1 + k / (L + 1); anchors (captured views) are the multiples of
// L + 1, the rest are virtual views synthesized from two anchors.
//
// Anchor ids are 0-based: anchor a lives at grid index a * (L + 1).
class ViewGrid {
 public:
  ViewGrid() = default;
  // Throws std::invalid_argument unless 2 < anchors <= 64 and L >= 0.
  ViewGrid(int anchors, int virtual_per_gap);

  int anchors() const { return anchors_; }
  int virtual_per_gap() const { return virtual_per_gap_; }
  int step() const { return virtual_per_gap_ + 1; }
  int size() const { return (anchors_ - 1) * step() + 1; }

  double Position(int k) const {
    return 1.0 + static_cast<double>(k) / step();
  }
  bool IsAnchor(int k) const { return k % step() == 0; }
  int GridIndex(int anchor) const { return anchor * step(); }
  int last_anchor() const { return anchors_ - 1; }

 private:
  int anchors_ = 3;
  int virtual_per_gap_ = 0;
};

}  // namespace imvs::domain

#endif  // IMVS_DOMAIN_VIEW_GRID_H_
