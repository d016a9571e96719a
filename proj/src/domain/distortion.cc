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

#include "imvs/domain/distortion.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace imvs::domain {

ViewGrid::ViewGrid(int anchors, int virtual_per_gap)
    : anchors_(anchors), virtual_per_gap_(virtual_per_gap) {
  if (anchors <= 2 || anchors > 64) {
    throw std::invalid_argument("anchor count must be in 3..64, got " +
                                std::to_string(anchors));
  }
  if (virtual_per_gap < 0) {
    throw std::invalid_argument("virtual views per gap must be >= 0");
  }
}

double SynthDistortion(double v, double v_l, double v_r, double gamma,
                       double alpha, double beta) {
  if (!(v_l < v_r) || v < v_l || v > v_r) {
    throw std::domain_error("view outside its anchor interval");
  }
  return gamma * std::exp(alpha * (v_r - v_l)) *
         std::expm1(beta * std::min(v - v_l, v_r - v));
}

DistortionModel::DistortionModel(const ViewGrid& grid, double gamma,
                                 std::vector<double> alpha,
                                 std::vector<double> beta)
    : grid_(grid), gamma_(gamma), alpha_(std::move(alpha)),
      beta_(std::move(beta)) {
  const auto n = static_cast<std::size_t>(grid.size());
  if (alpha_.size() != n || beta_.size() != n) {
    throw std::invalid_argument("need one alpha and one beta per grid view");
  }
  if (!(gamma_ > 0.0) || !std::isfinite(gamma_)) {
    throw std::invalid_argument("gamma must be positive");
  }
  for (std::size_t k = 0; k < n; ++k) {
    if (!(alpha_[k] >= 0.0) || !(beta_[k] >= 0.0) ||
        !std::isfinite(alpha_[k]) || !std::isfinite(beta_[k])) {
      throw std::invalid_argument("alpha and beta must be nonnegative");
    }
  }
  const int last = grid.size() - 1;
  for (int k = 0; k <= last; ++k) d_max_ = std::max(d_max_, At(k, 0, last));
}

DistortionModel DistortionModel::Uniform(const ViewGrid& grid, double gamma,
                                         double alpha, double beta) {
  const auto n = static_cast<std::size_t>(grid.size());
  return DistortionModel(grid, gamma, std::vector<double>(n, alpha),
                         std::vector<double>(n, beta));
}

double DistortionModel::At(int k, int k_l, int k_r) const {
  const double delta = 1.0 / grid_.step();
  const int near = std::min(k - k_l, k_r - k);
  return gamma_ * std::exp(alpha_[k] * (k_r - k_l) * delta) *
         std::expm1(beta_[k] * near * delta);
}

std::vector<double> SegmentDistortions(std::uint64_t delivered,
                                       const DistortionModel& model) {
  const ViewGrid& grid = model.grid();
  const int last = grid.last_anchor();
  if (!(delivered & 1) || !((delivered >> last) & 1)) {
    throw std::invalid_argument("extreme anchors must be delivered");
  }
  std::vector<double> out(grid.size(), 0.0);
  int left = 0;
  while (left < last) {
    const std::uint64_t above = delivered >> (left + 1);
    const int right = left + 1 + std::countr_zero(above);
    const int k_l = grid.GridIndex(left);
    const int k_r = grid.GridIndex(right);
    for (int k = k_l + 1; k < k_r; ++k) out[k] = model.At(k, k_l, k_r);
    left = right;
  }
  return out;
}

}  // namespace imvs::domain
