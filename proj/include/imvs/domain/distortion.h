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

// Synthesis distortion of a view rendered from a left and a right anchor:
//
//   d_v(v_l, v_r) = gamma * exp(alpha_v (v_r - v_l))
//                 * (exp(beta_v * min(v - v_l, v_r - v)) - 1)
//
// The first factor grows with the anchor spacing, the second with the
// distance to the nearer anchor.

#ifndef IMVS_DOMAIN_DISTORTION_H_
#define IMVS_DOMAIN_DISTORTION_H_

#include <cstdint>
#include <vector>

#include "imvs/domain/view_grid.h"

namespace imvs::domain {

// Direct evaluation on view positions. Throws std::domain_error unless
// v_l <= v <= v_r and v_l < v_r.
double SynthDistortion(double v, double v_l, double v_r, double gamma,
                       double alpha, double beta);

class DistortionModel {
 public:
  DistortionModel() = default;
  // Per-view parameters, indexed by grid view. Throws std::invalid_argument
  // on size mismatch, gamma <= 0 or negative alpha/beta.
  DistortionModel(const ViewGrid& grid, double gamma, std::vector<double> alpha,
                  std::vector<double> beta);
  // Same alpha and beta for every view.
  static DistortionModel Uniform(const ViewGrid& grid, double gamma,
                                 double alpha, double beta);

  // d_k for grid view k synthesized from grid views k_l <= k <= k_r. Offsets
  // are taken on the integer grid, so the value is exactly 0 at either end.
  double At(int k, int k_l, int k_r) const;

  // Largest distortion with only the two extreme anchors available.
  double d_max() const { return d_max_; }
  double gamma() const { return gamma_; }
  const std::vector<double>& alpha() const { return alpha_; }
  const std::vector<double>& beta() const { return beta_; }
  const ViewGrid& grid() const { return grid_; }

 private:
  ViewGrid grid_;
  double gamma_ = 1.0;
  std::vector<double> alpha_;
  std::vector<double> beta_;
  double d_max_ = 0.0;
};

// Local defaults for the model parameters.
inline constexpr double kDefaultGamma = 1.0;
inline constexpr double kDefaultAlpha = 0.05;
inline constexpr double kDefaultBeta = 0.3;

// Distortion of every grid view given the delivered anchors (bit a of
// `delivered` set for anchor a): 0 for delivered anchors, otherwise the
// distortion from the nearest delivered anchor on each side. Throws
// std::invalid_argument if an extreme anchor is missing.
std::vector<double> SegmentDistortions(std::uint64_t delivered,
                                       const DistortionModel& model);

}  // namespace imvs::domain

#endif  // IMVS_DOMAIN_DISTORTION_H_
