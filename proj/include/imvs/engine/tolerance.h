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

#ifndef IMVS_ENGINE_TOLERANCE_H_
#define IMVS_ENGINE_TOLERANCE_H_

#include <algorithm>
#include <cmath>

namespace imvs::engine {

inline constexpr double kRelTol = 1e-9;
inline constexpr double kAbsTol = 1e-12;

// Slack allowed when comparing quantities of magnitude `scale`.
inline double Slack(double scale) {
  return kRelTol * std::abs(scale) + kAbsTol;
}

// a <= b up to tolerance, scaled by the larger magnitude.
inline bool ApproxLe(double a, double b) {
  return a <= b + Slack(std::max(std::abs(a), std::abs(b)));
}

inline bool ApproxGe(double a, double b) { return ApproxLe(b, a); }

inline bool ApproxEq(double a, double b) {
  return ApproxLe(a, b) && ApproxLe(b, a);
}

}  // namespace imvs::engine

#endif  // IMVS_ENGINE_TOLERANCE_H_
