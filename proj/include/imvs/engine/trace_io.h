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

// Line-oriented trace records:
//
//   # final_value <g>
//   <element id>\t<gain>\t<0|1>\t<group:index or ->[\t<label>]
//
// Reals are printed with 17 significant digits, so records round-trip.

#ifndef IMVS_ENGINE_TRACE_IO_H_
#define IMVS_ENGINE_TRACE_IO_H_

#include <functional>
#include <iosfwd>
#include <string>

#include "imvs/engine/types.h"

namespace imvs::engine {

using ElementLabeler = std::function<std::string(ElementId)>;

void WriteTrace(std::ostream& out, const SolutionTrace& trace,
                const ElementLabeler& labeler = nullptr);

// Parses picks and final_value; labels are ignored. Throws
// std::invalid_argument on malformed input.
SolutionTrace ReadTrace(std::istream& in);

}  // namespace imvs::engine

#endif  // IMVS_ENGINE_TRACE_IO_H_
