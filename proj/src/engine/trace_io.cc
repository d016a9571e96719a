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

#include "imvs/engine/trace_io.h"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace imvs::engine {
namespace {

std::string FormatReal(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

ConstraintKey ParseKey(const std::string& field) {
  const auto colon = field.find(':');
  if (colon == std::string::npos) {
    throw std::invalid_argument("bad constraint field: " + field);
  }
  return {std::stoi(field.substr(0, colon)),
          std::stoll(field.substr(colon + 1))};
}

}  // namespace

void WriteTrace(std::ostream& out, const SolutionTrace& trace,
                const ElementLabeler& labeler) {
  out << "# final_value " << FormatReal(trace.final_value) << '\n';
  for (const Pick& pick : trace.picks) {
    out << pick.element << '\t' << FormatReal(pick.gain) << '\t'
        << (pick.accepted ? 1 : 0) << '\t'
        << (pick.rejected_by ? ToString(*pick.rejected_by) : "-");
    if (labeler) out << '\t' << labeler(pick.element);
    out << '\n';
  }
}

SolutionTrace ReadTrace(std::istream& in) {
  SolutionTrace trace;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line.rfind("# final_value ", 0) == 0) {
      trace.final_value = std::stod(line.substr(14));
      continue;
    }
    if (line[0] == '#') continue;
    std::istringstream fields(line);
    std::string id, gain, accepted, rejected;
    if (!std::getline(fields, id, '\t') || !std::getline(fields, gain, '\t') ||
        !std::getline(fields, accepted, '\t') ||
        !std::getline(fields, rejected, '\t')) {
      throw std::invalid_argument("bad trace line: " + line);
    }
    Pick pick;
    pick.element = static_cast<ElementId>(std::stoul(id));
    pick.gain = std::stod(gain);
    if (accepted != "0" && accepted != "1") {
      throw std::invalid_argument("bad accepted flag: " + accepted);
    }
    pick.accepted = accepted == "1";
    if (rejected != "-") pick.rejected_by = ParseKey(rejected);
    trace.picks.push_back(pick);
  }
  return trace;
}

}  // namespace imvs::engine
