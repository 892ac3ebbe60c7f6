// Copyright 2026 The facloc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "facloc/solver.h"

#include <numeric>
#include <string>

#include "facloc/error.h"

namespace facloc {

OptResult OptimalSolution(const Instance& inst) {
  OptResult result;
  result.full_table.reserve(static_cast<std::size_t>(inst.k()) *
                            inst.candidates().size());
  bool have_best = false;
  for (int j = 1; j <= inst.k(); ++j) {
    for (const Rational& x : inst.candidates()) {
      Rational sw;
      for (const Agent& a : inst.agents()) sw += AgentUtility(a, j, x);
      if (!have_best || sw > result.opt_welfare) {
        result.best = Solution{j, x};
        result.opt_welfare = sw;
        have_best = true;
      }
      result.full_table.emplace_back(Solution{j, x}, std::move(sw));
    }
  }
  return result;
}

FacilityChoice BestFacilityAt(const Instance& inst, const Rational& loc,
                              std::span<const std::size_t> subset) {
  if (!inst.IsCandidate(loc)) {
    throw Error(ErrorCode::kNotACandidate, loc.ToString());
  }
  for (std::size_t i : subset) {
    if (i >= inst.n()) {
      throw Error(ErrorCode::kIndexOutOfRange,
                  "agent index " + std::to_string(i));
    }
  }
  FacilityChoice best;
  for (int j = 1; j <= inst.k(); ++j) {
    Rational sw;
    for (std::size_t i : subset) sw += AgentUtility(inst.agents()[i], j, loc);
    if (j == 1 || sw > best.welfare) best = FacilityChoice{j, std::move(sw)};
  }
  return best;
}

FacilityChoice BestFacilityAt(const Instance& inst, const Rational& loc) {
  std::vector<std::size_t> all(inst.n());
  std::iota(all.begin(), all.end(), std::size_t{0});
  return BestFacilityAt(inst, loc, all);
}

}  // namespace facloc
