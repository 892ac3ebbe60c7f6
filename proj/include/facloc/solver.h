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

#ifndef FACLOC_SOLVER_H_
#define FACLOC_SOLVER_H_

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "facloc/model.h"
#include "facloc/rational.h"

namespace facloc {

struct OptResult {
  Solution best;
  Rational opt_welfare;
  // Every (facility, candidate) pair, facility-major then left to right.
  std::vector<std::pair<Solution, Rational>> full_table;
};

// Exhaustive search over all k * |C| solutions. Ties go to the lowest
// facility index, then the leftmost location.
OptResult OptimalSolution(const Instance& inst);

struct FacilityChoice {
  int facility = 1;
  Rational welfare;
};

// argmax_j of sum_{i in subset, alpha_ij = 1} u_i(j, loc); ties to the lowest
// index. Throws Error(kNotACandidate) if `loc` is not a candidate and
// Error(kIndexOutOfRange) for a bad agent index.
FacilityChoice BestFacilityAt(const Instance& inst, const Rational& loc,
                              std::span<const std::size_t> subset);
FacilityChoice BestFacilityAt(const Instance& inst, const Rational& loc);

}  // namespace facloc

#endif  // FACLOC_SOLVER_H_
