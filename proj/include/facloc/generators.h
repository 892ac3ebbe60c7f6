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

#ifndef FACLOC_GENERATORS_H_
#define FACLOC_GENERATORS_H_

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "facloc/model.h"
#include "facloc/rational.h"

namespace facloc {

enum class ApprovalModel {
  kSingleApproval,       // exactly one approved facility per agent
  kNonemptyUniform,      // uniform over the 2^k - 1 nonempty subsets
  kUnrestrictedUniform,  // uniform over all 2^k subsets, empty included
};

std::string_view ApprovalModelName(ApprovalModel model);
// "single", "nonempty" or "unrestricted"; throws Error(kSyntax).
ApprovalModel ParseApprovalModel(std::string_view name);

struct IntRange {
  int lo = 0;
  int hi = 0;

  friend bool operator==(const IntRange&, const IntRange&) = default;
};

// Positions and candidates are drawn from {t / denominator : 0 <= t <= d}.
struct RandomSpec {
  std::uint64_t seed = 0;
  IntRange agents{1, 6};
  IntRange k{2, 3};
  int denominator = 12;
  IntRange candidates{1, 3};
  ApprovalModel approvals = ApprovalModel::kNonemptyUniform;

  friend bool operator==(const RandomSpec&, const RandomSpec&) = default;
};

// k in {2,3}, n in 1..6, |C| in 1..3, grid 1/12, nonempty approvals.
RandomSpec DefaultSweepSpec(std::uint64_t seed = 0);

// Throws Error(kEmptyRange) for empty or unusable ranges.
void CheckRandomSpec(const RandomSpec& spec);

// The index-th instance of the stream; a pure function of (spec, index).
Instance GenRandomAt(const RandomSpec& spec, std::uint64_t index);
std::vector<Instance> GenRandom(const RandomSpec& spec, std::size_t count);

// Two agents at eps approving only F1 and only F2, one candidate at 1.
// step = 1 moves the F2 agent to 1. Requires 0 < eps < 1, step in {0, 1}.
Instance GenThm1(int k, const Rational& eps, int step = 0);

enum class Thm2Variant { kI, kJ };

// k agents at eps, agent i approving only F_i, candidates {1}. Variant J
// moves the F1 agent to 1. Requires 0 < eps < 1.
Instance GenThm2(int k, const Rational& eps, Thm2Variant variant);

// Candidates {0, 1}; agent at 0 approving F1, two agents at 1/2 - eps and two
// at 1/2 + eps approving everything, agent at 1 approving F2. At step s the
// first s agents at 1/2 - eps approve everything except F2.
// Requires 0 < eps < 1/2 and step in {0, 1, 2}.
Instance GenThm6Sequence(int k, const Rational& eps, int step);

}  // namespace facloc

#endif  // FACLOC_GENERATORS_H_
