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

#ifndef FACLOC_MECHANISMS_H_
#define FACLOC_MECHANISMS_H_

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "facloc/model.h"
#include "facloc/rational.h"

namespace facloc {

// Case split of the randomized general-setting mechanism. Which case applies
// depends only on k and the candidate set.
namespace general_case {
struct SingleLocation {};
// A candidate X in [1/k, (k-1)/k].
struct MiddleLocation {
  Rational x;
};
// L < 1/k and R > (k-1)/k, nothing in between.
struct Straddle {
  Rational left;
  Rational right;
};
// (k-1)/k < L.
struct AllRight {
  Rational left;
};
// R < 1/k.
struct AllLeft {
  Rational right;
};
}  // namespace general_case

using GeneralCase =
    std::variant<general_case::SingleLocation, general_case::MiddleLocation,
                 general_case::Straddle, general_case::AllRight,
                 general_case::AllLeft>;

namespace theta_case {
// Some candidate in [theta, 1 - theta]; c is the candidate closest to 1/2.
struct HasMiddle {
  Rational c;
};
// All candidates in [0, theta) or all in (1 - theta, 1].
struct OneSide {
  Rational c;
};
// c1 = rightmost candidate below theta, c2 = leftmost above 1 - theta.
struct TwoSides {
  Rational c1;
  Rational c2;
};
}  // namespace theta_case

using ThetaCase = std::variant<theta_case::HasMiddle, theta_case::OneSide,
                               theta_case::TwoSides>;

std::string_view CaseName(const GeneralCase& c);
std::string_view CaseName(const ThetaCase& c);

// Candidate nearest to 1/2, leftmost on ties.
const Rational& CandidateClosestToHalf(const Instance& inst);

// Facility with the most approvals among agents that approve at least one
// facility; lowest index on ties.
int MostApprovedFacility(const Instance& inst);

GeneralCase ClassifyGeneral(const Instance& inst);

// Randomized mechanism for the general setting. The output depends on the
// approvals and the candidates only, never on reported positions. In the
// AllRight/AllLeft cases, n and n_j count only agents with a nonempty
// approval set; when that leaves no approvals at all the result is a point
// mass on (1, candidate closest to 1/2).
Lottery MechGeneral(const Instance& inst);

// Throws Error(kThetaOutOfRange) unless 0 <= theta <= 1/2.
ThetaCase ClassifyTheta(const Instance& inst, const Rational& theta);

// Deterministic known-positions mechanism parameterized by theta.
Solution MechTheta(const Instance& inst, const Rational& theta);

Rational ThetaDefault();

// max{1/theta, 1 - theta + 1/(1 - theta)}; nullopt (unbounded) at theta = 0.
std::optional<Rational> ThetaRatioBound(const Rational& theta);

// Known-positions mechanism: the candidate minimizing total distance to all
// agents (leftmost on ties), with the welfare-maximizing facility there.
Solution MechMinisum(const Instance& inst);

// What agents may misreport: everything, or only approvals.
enum class Setting { kGeneral, kKnownPositions };

// A mechanism as seen by the audit and ratio harness.
struct Mechanism {
  std::string name;
  Setting setting = Setting::kGeneral;
  std::function<Lottery(const Instance&)> run;
  // Proven approximation bound for the instance, if any.
  std::function<std::optional<Rational>(const Instance&)> ratio_bound;
};

Mechanism GeneralMechanism();
Mechanism ThetaMechanism(const Rational& theta);
Mechanism MinisumMechanism();
// The welfare-optimal solution used as a mechanism; not strategyproof.
Mechanism OptimalAsMechanism();

// "general", "theta", "minisum" or "opt". Throws Error(kUnknownMechanism).
Mechanism MechanismByName(std::string_view name,
                          const Rational& theta = ThetaDefault());

}  // namespace facloc

#endif  // FACLOC_MECHANISMS_H_
