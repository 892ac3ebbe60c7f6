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

#include "facloc/mechanisms.h"

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "facloc/error.h"
#include "facloc/solver.h"

namespace facloc {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

const Rational kHalf(1, 2);

// Approval counts over agents with a nonempty approval set, and how many such
// agents there are.
struct CountedApprovals {
  std::vector<int> counts;
  int agents = 0;
};

CountedApprovals CountNonemptyApprovals(const Instance& inst) {
  CountedApprovals out;
  out.counts.assign(static_cast<std::size_t>(inst.k()), 0);
  for (const Agent& a : inst.agents()) {
    if (!a.ApprovesAny()) continue;
    ++out.agents;
    for (std::size_t j = 0; j < out.counts.size(); ++j) {
      if (a.approvals[j]) ++out.counts[j];
    }
  }
  return out;
}

int ArgMaxLowest(const std::vector<int>& counts) {
  std::size_t best = 0;
  for (std::size_t j = 1; j < counts.size(); ++j) {
    if (counts[j] > counts[best]) best = j;
  }
  return static_cast<int>(best) + 1;
}

// Mass p on the top facility at `x`, the rest spread evenly over the others.
Lottery TopVersusRest(const Instance& inst, int top, const Rational& x,
                      const Rational& p_top) {
  const Rational rest = (Rational(1) - p_top) / Rational(inst.k() - 1);
  std::vector<Lottery::Atom> atoms;
  atoms.reserve(static_cast<std::size_t>(inst.k()));
  for (int j = 1; j <= inst.k(); ++j) {
    atoms.emplace_back(Solution{j, x}, j == top ? p_top : rest);
  }
  return Lottery::Create(std::move(atoms));
}

void CheckTheta(const Rational& theta) {
  if (theta.Sign() < 0 || theta > kHalf) {
    throw Error(ErrorCode::kThetaOutOfRange,
                "theta = " + theta.ToString() + " not in [0,1/2]");
  }
}

}  // namespace

std::string_view CaseName(const GeneralCase& c) {
  return std::visit(
      Overloaded{
          [](const general_case::SingleLocation&) { return "SingleLocation"; },
          [](const general_case::MiddleLocation&) { return "MiddleLocation"; },
          [](const general_case::Straddle&) { return "Straddle"; },
          [](const general_case::AllRight&) { return "AllRight"; },
          [](const general_case::AllLeft&) { return "AllLeft"; },
      },
      c);
}

std::string_view CaseName(const ThetaCase& c) {
  return std::visit(
      Overloaded{
          [](const theta_case::HasMiddle&) { return "HasMiddle"; },
          [](const theta_case::OneSide&) { return "OneSide"; },
          [](const theta_case::TwoSides&) { return "TwoSides"; },
      },
      c);
}

const Rational& CandidateClosestToHalf(const Instance& inst) {
  const Rational* best = &inst.candidates().front();
  Rational best_dist = Abs(*best - kHalf);
  for (const Rational& c : inst.candidates()) {
    Rational d = Abs(c - kHalf);
    if (d < best_dist) {
      best = &c;
      best_dist = std::move(d);
    }
  }
  return *best;
}

int MostApprovedFacility(const Instance& inst) {
  return ArgMaxLowest(CountNonemptyApprovals(inst).counts);
}

GeneralCase ClassifyGeneral(const Instance& inst) {
  const auto& cands = inst.candidates();
  if (cands.size() == 1) return general_case::SingleLocation{};

  const Rational lo(1, inst.k());
  const Rational hi(inst.k() - 1, inst.k());
  const Rational* middle = nullptr;
  Rational middle_dist;
  for (const Rational& c : cands) {
    if (c < lo || c > hi) continue;
    Rational d = Abs(c - kHalf);
    if (middle == nullptr || d < middle_dist) {
      middle = &c;
      middle_dist = std::move(d);
    }
  }
  if (middle != nullptr) return general_case::MiddleLocation{*middle};

  const Rational& left = inst.leftmost();
  const Rational& right = inst.rightmost();
  if (left < lo && right > hi) return general_case::Straddle{left, right};
  if (left > hi) return general_case::AllRight{left};
  if (right < lo) return general_case::AllLeft{right};
  // With no candidate in [lo, hi] every candidate is below lo or above hi,
  // so one of the branches above always fires.
  throw std::logic_error("ClassifyGeneral: cases not exhaustive");
}

Lottery MechGeneral(const Instance& inst) {
  const int k = inst.k();
  const CountedApprovals counted = CountNonemptyApprovals(inst);
  const int top = ArgMaxLowest(counted.counts);
  const Rational n1(counted.counts[static_cast<std::size_t>(top - 1)]);
  const Rational n(counted.agents);
  const Rational kk(k);
  const Rational k_over_k1(k, k - 1);

  return std::visit(
      Overloaded{
          [&](const general_case::SingleLocation&) {
            std::vector<Lottery::Atom> atoms;
            for (int j = 1; j <= k; ++j) {
              atoms.emplace_back(Solution{j, inst.leftmost()}, Rational(1, k));
            }
            return Lottery::Create(std::move(atoms));
          },
          [&](const general_case::MiddleLocation& c) {
            return Lottery::PointMass(Solution{top, c.x});
          },
          [&](const general_case::Straddle& c) {
            const Rational p_left = (Rational(1 - k) + kk * c.right) /
                                    (kk * (c.right - c.left));
            return Lottery::Create(
                {{Solution{top, c.left}, p_left},
                 {Solution{top, c.right}, Rational(1) - p_left}});
          },
          [&](const general_case::AllRight& c) {
            if (n1.IsZero()) {
              return Lottery::PointMass(
                  Solution{1, CandidateClosestToHalf(inst)});
            }
            const Rational others =
                k_over_k1 * (Rational(1) - c.left) * (n - n1);
            const Rational p_top =
                (n1 - others) / (kk * c.left * n1 - others);
            return TopVersusRest(inst, top, c.left, p_top);
          },
          [&](const general_case::AllLeft& c) {
            if (n1.IsZero()) {
              return Lottery::PointMass(
                  Solution{1, CandidateClosestToHalf(inst)});
            }
            const Rational others = k_over_k1 * c.right * (n - n1);
            const Rational p_top =
                (n1 - others) / (kk * (Rational(1) - c.right) * n1 - others);
            return TopVersusRest(inst, top, c.right, p_top);
          },
      },
      ClassifyGeneral(inst));
}

ThetaCase ClassifyTheta(const Instance& inst, const Rational& theta) {
  CheckTheta(theta);
  const Rational upper = Rational(1) - theta;
  const Rational* below = nullptr;  // rightmost candidate < theta
  const Rational* above = nullptr;  // leftmost candidate > 1 - theta
  bool has_middle = false;
  for (const Rational& c : inst.candidates()) {
    if (c < theta) {
      below = &c;
    } else if (c > upper) {
      if (above == nullptr) above = &c;
    } else {
      has_middle = true;
    }
  }
  if (has_middle) return theta_case::HasMiddle{CandidateClosestToHalf(inst)};
  if (below == nullptr || above == nullptr) {
    return theta_case::OneSide{CandidateClosestToHalf(inst)};
  }
  return theta_case::TwoSides{*below, *above};
}

Solution MechTheta(const Instance& inst, const Rational& theta) {
  return std::visit(
      Overloaded{
          [&](const theta_case::HasMiddle& c) {
            return Solution{BestFacilityAt(inst, c.c).facility, c.c};
          },
          [&](const theta_case::OneSide& c) {
            return Solution{BestFacilityAt(inst, c.c).facility, c.c};
          },
          [&](const theta_case::TwoSides& c) {
            const Rational split = (c.c1 + c.c2) / Rational(2);
            std::vector<std::size_t> left_side;
            std::vector<std::size_t> right_side;
            for (std::size_t i = 0; i < inst.n(); ++i) {
              (inst.agents()[i].position <= split ? left_side : right_side)
                  .push_back(i);
            }
            const FacilityChoice f1 = BestFacilityAt(inst, c.c1, left_side);
            const FacilityChoice f2 = BestFacilityAt(inst, c.c2, right_side);
            if (f1.welfare >= f2.welfare) return Solution{f1.facility, c.c1};
            return Solution{f2.facility, c.c2};
          },
      },
      ClassifyTheta(inst, theta));
}

Rational ThetaDefault() { return Rational(43, 100); }

std::optional<Rational> ThetaRatioBound(const Rational& theta) {
  CheckTheta(theta);
  if (theta.IsZero()) return std::nullopt;
  const Rational one_minus = Rational(1) - theta;
  return Max(Rational(1) / theta, one_minus + Rational(1) / one_minus);
}

Solution MechMinisum(const Instance& inst) {
  const Rational* best = nullptr;
  Rational best_total;
  for (const Rational& c : inst.candidates()) {
    Rational total;
    for (const Agent& a : inst.agents()) total += Abs(a.position - c);
    if (best == nullptr || total < best_total) {
      best = &c;
      best_total = std::move(total);
    }
  }
  return Solution{BestFacilityAt(inst, *best).facility, *best};
}

Mechanism GeneralMechanism() {
  return Mechanism{
      "general", Setting::kGeneral,
      [](const Instance& inst) { return MechGeneral(inst); },
      [](const Instance& inst) -> std::optional<Rational> {
        return Rational(inst.k());
      }};
}

Mechanism ThetaMechanism(const Rational& theta) {
  CheckTheta(theta);
  return Mechanism{"theta", Setting::kKnownPositions,
                   [theta](const Instance& inst) {
                     return Lottery::PointMass(MechTheta(inst, theta));
                   },
                   [theta](const Instance&) { return ThetaRatioBound(theta); }};
}

Mechanism MinisumMechanism() {
  return Mechanism{
      "minisum", Setting::kKnownPositions,
      [](const Instance& inst) {
        return Lottery::PointMass(MechMinisum(inst));
      },
      [](const Instance& inst) -> std::optional<Rational> {
        return Rational(inst.k());
      }};
}

Mechanism OptimalAsMechanism() {
  return Mechanism{
      "opt", Setting::kGeneral,
      [](const Instance& inst) {
        return Lottery::PointMass(OptimalSolution(inst).best);
      },
      [](const Instance&) -> std::optional<Rational> { return Rational(1); }};
}

Mechanism MechanismByName(std::string_view name, const Rational& theta) {
  if (name == "general") return GeneralMechanism();
  if (name == "theta") return ThetaMechanism(theta);
  if (name == "minisum") return MinisumMechanism();
  if (name == "opt") return OptimalAsMechanism();
  throw Error(ErrorCode::kUnknownMechanism, std::string(name));
}

}  // namespace facloc
