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

#ifndef FACLOC_AUDIT_H_
#define FACLOC_AUDIT_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "facloc/mechanisms.h"
#include "facloc/model.h"
#include "facloc/rational.h"

namespace facloc {

// A profitable unilateral misreport. Utilities are always evaluated with the
// agent's true position and approvals. A joint deviation sets both fields.
struct Deviation {
  std::size_t agent = 0;
  std::optional<std::vector<bool>> reported_approvals;
  std::optional<Rational> reported_position;
  Rational truthful_utility;
  Rational deviant_utility;

  Rational Gain() const { return deviant_utility - truthful_utility; }

  friend bool operator==(const Deviation&, const Deviation&) = default;
};

struct AuditReport {
  std::string instance_id;
  std::string mechanism;
  // Sorted by agent, then misreport.
  std::vector<Deviation> deviations;
  std::int64_t deviations_checked = 0;
  // True iff all (2^k - 1) * n approval misreports were tried.
  bool exhaustive_preferences = false;
  // Position audits sample a continuum and are never exhaustive.
  bool exhaustive_positions = false;
  // Position and joint audits: number of misreports whose lottery differed
  // from the truthful one, and whether there were none.
  std::optional<bool> outcome_invariant;
  std::int64_t outcome_changes = 0;
  // Joint audits: cap on misreports per agent, and whether it was hit.
  std::optional<std::int64_t> budget;
  bool truncated = false;

  bool Clean() const { return deviations.empty(); }
};

inline constexpr int kMaxExhaustiveK = 16;

// Every alternative approval vector for every agent. Throws
// Error(kKTooLargeForExhaustive) when k > kMaxExhaustiveK.
AuditReport AuditPreferences(const Mechanism& mechanism, const Instance& inst,
                             std::string instance_id = "");

// Misreported positions tried for `agent`: all candidates, the other agents'
// positions, the grid {t / grid_denominator}, and midpoints of consecutive
// candidates; sorted, deduplicated, true position removed.
std::vector<Rational> PositionDeviationSet(const Instance& inst,
                                           std::size_t agent,
                                           int grid_denominator);

AuditReport AuditPositions(const Mechanism& mechanism, const Instance& inst,
                           int grid_denominator, std::string instance_id = "");
// Explicit deviation sets, one per agent (misreports equal to the true
// position are evaluated but can never be profitable).
AuditReport AuditPositions(const Mechanism& mechanism, const Instance& inst,
                           std::span<const std::vector<Rational>> per_agent,
                           std::string instance_id = "");

// Cross product of position and approval misreports, at most `budget` per
// agent (misreports that change neither coordinate are skipped).
AuditReport AuditJoint(const Mechanism& mechanism, const Instance& inst,
                       int grid_denominator, std::int64_t budget,
                       std::string instance_id = "");

enum class RatioKind {
  kFinite,    // opt / mech with mech > 0
  kOne,       // opt == mech == 0
  kInfinite,  // opt > 0, mech == 0
};

struct RatioReport {
  std::string instance_id;
  std::string mechanism;
  Rational opt;
  Rational mech;
  RatioKind kind = RatioKind::kFinite;
  Rational ratio;  // meaningful for kFinite; 1 for kOne

  bool WithinBound(const Rational& bound) const {
    return kind != RatioKind::kInfinite && ratio <= bound;
  }
};

RatioReport EmpiricalRatio(const Mechanism& mechanism, const Instance& inst,
                           std::string instance_id = "");

// Total order used to track worst cases: Infinite above every finite ratio.
bool RatioLess(const RatioReport& a, const RatioReport& b);

}  // namespace facloc

#endif  // FACLOC_AUDIT_H_
