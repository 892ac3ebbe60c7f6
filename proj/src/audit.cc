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

#include "facloc/audit.h"

#include <algorithm>
#include <string>
#include <utility>

#include "facloc/error.h"
#include "facloc/solver.h"

namespace facloc {
namespace {

Rational TrueUtility(const Agent& truth, const Lottery& lottery) {
  Rational total;
  for (const auto& [sol, p] : lottery.atoms()) {
    total += p * AgentUtility(truth, sol.facility, sol.location);
  }
  return total;
}

std::vector<bool> MaskToApprovals(std::uint32_t mask, int k) {
  std::vector<bool> out(static_cast<std::size_t>(k));
  for (int j = 0; j < k; ++j) out[static_cast<std::size_t>(j)] = (mask >> j) & 1U;
  return out;
}

std::uint32_t ApprovalsToMask(const std::vector<bool>& approvals) {
  std::uint32_t mask = 0;
  for (std::size_t j = 0; j < approvals.size(); ++j) {
    if (approvals[j]) mask |= 1U << j;
  }
  return mask;
}

// Orders preference misreports before position misreports before joint ones.
int KindRank(const Deviation& d) {
  if (d.reported_approvals && d.reported_position) return 2;
  return d.reported_position ? 1 : 0;
}

void SortDeviations(std::vector<Deviation>& deviations) {
  std::sort(deviations.begin(), deviations.end(),
            [](const Deviation& a, const Deviation& b) {
              if (a.agent != b.agent) return a.agent < b.agent;
              if (KindRank(a) != KindRank(b)) return KindRank(a) < KindRank(b);
              if (a.reported_approvals != b.reported_approvals) {
                return a.reported_approvals < b.reported_approvals;
              }
              return a.reported_position < b.reported_position;
            });
}

// Runs one misreport and records it if profitable. Returns the lottery.
Lottery TryMisreport(const Mechanism& mechanism, const Instance& inst,
                     std::size_t agent, Agent reported,
                     const Rational& truthful_utility, bool record_approvals,
                     bool record_position, AuditReport& report) {
  Agent copy = reported;
  Lottery lot = mechanism.run(inst.WithAgent(agent, std::move(reported)));
  ++report.deviations_checked;
  Rational u = TrueUtility(inst.agent(agent), lot);
  if (u > truthful_utility) {
    Deviation d;
    d.agent = agent;
    if (record_approvals) d.reported_approvals = std::move(copy.approvals);
    if (record_position) d.reported_position = std::move(copy.position);
    d.truthful_utility = truthful_utility;
    d.deviant_utility = std::move(u);
    report.deviations.push_back(std::move(d));
  }
  return lot;
}

}  // namespace

AuditReport AuditPreferences(const Mechanism& mechanism, const Instance& inst,
                             std::string instance_id) {
  if (inst.k() > kMaxExhaustiveK) {
    throw Error(ErrorCode::kKTooLargeForExhaustive,
                "k = " + std::to_string(inst.k()) + " exceeds " +
                    std::to_string(kMaxExhaustiveK));
  }
  AuditReport report;
  report.instance_id = std::move(instance_id);
  report.mechanism = mechanism.name;
  const Lottery truthful = mechanism.run(inst);
  const std::uint32_t masks = 1U << inst.k();
  for (std::size_t i = 0; i < inst.n(); ++i) {
    const Agent& truth = inst.agent(i);
    const Rational truthful_utility = TrueUtility(truth, truthful);
    const std::uint32_t own = ApprovalsToMask(truth.approvals);
    for (std::uint32_t mask = 0; mask < masks; ++mask) {
      if (mask == own) continue;
      TryMisreport(mechanism, inst, i,
                   Agent{truth.position, MaskToApprovals(mask, inst.k())},
                   truthful_utility, true, false, report);
    }
  }
  report.exhaustive_preferences = true;
  SortDeviations(report.deviations);
  return report;
}

std::vector<Rational> PositionDeviationSet(const Instance& inst,
                                           std::size_t agent,
                                           int grid_denominator) {
  if (grid_denominator < 1) {
    throw Error(ErrorCode::kEmptyRange, "grid denominator must be >= 1");
  }
  if (agent >= inst.n()) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "agent " + std::to_string(agent) + " out of range");
  }
  std::vector<Rational> out = inst.candidates();
  for (std::size_t i = 0; i < inst.n(); ++i) {
    if (i != agent) out.push_back(inst.agent(i).position);
  }
  for (int t = 0; t <= grid_denominator; ++t) {
    out.emplace_back(t, grid_denominator);
  }
  const auto& c = inst.candidates();
  for (std::size_t m = 1; m < c.size(); ++m) {
    out.push_back((c[m - 1] + c[m]) / Rational(2));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  std::erase(out, inst.agent(agent).position);
  return out;
}

AuditReport AuditPositions(const Mechanism& mechanism, const Instance& inst,
                           int grid_denominator, std::string instance_id) {
  std::vector<std::vector<Rational>> sets;
  sets.reserve(inst.n());
  for (std::size_t i = 0; i < inst.n(); ++i) {
    sets.push_back(PositionDeviationSet(inst, i, grid_denominator));
  }
  return AuditPositions(mechanism, inst, sets, std::move(instance_id));
}

AuditReport AuditPositions(const Mechanism& mechanism, const Instance& inst,
                           std::span<const std::vector<Rational>> per_agent,
                           std::string instance_id) {
  if (per_agent.size() != inst.n()) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "need one deviation set per agent");
  }
  AuditReport report;
  report.instance_id = std::move(instance_id);
  report.mechanism = mechanism.name;
  const Lottery truthful = mechanism.run(inst);
  for (std::size_t i = 0; i < inst.n(); ++i) {
    const Agent& truth = inst.agent(i);
    const Rational truthful_utility = TrueUtility(truth, truthful);
    for (const Rational& x : per_agent[i]) {
      if (x == truth.position) continue;
      const Lottery lot =
          TryMisreport(mechanism, inst, i, Agent{x, truth.approvals},
                       truthful_utility, false, true, report);
      if (!(lot == truthful)) ++report.outcome_changes;
    }
  }
  report.outcome_invariant = report.outcome_changes == 0;
  SortDeviations(report.deviations);
  return report;
}

AuditReport AuditJoint(const Mechanism& mechanism, const Instance& inst,
                       int grid_denominator, std::int64_t budget,
                       std::string instance_id) {
  if (inst.k() > kMaxExhaustiveK) {
    throw Error(ErrorCode::kKTooLargeForExhaustive,
                "k = " + std::to_string(inst.k()));
  }
  AuditReport report;
  report.instance_id = std::move(instance_id);
  report.mechanism = mechanism.name;
  report.budget = budget;
  const Lottery truthful = mechanism.run(inst);
  const std::uint32_t masks = 1U << inst.k();
  for (std::size_t i = 0; i < inst.n(); ++i) {
    const Agent& truth = inst.agent(i);
    const Rational truthful_utility = TrueUtility(truth, truthful);
    const std::uint32_t own = ApprovalsToMask(truth.approvals);
    std::int64_t used = 0;
    bool capped = false;
    for (const Rational& x : PositionDeviationSet(inst, i, grid_denominator)) {
      for (std::uint32_t mask = 0; mask < masks && !capped; ++mask) {
        if (mask == own) continue;
        if (used == budget) {
          capped = true;
          break;
        }
        ++used;
        const Lottery lot = TryMisreport(
            mechanism, inst, i, Agent{x, MaskToApprovals(mask, inst.k())},
            truthful_utility, true, true, report);
        if (!(lot == truthful)) ++report.outcome_changes;
      }
      if (capped) break;
    }
    report.truncated = report.truncated || capped;
  }
  report.outcome_invariant = report.outcome_changes == 0;
  SortDeviations(report.deviations);
  return report;
}

RatioReport EmpiricalRatio(const Mechanism& mechanism, const Instance& inst,
                           std::string instance_id) {
  RatioReport r;
  r.instance_id = std::move(instance_id);
  r.mechanism = mechanism.name;
  r.opt = OptimalSolution(inst).opt_welfare;
  r.mech = ExpectedSocialWelfare(inst, mechanism.run(inst));
  if (r.mech.IsZero()) {
    r.kind = r.opt.IsZero() ? RatioKind::kOne : RatioKind::kInfinite;
    r.ratio = Rational(1);
  } else {
    r.kind = RatioKind::kFinite;
    r.ratio = r.opt / r.mech;
  }
  return r;
}

bool RatioLess(const RatioReport& a, const RatioReport& b) {
  const bool a_inf = a.kind == RatioKind::kInfinite;
  const bool b_inf = b.kind == RatioKind::kInfinite;
  if (a_inf || b_inf) return !a_inf && b_inf;
  return a.ratio < b.ratio;
}

}  // namespace facloc
