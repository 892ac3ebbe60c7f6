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

#include "facloc/model.h"

#include <algorithm>

namespace facloc {
namespace {

bool InUnitInterval(const Rational& x) { return x.Sign() >= 0 && x <= 1; }

}  // namespace

bool Agent::ApprovesAny() const {
  return std::find(approvals.begin(), approvals.end(), true) !=
         approvals.end();
}

std::optional<Diagnostic> ValidateInstance(const InstanceData& data) {
  if (data.k < 2) {
    return Diagnostic{ErrorCode::kKTooSmall,
                      "k = " + std::to_string(data.k) + ", need k >= 2"};
  }
  if (data.agents.empty()) {
    return Diagnostic{ErrorCode::kEmptyAgents, "instance has no agents"};
  }
  if (data.candidates.empty()) {
    return Diagnostic{ErrorCode::kEmptyCandidates,
                      "candidate list is empty"};
  }
  for (std::size_t c = 0; c < data.candidates.size(); ++c) {
    if (!InUnitInterval(data.candidates[c])) {
      return Diagnostic{ErrorCode::kCandidateOutOfRange,
                        "candidates[" + std::to_string(c) + "] = " +
                            data.candidates[c].ToString() +
                            " not in [0,1]"};
    }
  }
  std::vector<Rational> sorted = data.candidates;
  std::sort(sorted.begin(), sorted.end());
  if (auto dup = std::adjacent_find(sorted.begin(), sorted.end());
      dup != sorted.end()) {
    return Diagnostic{ErrorCode::kDuplicateCandidate,
                      "candidate " + dup->ToString() + " listed twice"};
  }
  for (std::size_t i = 0; i < data.agents.size(); ++i) {
    const Agent& a = data.agents[i];
    if (a.approvals.size() != static_cast<std::size_t>(data.k)) {
      return Diagnostic{ErrorCode::kApprovalLengthMismatch,
                        "agents[" + std::to_string(i) + "] has " +
                            std::to_string(a.approvals.size()) +
                            " approvals, expected " + std::to_string(data.k)};
    }
    if (!InUnitInterval(a.position)) {
      return Diagnostic{ErrorCode::kPositionOutOfRange,
                        "agents[" + std::to_string(i) + "].x = " +
                            a.position.ToString() + " not in [0,1]"};
    }
  }
  return std::nullopt;
}

Instance Instance::Create(InstanceData data) {
  if (auto diag = ValidateInstance(data)) {
    throw Error(diag->code, diag->message);
  }
  Instance inst;
  inst.k_ = data.k;
  inst.agents_ = std::move(data.agents);
  inst.candidates_ = std::move(data.candidates);
  std::sort(inst.candidates_.begin(), inst.candidates_.end());
  return inst;
}

Instance Instance::Create(int k, std::vector<Agent> agents,
                          std::vector<Rational> candidates) {
  return Create(InstanceData{k, std::move(agents), std::move(candidates)});
}

bool Instance::IsCandidate(const Rational& x) const {
  return std::binary_search(candidates_.begin(), candidates_.end(), x);
}

Instance Instance::WithAgent(std::size_t i, Agent agent) const {
  if (i >= agents_.size()) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "agent index " + std::to_string(i));
  }
  if (agent.approvals.size() != static_cast<std::size_t>(k_)) {
    throw Error(ErrorCode::kApprovalLengthMismatch,
                "replacement agent has wrong approval length");
  }
  if (!InUnitInterval(agent.position)) {
    throw Error(ErrorCode::kPositionOutOfRange,
                "replacement position " + agent.position.ToString());
  }
  Instance copy = *this;
  copy.agents_[i] = std::move(agent);
  return copy;
}

void CheckFeasible(const Instance& inst, const Solution& sol) {
  if (sol.facility < 1 || sol.facility > inst.k()) {
    throw Error(ErrorCode::kInfeasibleSolution,
                "facility " + std::to_string(sol.facility) + " not in [1," +
                    std::to_string(inst.k()) + "]");
  }
  if (!inst.IsCandidate(sol.location)) {
    throw Error(ErrorCode::kInfeasibleSolution,
                "location " + sol.location.ToString() + " is not a candidate");
  }
}

Lottery Lottery::PointMass(Solution sol) {
  Lottery lot;
  lot.atoms_.emplace_back(std::move(sol), Rational(1));
  return lot;
}

Lottery Lottery::Create(std::vector<Atom> atoms) {
  Rational total;
  for (const auto& [sol, p] : atoms) {
    if (p.Sign() < 0 || p > 1) {
      throw Error(ErrorCode::kInvalidLottery,
                  "probability " + p.ToString() + " outside [0,1]");
    }
    total += p;
  }
  if (total != 1) {
    throw Error(ErrorCode::kInvalidLottery,
                "probabilities sum to " + total.ToString());
  }
  std::erase_if(atoms, [](const Atom& a) { return a.second.IsZero(); });
  std::sort(atoms.begin(), atoms.end(),
            [](const Atom& a, const Atom& b) { return a.first < b.first; });
  for (std::size_t i = 1; i < atoms.size(); ++i) {
    if (atoms[i - 1].first == atoms[i].first) {
      throw Error(ErrorCode::kInvalidLottery, "repeated solution in lottery");
    }
  }
  Lottery lot;
  lot.atoms_ = std::move(atoms);
  return lot;
}

Rational Lottery::ProbabilityOf(const Solution& sol) const {
  for (const auto& [s, p] : atoms_) {
    if (s == sol) return p;
  }
  return Rational(0);
}

Rational AgentUtility(const Agent& agent, int facility, const Rational& x) {
  if (!agent.Approves(facility)) return Rational(0);
  return Rational(1) - Abs(agent.position - x);
}

Rational Utility(const Instance& inst, std::size_t agent_index,
                 const Solution& sol) {
  if (agent_index >= inst.n()) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "agent index " + std::to_string(agent_index));
  }
  CheckFeasible(inst, sol);
  return AgentUtility(inst.agents()[agent_index], sol.facility, sol.location);
}

Rational ExpectedUtility(const Instance& inst, std::size_t agent_index,
                         const Lottery& lottery) {
  Rational total;
  for (const auto& [sol, p] : lottery.atoms()) {
    total += p * Utility(inst, agent_index, sol);
  }
  return total;
}

Rational SocialWelfare(const Instance& inst, const Solution& sol) {
  CheckFeasible(inst, sol);
  Rational total;
  for (const Agent& a : inst.agents()) {
    total += AgentUtility(a, sol.facility, sol.location);
  }
  return total;
}

Rational ExpectedSocialWelfare(const Instance& inst, const Lottery& lottery) {
  Rational total;
  for (const auto& [sol, p] : lottery.atoms()) {
    total += p * SocialWelfare(inst, sol);
  }
  return total;
}

std::vector<int> ApprovalCounts(const Instance& inst) {
  std::vector<int> counts(static_cast<std::size_t>(inst.k()), 0);
  for (const Agent& a : inst.agents()) {
    for (std::size_t j = 0; j < counts.size(); ++j) {
      if (a.approvals[j]) ++counts[j];
    }
  }
  return counts;
}

}  // namespace facloc
