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

#ifndef FACLOC_MODEL_H_
#define FACLOC_MODEL_H_

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "facloc/error.h"
#include "facloc/rational.h"

namespace facloc {

// Facilities are numbered 1..k everywhere in the public API; approval
// vectors are stored 0-based, so facility j lives at approvals[j - 1].
struct Agent {
  Rational position;
  std::vector<bool> approvals;

  bool Approves(int facility) const {
    return approvals[static_cast<std::size_t>(facility - 1)];
  }
  bool ApprovesAny() const;

  friend bool operator==(const Agent&, const Agent&) = default;
};

// Unvalidated instance description, as read from a file or built by hand.
struct InstanceData {
  int k = 0;
  std::vector<Agent> agents;
  std::vector<Rational> candidates;
};

struct Diagnostic {
  ErrorCode code;
  std::string message;
};

// Returns the first violated invariant, or nullopt when `data` describes a
// valid instance. Candidates need not be sorted; duplicates are rejected.
std::optional<Diagnostic> ValidateInstance(const InstanceData& data);

// Immutable, validated instance: k >= 2, n >= 1, candidates strictly
// increasing in [0,1], positions in [0,1], every approval vector of length k.
class Instance {
 public:
  // Sorts the candidates and validates; throws Error on the first violation.
  static Instance Create(InstanceData data);
  static Instance Create(int k, std::vector<Agent> agents,
                         std::vector<Rational> candidates);

  int k() const { return k_; }
  std::size_t n() const { return agents_.size(); }
  const std::vector<Agent>& agents() const { return agents_; }
  const Agent& agent(std::size_t i) const { return agents_.at(i); }
  const std::vector<Rational>& candidates() const { return candidates_; }
  const Rational& leftmost() const { return candidates_.front(); }
  const Rational& rightmost() const { return candidates_.back(); }
  bool IsCandidate(const Rational& x) const;

  // Same candidates and k; agent i replaced by `agent`. Throws on invalid.
  Instance WithAgent(std::size_t i, Agent agent) const;

  InstanceData ToData() const { return {k_, agents_, candidates_}; }

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  Instance() = default;

  int k_ = 0;
  std::vector<Agent> agents_;
  std::vector<Rational> candidates_;
};

struct Solution {
  int facility = 1;  // 1..k
  Rational location;

  friend bool operator==(const Solution&, const Solution&) = default;
  friend auto operator<=>(const Solution& a, const Solution& b) {
    if (auto c = a.facility <=> b.facility; c != 0) return c;
    return a.location <=> b.location;
  }
};

// Throws Error(kInfeasibleSolution) unless 1 <= facility <= k and the
// location is a candidate.
void CheckFeasible(const Instance& inst, const Solution& sol);

// Finite distribution over feasible solutions. Atoms are kept sorted by
// (facility, location), zero-probability atoms are dropped, and the
// probabilities sum to exactly one.
class Lottery {
 public:
  using Atom = std::pair<Solution, Rational>;

  static Lottery PointMass(Solution sol);
  // Throws Error(kInvalidLottery) on a negative probability, a probability
  // above one, a repeated solution, or a total different from one.
  static Lottery Create(std::vector<Atom> atoms);

  const std::vector<Atom>& atoms() const { return atoms_; }
  bool IsPointMass() const { return atoms_.size() == 1; }
  // Probability assigned to `sol` (zero when absent).
  Rational ProbabilityOf(const Solution& sol) const;

  friend bool operator==(const Lottery&, const Lottery&) = default;

 private:
  Lottery() = default;
  std::vector<Atom> atoms_;
};

// alpha_{i,j} * (1 - |x_i - x|) with no feasibility checks.
Rational AgentUtility(const Agent& agent, int facility, const Rational& x);

// As above, after checking the index and feasibility.
Rational Utility(const Instance& inst, std::size_t agent_index,
                 const Solution& sol);
Rational ExpectedUtility(const Instance& inst, std::size_t agent_index,
                         const Lottery& lottery);
Rational SocialWelfare(const Instance& inst, const Solution& sol);
// Atom-wise sum: sum over atoms of p * SW(atom).
Rational ExpectedSocialWelfare(const Instance& inst, const Lottery& lottery);

// n_j for j = 1..k, returned 0-based (counts[j - 1]).
std::vector<int> ApprovalCounts(const Instance& inst);

}  // namespace facloc

#endif  // FACLOC_MODEL_H_
