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

#include "test_util.h"

#include <utility>

namespace facloc::testing {

Agent MakeAgent(std::string_view x, std::vector<int> approvals) {
  Agent a;
  a.position = Q(x);
  for (int v : approvals) a.approvals.push_back(v != 0);
  return a;
}

std::vector<Instance> ExhaustiveSmallGrid() {
  constexpr int kDen = 4;
  std::vector<Rational> grid;
  for (int t = 0; t <= kDen; ++t) grid.emplace_back(t, kDen);

  std::vector<std::vector<Rational>> candidate_sets;
  for (int a = 0; a <= kDen; ++a) {
    candidate_sets.push_back({grid[a]});
    for (int b = a + 1; b <= kDen; ++b) candidate_sets.push_back({grid[a], grid[b]});
  }
  // Agent types: 5 positions x 3 nonempty approval sets.
  std::vector<Agent> types;
  for (const Rational& x : grid) {
    for (int mask = 1; mask <= 3; ++mask) {
      types.push_back(Agent{x, {(mask & 1) != 0, (mask & 2) != 0}});
    }
  }
  std::vector<Instance> out;
  const std::size_t t = types.size();
  for (const auto& cands : candidate_sets) {
    for (std::size_t a = 0; a < t; ++a) {
      out.push_back(Instance::Create(2, {types[a]}, cands));
    }
    for (std::size_t a = 0; a < t; ++a) {
      for (std::size_t b = 0; b < t; ++b) {
        out.push_back(Instance::Create(2, {types[a], types[b]}, cands));
      }
    }
    for (std::size_t a = 0; a < t; ++a) {
      for (std::size_t b = 0; b < t; ++b) {
        for (std::size_t c = 0; c < t; ++c) {
          out.push_back(
              Instance::Create(2, {types[a], types[b], types[c]}, cands));
        }
      }
    }
  }
  return out;
}

Rational OracleWelfare(const Instance& inst, int facility, const Rational& x) {
  Rational total;
  for (const Agent& a : inst.agents()) {
    if (!a.approvals[static_cast<std::size_t>(facility - 1)]) continue;
    Rational d = a.position - x;
    if (d.Sign() < 0) d = -d;
    total += Rational(1) - d;
  }
  return total;
}

Rational OracleOpt(const Instance& inst) {
  Rational best(-1);
  for (int j = 1; j <= inst.k(); ++j) {
    for (const Rational& x : inst.candidates()) {
      Rational sw = OracleWelfare(inst, j, x);
      if (sw > best) best = std::move(sw);
    }
  }
  return best;
}

Rational OracleExpectedWelfarePerAgent(const Instance& inst,
                                       const Lottery& lottery) {
  Rational total;
  for (std::size_t i = 0; i < inst.n(); ++i) {
    total += ExpectedUtility(inst, i, lottery);
  }
  return total;
}

Lottery RandomLottery(const Instance& inst, std::mt19937_64& rng) {
  std::vector<Lottery::Atom> atoms;
  std::int64_t total = 0;
  for (int j = 1; j <= inst.k(); ++j) {
    for (const Rational& x : inst.candidates()) {
      const std::int64_t w = static_cast<std::int64_t>(rng() % 5);
      if (w == 0) continue;
      atoms.emplace_back(Solution{j, x}, Rational(w));
      total += w;
    }
  }
  if (atoms.empty()) return Lottery::PointMass({1, inst.leftmost()});
  for (auto& [sol, p] : atoms) p /= Rational(total);
  return Lottery::Create(std::move(atoms));
}

}  // namespace facloc::testing
