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

#include "facloc/generators.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <utility>

#include "facloc/error.h"

namespace facloc {
namespace {

std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Uniform integer in [lo, hi] by rejection on the raw engine output, so the
// stream does not depend on the standard library's distributions.
class Draw {
 public:
  Draw(std::uint64_t seed, std::uint64_t index)
      : engine_(SplitMix64(seed ^ SplitMix64(index))) {}

  int Int(int lo, int hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t v;
    do {
      v = engine_();
    } while (v >= limit);
    return lo + static_cast<int>(v % span);
  }

 private:
  std::mt19937_64 engine_;
};

void CheckEps(const Rational& eps, const Rational& upper) {
  if (eps.Sign() <= 0 || eps >= upper) {
    throw Error(ErrorCode::kEpsOutOfRange,
                "eps = " + eps.ToString() + " not in (0," + upper.ToString() +
                    ")");
  }
}

std::vector<bool> Only(int k, int facility) {
  std::vector<bool> a(static_cast<std::size_t>(k), false);
  a[static_cast<std::size_t>(facility - 1)] = true;
  return a;
}

std::vector<bool> AllBut(int k, int facility) {
  std::vector<bool> a(static_cast<std::size_t>(k), true);
  a[static_cast<std::size_t>(facility - 1)] = false;
  return a;
}

}  // namespace

std::string_view ApprovalModelName(ApprovalModel model) {
  switch (model) {
    case ApprovalModel::kSingleApproval: return "single";
    case ApprovalModel::kNonemptyUniform: return "nonempty";
    case ApprovalModel::kUnrestrictedUniform: return "unrestricted";
  }
  return "unknown";
}

ApprovalModel ParseApprovalModel(std::string_view name) {
  if (name == "single") return ApprovalModel::kSingleApproval;
  if (name == "nonempty") return ApprovalModel::kNonemptyUniform;
  if (name == "unrestricted") return ApprovalModel::kUnrestrictedUniform;
  throw Error(ErrorCode::kSyntax,
              "unknown approval model \"" + std::string(name) + "\"");
}

RandomSpec DefaultSweepSpec(std::uint64_t seed) {
  RandomSpec spec;
  spec.seed = seed;
  return spec;
}

void CheckRandomSpec(const RandomSpec& spec) {
  auto check = [](const IntRange& r, int min_lo, const char* what) {
    if (r.lo > r.hi || r.lo < min_lo) {
      throw Error(ErrorCode::kEmptyRange,
                  std::string(what) + " range [" + std::to_string(r.lo) + "," +
                      std::to_string(r.hi) + "] is empty or below " +
                      std::to_string(min_lo));
    }
  };
  check(spec.agents, 1, "agent");
  check(spec.k, 2, "k");
  check(spec.candidates, 1, "candidate");
  if (spec.k.hi > 16) {
    throw Error(ErrorCode::kEmptyRange, "k above 16 is not supported");
  }
  if (spec.denominator < 1) {
    throw Error(ErrorCode::kEmptyRange, "grid denominator must be >= 1");
  }
  if (spec.candidates.lo > spec.denominator + 1) {
    throw Error(ErrorCode::kEmptyRange,
                "grid has only " + std::to_string(spec.denominator + 1) +
                    " points");
  }
}

Instance GenRandomAt(const RandomSpec& spec, std::uint64_t index) {
  CheckRandomSpec(spec);
  Draw draw(spec.seed, index);
  const int d = spec.denominator;
  const int k = draw.Int(spec.k.lo, spec.k.hi);
  const int n = draw.Int(spec.agents.lo, spec.agents.hi);
  const int m = draw.Int(spec.candidates.lo, std::min(spec.candidates.hi, d + 1));

  // Partial Fisher-Yates over the grid points.
  std::vector<int> grid(static_cast<std::size_t>(d + 1));
  std::iota(grid.begin(), grid.end(), 0);
  std::vector<Rational> candidates;
  for (int c = 0; c < m; ++c) {
    const int pick = draw.Int(c, d);
    std::swap(grid[static_cast<std::size_t>(c)],
              grid[static_cast<std::size_t>(pick)]);
    candidates.emplace_back(grid[static_cast<std::size_t>(c)], d);
  }

  std::vector<Agent> agents;
  agents.reserve(static_cast<std::size_t>(n));
  const int full = (1 << k) - 1;
  for (int i = 0; i < n; ++i) {
    Agent a;
    a.position = Rational(draw.Int(0, d), d);
    switch (spec.approvals) {
      case ApprovalModel::kSingleApproval:
        a.approvals = Only(k, draw.Int(1, k));
        break;
      case ApprovalModel::kNonemptyUniform:
      case ApprovalModel::kUnrestrictedUniform: {
        const int lo = spec.approvals == ApprovalModel::kNonemptyUniform ? 1 : 0;
        const int mask = draw.Int(lo, full);
        a.approvals.resize(static_cast<std::size_t>(k));
        for (int j = 0; j < k; ++j) {
          a.approvals[static_cast<std::size_t>(j)] = (mask >> j) & 1;
        }
        break;
      }
    }
    agents.push_back(std::move(a));
  }
  return Instance::Create(k, std::move(agents), std::move(candidates));
}

std::vector<Instance> GenRandom(const RandomSpec& spec, std::size_t count) {
  std::vector<Instance> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(GenRandomAt(spec, i));
  return out;
}

Instance GenThm1(int k, const Rational& eps, int step) {
  CheckEps(eps, Rational(1));
  if (step != 0 && step != 1) {
    throw Error(ErrorCode::kStepOutOfRange,
                "step " + std::to_string(step) + " not in {0,1}");
  }
  if (k < 2) throw Error(ErrorCode::kKTooSmall, "k = " + std::to_string(k));
  std::vector<Agent> agents{{eps, Only(k, 1)},
                            {step == 1 ? Rational(1) : eps, Only(k, 2)}};
  return Instance::Create(k, std::move(agents), {Rational(1)});
}

Instance GenThm2(int k, const Rational& eps, Thm2Variant variant) {
  CheckEps(eps, Rational(1));
  if (k < 2) throw Error(ErrorCode::kKTooSmall, "k = " + std::to_string(k));
  std::vector<Agent> agents;
  for (int j = 1; j <= k; ++j) agents.push_back({eps, Only(k, j)});
  if (variant == Thm2Variant::kJ) agents[0].position = Rational(1);
  return Instance::Create(k, std::move(agents), {Rational(1)});
}

Instance GenThm6Sequence(int k, const Rational& eps, int step) {
  CheckEps(eps, Rational(1, 2));
  if (step < 0 || step > 2) {
    throw Error(ErrorCode::kStepOutOfRange,
                "step " + std::to_string(step) + " not in {0,1,2}");
  }
  if (k < 2) throw Error(ErrorCode::kKTooSmall, "k = " + std::to_string(k));
  const std::vector<bool> all(static_cast<std::size_t>(k), true);
  const Rational half(1, 2);
  std::vector<Agent> agents;
  agents.push_back({Rational(0), Only(k, 1)});
  for (int i = 0; i < 2; ++i) {
    agents.push_back({half - eps, i < step ? AllBut(k, 2) : all});
  }
  agents.push_back({half + eps, all});
  agents.push_back({half + eps, all});
  agents.push_back({Rational(1), Only(k, 2)});
  return Instance::Create(k, std::move(agents), {Rational(0), Rational(1)});
}

}  // namespace facloc
