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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "facloc/audit.h"
#include "facloc/cli.h"
#include "facloc/generators.h"
#include "facloc/mechanisms.h"
#include "facloc/model.h"
#include "facloc/rational.h"
#include "facloc/solver.h"
#include "test_util.h"

namespace facloc {
namespace {

using testing::Q;

constexpr std::uint64_t kRandomSeed = 2026;
constexpr std::size_t kRandomCount = 10000;

struct Family {
  std::string name;
  std::vector<Instance> instances;
};

const std::vector<Family>& Families() {
  static const std::vector<Family>* families = [] {
    auto* f = new std::vector<Family>;
    f->push_back({"grid", testing::ExhaustiveSmallGrid()});
    f->push_back({"random", GenRandom(DefaultSweepSpec(kRandomSeed), kRandomCount)});
    return f;
  }();
  return *families;
}

std::string Sizes() {
  std::string s;
  for (const Family& f : Families()) {
    if (!s.empty()) s += " + ";
    s += std::to_string(f.instances.size()) + " " + f.name;
  }
  return s;
}

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

void Criterion(int id, const std::string& title, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!o.pass) ++failures;
  std::printf("%s  %2d  %s: %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", id, title.c_str(),
              o.detail.c_str(), secs);
  std::fflush(stdout);
}

bool ValidLottery(const Lottery& lot) {
  Rational sum;
  for (const auto& [sol, p] : lot.atoms()) {
    if (p < Rational(0) || p > Rational(1)) return false;
    sum += p;
  }
  return sum == Rational(1);
}

Outcome LotteryValidity() {
  std::int64_t bad = 0;
  std::int64_t total = 0;
  for (const Family& f : Families()) {
    for (const Instance& inst : f.instances) {
      ++total;
      if (!ValidLottery(MechGeneral(inst))) ++bad;
    }
  }
  return {bad == 0, std::to_string(total) + " instances (" + Sizes() + "), " +
                        std::to_string(bad) + " invalid"};
}

Outcome Strategyproofness() {
  const std::vector<Mechanism> mechs{GeneralMechanism(), ThetaMechanism(ThetaDefault()),
                                     MinisumMechanism()};
  std::ostringstream detail;
  bool pass = true;
  for (const Mechanism& m : mechs) {
    detail << m.name << " preferences";
    for (const Family& f : Families()) {
      std::int64_t checked = 0;
      std::int64_t found = 0;
      std::int64_t instances_hit = 0;
      for (const Instance& inst : f.instances) {
        const AuditReport r = AuditPreferences(m, inst);
        checked += r.deviations_checked;
        found += static_cast<std::int64_t>(r.deviations.size());
        instances_hit += r.Clean() ? 0 : 1;
      }
      pass = pass && found == 0;
      detail << " " << f.name << " " << found << "/" << checked << " in "
             << instances_hit << " instances";
    }
    detail << "; ";
  }
  std::int64_t checked = 0;
  std::int64_t found = 0;
  std::int64_t changes = 0;
  for (const Family& f : Families()) {
    for (const Instance& inst : f.instances) {
      const AuditReport r = AuditPositions(mechs[0], inst, 20);
      checked += r.deviations_checked;
      found += static_cast<std::int64_t>(r.deviations.size());
      changes += r.outcome_changes;
    }
  }
  pass = pass && found == 0 && changes == 0;
  detail << "general positions " << found << "/" << checked << ", " << changes
         << " lottery changes (denominator 20)";
  return {pass, detail.str()};
}

Outcome AuditorPower() {
  const AuditReport r =
      AuditPreferences(OptimalAsMechanism(), GenThm6Sequence(2, Q("1/100"), 0));
  bool exact = false;
  for (const Deviation& d : r.deviations) exact = exact || d.Gain() == Q("1/50");
  return {exact, std::to_string(r.deviations.size()) + " deviations, gain 1/50 " +
                     (exact ? "found" : "missing")};
}

Outcome GeneralRatio() {
  Rational worst(0);
  std::int64_t violations = 0;
  std::int64_t middle_bad = 0;
  std::int64_t straddle_bad = 0;
  for (const Family& f : Families()) {
    for (const Instance& inst : f.instances) {
      const RatioReport r = EmpiricalRatio(GeneralMechanism(), inst);
      if (!r.WithinBound(Rational(inst.k()))) ++violations;
      if (r.kind == RatioKind::kFinite) worst = Max(worst, r.ratio / Rational(inst.k()));
      const Rational floor(1, inst.k());
      const GeneralCase c = ClassifyGeneral(inst);
      const Lottery lot = MechGeneral(inst);
      const int facility = lot.atoms().front().first.facility;
      for (std::size_t i = 0; i < inst.n(); ++i) {
        if (!inst.agent(i).Approves(facility)) continue;
        if (std::holds_alternative<general_case::MiddleLocation>(c) &&
            Utility(inst, i, lot.atoms().front().first) < floor) {
          ++middle_bad;
        }
        if (std::holds_alternative<general_case::Straddle>(c) &&
            ExpectedUtility(inst, i, lot) < floor) {
          ++straddle_bad;
        }
      }
    }
  }
  return {violations == 0 && middle_bad == 0 && straddle_bad == 0,
          "max ratio/k " + worst.ToString() + ", " + std::to_string(violations) +
              " bound violations, " + std::to_string(middle_bad) + " middle and " +
              std::to_string(straddle_bad) + " straddle agents below 1/k"};
}

Outcome GeneralTightness() {
  const auto ratio = [](const Rational& eps) {
    return EmpiricalRatio(GeneralMechanism(), GenThm2(3, eps, Thm2Variant::kJ));
  };
  const RatioReport at3 = ratio(Q("1/1000"));
  bool pass = at3.kind == RatioKind::kFinite && at3.ratio == Q("1500/501");
  Rational last(0);
  for (const char* eps : {"1/10", "1/100", "1/1000"}) {
    const RatioReport r = ratio(Q(eps));
    pass = pass && r.ratio > last && r.ratio < Rational(3);
    last = r.ratio;
  }
  const RatioReport tiny = ratio(Q("1/1000000"));
  pass = pass && tiny.ratio > Rational(3) - Q("1/1000");
  return {pass, "ratio " + at3.ratio.ToString() + " at eps=1/1000, " +
                    tiny.ratio.ToDecimal(8) + " at eps=1e-6"};
}

Outcome ThetaBounds() {
  std::ostringstream detail;
  bool pass = true;
  for (const auto& [theta, bound] : std::vector<std::pair<const char*, const char*>>{
           {"43/100", "100/43"}, {"1/2", "5/2"}, {"3/10", "10/3"}}) {
    const Mechanism m = ThetaMechanism(Q(theta));
    pass = pass && ThetaRatioBound(Q(theta)) == Q(bound);
    std::optional<RatioReport> worst;
    for (const Family& f : Families()) {
      for (const Instance& inst : f.instances) {
        const RatioReport r = EmpiricalRatio(m, inst);
        if (!worst || RatioLess(*worst, r)) worst = r;
      }
    }
    const bool ok = worst->WithinBound(Q(bound));
    pass = pass && ok;
    detail << "theta=" << theta << " max " << worst->ratio << " <= " << bound << " "
           << (ok ? "ok" : "VIOLATED") << "; ";
  }
  return {pass, detail.str()};
}

Outcome MinisumBound() {
  Rational worst2(0);
  Rational worst3(0);
  bool pass = true;
  for (const Family& f : Families()) {
    for (const Instance& inst : f.instances) {
      const RatioReport r = EmpiricalRatio(MinisumMechanism(), inst);
      const Rational bound = inst.k() == 2 ? Rational(2) : Rational(inst.k());
      pass = pass && r.WithinBound(bound);
      if (r.kind != RatioKind::kFinite) continue;
      if (inst.k() == 2) worst2 = Max(worst2, r.ratio);
      if (inst.k() == 3) worst3 = Max(worst3, r.ratio);
    }
  }
  return {pass, "max ratio " + worst2.ToString() + " (k=2), " + worst3.ToString() +
                    " (k=3)"};
}

Outcome LowerBoundFamily() {
  bool tables = true;
  bool step2 = true;
  std::ostringstream detail;
  for (const char* e : {"1/10", "1/100"}) {
    const Instance s0 = GenThm6Sequence(2, Q(e), 0);
    tables = tables && testing::OracleWelfare(s0, 1, Rational(0)) == Rational(3) &&
             testing::OracleWelfare(s0, 2, Rational(1)) == Rational(3) &&
             testing::OracleWelfare(s0, 1, Rational(1)) == Rational(2) &&
             testing::OracleWelfare(s0, 2, Rational(0)) == Rational(2);
    const Instance s2 = GenThm6Sequence(2, Q(e), 2);
    const Rational opt = OptimalSolution(s2).opt_welfare;
    const Rational at_one = Max(BestFacilityAt(s2, Rational(1)).welfare,
                                testing::OracleWelfare(s2, 1, Rational(1)));
    step2 = step2 && opt == Rational(3) && at_one == Rational(2);
    detail << "eps=" << e << " step 2 OPT " << opt << ", best at 1 " << at_one << "; ";
  }
  const Rational p(1, 2);
  const bool bound = Rational(3) * (Rational(1) - p) + Rational(2) * p <= Q("5/2");
  detail << "step-0 tables " << (tables ? "ok" : "MISMATCH") << ", 3(1-p)+2p at p=1/2 "
         << (bound ? "<= 5/2" : "> 5/2");
  return {tables && step2 && bound, detail.str()};
}

Outcome OracleEquivalence() {
  std::mt19937_64 rng(kRandomSeed);
  RandomSpec spec = DefaultSweepSpec(kRandomSeed + 1);
  spec.approvals = ApprovalModel::kUnrestrictedUniform;
  std::int64_t mismatches = 0;
  const std::vector<Instance> instances = GenRandom(spec, 1000);
  for (const Instance& inst : instances) {
    const Lottery lot = testing::RandomLottery(inst, rng);
    if (ExpectedSocialWelfare(inst, lot) !=
        testing::OracleExpectedWelfarePerAgent(inst, lot)) {
      ++mismatches;
    }
  }
  return {mismatches == 0, std::to_string(instances.size()) + " pairs, " +
                               std::to_string(mismatches) + " mismatches"};
}

Outcome Determinism() {
  const std::vector<std::string> args{"sweep", "--seed", "7", "--count", "2000",
                                      "--denom", "10"};
  std::ostringstream a, b, err;
  const int sa = RunCommand(args, a, err);
  const int sb = RunCommand(args, b, err);
  const bool same = sa == sb && a.str() == b.str() && !a.str().empty();
  return {same, std::to_string(a.str().size()) + " bytes, " +
                    (same ? "identical" : "DIFFERENT")};
}

}  // namespace
}  // namespace facloc

int main() {
  using facloc::Criterion;
  Criterion(1, "lottery validity", facloc::LotteryValidity);
  Criterion(2, "strategyproofness audits", facloc::Strategyproofness);
  Criterion(3, "auditor power", facloc::AuditorPower);
  Criterion(4, "general ratio <= k and per-case guarantees", facloc::GeneralRatio);
  Criterion(5, "general tightness", facloc::GeneralTightness);
  Criterion(6, "theta bounds", facloc::ThetaBounds);
  Criterion(7, "minisum bounds", facloc::MinisumBound);
  Criterion(8, "lower-bound family", facloc::LowerBoundFamily);
  Criterion(9, "expected welfare oracle equivalence", facloc::OracleEquivalence);
  Criterion(10, "sweep determinism", facloc::Determinism);
  std::printf("%d criteria failed\n", facloc::failures);
  return facloc::failures == 0 ? 0 : 1;
}
