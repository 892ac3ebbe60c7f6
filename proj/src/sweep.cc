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

#include "facloc/sweep.h"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

#include "facloc/mechanisms.h"

namespace facloc {
namespace {

struct Cell {
  RatioReport ratio;
  bool bound_ok = true;
  std::int64_t checked = 0;
  std::int64_t found = 0;
  std::int64_t outcome_changes = 0;
  std::string case_name;
};

std::string CaseOf(const Mechanism& m, const Instance& inst,
                   const Rational& theta) {
  if (m.name == "general") return std::string(CaseName(ClassifyGeneral(inst)));
  if (m.name == "theta") {
    return std::string(CaseName(ClassifyTheta(inst, theta)));
  }
  return "k=" + std::to_string(inst.k());
}

std::string BoundDescription(const Mechanism& m, const Rational& theta) {
  if (m.name == "general") return "k";
  if (m.name == "theta") {
    const auto b = ThetaRatioBound(theta);
    return b ? b->ToString() : "unbounded";
  }
  if (m.name == "minisum") return "2 if k = 2, else k";
  if (m.name == "opt") return "1";
  return "none";
}

Cell Evaluate(const Mechanism& m, const Instance& inst, const std::string& id,
              const SweepOptions& options) {
  Cell cell;
  cell.ratio = EmpiricalRatio(m, inst, id);
  if (const auto bound = m.ratio_bound(inst)) {
    cell.bound_ok = cell.ratio.WithinBound(*bound);
  }
  if (options.audit_preferences) {
    const AuditReport r = AuditPreferences(m, inst, id);
    cell.checked += r.deviations_checked;
    cell.found += static_cast<std::int64_t>(r.deviations.size());
  }
  if (options.position_denominator > 0 && m.setting == Setting::kGeneral) {
    const AuditReport r =
        AuditPositions(m, inst, options.position_denominator, id);
    cell.checked += r.deviations_checked;
    cell.found += static_cast<std::int64_t>(r.deviations.size());
    cell.outcome_changes += r.outcome_changes;
  }
  cell.case_name = CaseOf(m, inst, options.theta);
  return cell;
}

}  // namespace

bool SweepResult::AllHeld() const {
  for (const auto& m : mechanisms) {
    if (m.deviations_found > 0 || !m.BoundSatisfied()) return false;
  }
  return true;
}

unsigned DefaultThreadCount() {
  if (const char* env = std::getenv("FACLOC_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

SweepResult RunSweep(const SweepOptions& options) {
  CheckRandomSpec(options.spec);
  std::vector<Mechanism> mechs;
  for (const auto& name : options.mechanisms) {
    mechs.push_back(MechanismByName(name, options.theta));
  }

  const std::size_t count = options.count;
  std::vector<std::vector<Cell>> cells(count);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&] {
    for (;;) {
      const std::size_t idx = next.fetch_add(1);
      if (idx >= count) return;
      try {
        const Instance inst = GenRandomAt(options.spec, idx);
        const std::string id = "random#" + std::to_string(idx);
        cells[idx].reserve(mechs.size());
        for (const Mechanism& m : mechs) {
          cells[idx].push_back(Evaluate(m, inst, id, options));
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mu);
        if (!failure) failure = std::current_exception();
        next.store(count);
        return;
      }
    }
  };
  const unsigned threads = std::max(
      1U, std::min<unsigned>(options.threads ? options.threads
                                             : DefaultThreadCount(),
                             static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  SweepResult result;
  result.options = options;
  for (std::size_t m = 0; m < mechs.size(); ++m) {
    MechanismSweep ms;
    ms.mechanism = mechs[m].name;
    ms.bound_asserted = BoundDescription(mechs[m], options.theta);
    ms.positions_audited = options.position_denominator > 0 &&
                           mechs[m].setting == Setting::kGeneral;
    for (std::size_t idx = 0; idx < count; ++idx) {
      const Cell& c = cells[idx][m];
      ++ms.count;
      ms.deviations_checked += c.checked;
      ms.deviations_found += c.found;
      ms.outcome_changes += c.outcome_changes;
      if (!c.bound_ok) ++ms.bound_violations;
      ++ms.case_coverage[c.case_name];
      if (!ms.worst || RatioLess(*ms.worst, c.ratio)) {
        ms.worst = c.ratio;
        ms.worst_index = idx;
      }
    }
    if (ms.worst) ms.worst_instance = GenRandomAt(options.spec, ms.worst_index);
    result.mechanisms.push_back(std::move(ms));
  }
  return result;
}

Json SweepResultToJson(const SweepResult& result) {
  const SweepOptions& o = result.options;
  Json mechs = Json::array();
  for (const MechanismSweep& m : result.mechanisms) {
    Json j;
    j["mechanism"] = m.mechanism;
    j["count"] = m.count;
    if (m.worst) {
      j["max_ratio"] = RatioReportToJson(*m.worst);
      j["argmax_index"] = m.worst_index;
      j["argmax_instance"] = InstanceToJson(*m.worst_instance);
    }
    j["deviations_checked"] = m.deviations_checked;
    j["deviations_found"] = m.deviations_found;
    if (m.positions_audited) {
      j["position_outcome_changes"] = m.outcome_changes;
    }
    j["bound_asserted"] = m.bound_asserted;
    j["bound_violations"] = m.bound_violations;
    j["bound_satisfied"] = m.BoundSatisfied();
    Json cov = Json::object();
    for (const auto& [name, n] : m.case_coverage) cov[name] = n;
    j["case_coverage"] = std::move(cov);
    mechs.push_back(std::move(j));
  }
  Json j;
  j["spec"] = RandomSpecToJson(o.spec);
  j["count"] = o.count;
  j["theta"] = o.theta.ToString();
  j["position_denominator"] = o.position_denominator;
  j["audit_preferences"] = o.audit_preferences;
  j["mechanisms"] = std::move(mechs);
  j["all_held"] = result.AllHeld();
  return j;
}

}  // namespace facloc
