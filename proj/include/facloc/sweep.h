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

#ifndef FACLOC_SWEEP_H_
#define FACLOC_SWEEP_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "facloc/audit.h"
#include "facloc/generators.h"
#include "facloc/io.h"
#include "facloc/rational.h"

namespace facloc {

struct SweepOptions {
  RandomSpec spec = DefaultSweepSpec();
  std::size_t count = 1000;
  std::vector<std::string> mechanisms{"general", "theta", "minisum"};
  Rational theta = ThetaDefault();
  // Grid for position audits of general-setting mechanisms; 0 disables them.
  int position_denominator = 20;
  bool audit_preferences = true;
  // 0 means: FACLOC_THREADS, else the hardware concurrency.
  unsigned threads = 0;
};

struct MechanismSweep {
  std::string mechanism;
  std::size_t count = 0;
  std::optional<RatioReport> worst;
  std::size_t worst_index = 0;
  std::optional<Instance> worst_instance;
  std::int64_t deviations_checked = 0;
  std::int64_t deviations_found = 0;
  bool positions_audited = false;
  std::int64_t outcome_changes = 0;
  std::int64_t bound_violations = 0;
  std::string bound_asserted;
  std::map<std::string, std::int64_t> case_coverage;

  bool BoundSatisfied() const { return bound_violations == 0; }
};

struct SweepResult {
  SweepOptions options;
  std::vector<MechanismSweep> mechanisms;

  bool AllHeld() const;
};

// Thread count from FACLOC_THREADS, falling back to the hardware count.
unsigned DefaultThreadCount();

// Instances are evaluated concurrently and merged in index order, so the
// result does not depend on the thread count.
SweepResult RunSweep(const SweepOptions& options);

Json SweepResultToJson(const SweepResult& result);

}  // namespace facloc

#endif  // FACLOC_SWEEP_H_
