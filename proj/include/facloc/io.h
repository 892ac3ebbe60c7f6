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

#ifndef FACLOC_IO_H_
#define FACLOC_IO_H_

#include <string>
#include <string_view>

#include "facloc/audit.h"
#include "facloc/generators.h"
#include "facloc/mechanisms.h"
#include "facloc/model.h"
#include "facloc/rational.h"
#include "facloc/solver.h"
#include "json.hpp"

namespace facloc {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kInstanceFormat = "facloc-instance";
inline constexpr int kInstanceVersion = 1;

// Instance file:
//   {"format": "facloc-instance", "version": 1, "k": 2,
//    "candidates": ["0", "1/2"],
//    "agents": [{"x": "0.25", "approvals": [1, 0]}]}
// Rationals are strings ("p", "p/q" or a plain decimal, parsed exactly).
// Syntax errors throw Error(kSyntax) with a byte offset or a JSON path;
// invariant violations throw the matching validation error.
Instance ParseInstance(std::string_view text);
Instance InstanceFromJson(const Json& j);
Json InstanceToJson(const Instance& inst);
// Two-space indented JSON with a trailing newline; stable byte for byte.
std::string SerializeInstance(const Instance& inst);

Instance ReadInstanceFile(const std::string& path);
void WriteTextFile(const std::string& path, std::string_view text);
std::string ReadTextFile(const std::string& path);

// {"exact": "p/q", "decimal": "0.xxxxxxxxxxxxxxxxxxxx"}.
Json RationalToJson(const Rational& r);

Json SolutionToJson(const Solution& s);
Json LotteryToJson(const Lottery& lot);
Json OptResultToJson(const OptResult& r);
Json AuditReportToJson(const AuditReport& r);
Json RatioReportToJson(const RatioReport& r);

// Random-family spec file; every field is optional:
//   {"seed": 0, "agents": [1, 6], "k": [2, 3], "denominator": 12,
//    "candidates": [1, 3], "approvals": "nonempty"}
RandomSpec RandomSpecFromJson(const Json& j);
Json RandomSpecToJson(const RandomSpec& spec);

}  // namespace facloc

#endif  // FACLOC_IO_H_
