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

#include "facloc/io.h"

#include <fstream>
#include <sstream>
#include <vector>

#include "facloc/error.h"

namespace facloc {
namespace {

[[noreturn]] void Fail(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::kSyntax, path + ": " + what);
}

Rational RationalAt(const Json& j, const std::string& path) {
  if (!j.is_string()) Fail(path, "expected a rational string");
  Rational r;
  if (!Rational::TryParse(j.get<std::string>(), &r)) {
    Fail(path, "malformed rational \"" + j.get<std::string>() + "\"");
  }
  return r;
}

int IntAt(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) Fail(path, "expected an integer");
  return j.get<int>();
}

IntRange RangeAt(const Json& j, const std::string& path) {
  if (j.is_number_integer()) {
    const int v = j.get<int>();
    return {v, v};
  }
  if (!j.is_array() || j.size() != 2) Fail(path, "expected [lo, hi]");
  return {IntAt(j[0], path + "[0]"), IntAt(j[1], path + "[1]")};
}

void RejectUnknownKeys(const Json& j, const std::vector<std::string>& known,
                       const std::string& path) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const auto& k : known) ok = ok || it.key() == k;
    if (!ok) Fail(path, "unknown key \"" + it.key() + "\"");
  }
}

}  // namespace

Instance InstanceFromJson(const Json& j) {
  if (!j.is_object()) Fail("$", "expected an object");
  RejectUnknownKeys(j, {"format", "version", "k", "candidates", "agents"}, "$");
  if (j.contains("format") &&
      (!j["format"].is_string() || j["format"].get<std::string>() != kInstanceFormat)) {
    Fail("$.format", "expected \"" + std::string(kInstanceFormat) + "\"");
  }
  if (j.contains("version") && IntAt(j["version"], "$.version") != kInstanceVersion) {
    Fail("$.version", "unsupported version");
  }
  InstanceData data;
  if (!j.contains("k")) Fail("$", "missing \"k\"");
  data.k = IntAt(j["k"], "$.k");
  if (!j.contains("candidates") || !j["candidates"].is_array()) {
    Fail("$.candidates", "expected an array");
  }
  for (std::size_t c = 0; c < j["candidates"].size(); ++c) {
    data.candidates.push_back(RationalAt(
        j["candidates"][c], "$.candidates[" + std::to_string(c) + "]"));
  }
  if (!j.contains("agents") || !j["agents"].is_array()) {
    Fail("$.agents", "expected an array");
  }
  for (std::size_t i = 0; i < j["agents"].size(); ++i) {
    const std::string path = "$.agents[" + std::to_string(i) + "]";
    const Json& a = j["agents"][i];
    if (!a.is_object()) Fail(path, "expected an object");
    RejectUnknownKeys(a, {"x", "approvals"}, path);
    if (!a.contains("x")) Fail(path, "missing \"x\"");
    if (!a.contains("approvals") || !a["approvals"].is_array()) {
      Fail(path + ".approvals", "expected an array");
    }
    Agent agent;
    agent.position = RationalAt(a["x"], path + ".x");
    for (std::size_t f = 0; f < a["approvals"].size(); ++f) {
      const std::string fpath = path + ".approvals[" + std::to_string(f) + "]";
      const int v = IntAt(a["approvals"][f], fpath);
      if (v != 0 && v != 1) Fail(fpath, "expected 0 or 1");
      agent.approvals.push_back(v == 1);
    }
    data.agents.push_back(std::move(agent));
  }
  return Instance::Create(std::move(data));
}

Instance ParseInstance(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::kSyntax,
                "byte " + std::to_string(e.byte) + ": " + e.what());
  }
  return InstanceFromJson(j);
}

Json InstanceToJson(const Instance& inst) {
  Json j;
  j["format"] = std::string(kInstanceFormat);
  j["version"] = kInstanceVersion;
  j["k"] = inst.k();
  Json cands = Json::array();
  for (const Rational& c : inst.candidates()) cands.push_back(c.ToString());
  j["candidates"] = std::move(cands);
  Json agents = Json::array();
  for (const Agent& a : inst.agents()) {
    Json approvals = Json::array();
    for (bool b : a.approvals) approvals.push_back(b ? 1 : 0);
    agents.push_back(Json{{"x", a.position.ToString()},
                          {"approvals", std::move(approvals)}});
  }
  j["agents"] = std::move(agents);
  return j;
}

std::string SerializeInstance(const Instance& inst) {
  return InstanceToJson(inst).dump(2) + "\n";
}

std::string ReadTextFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteTextFile(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path);
  out << text;
  if (!out) throw Error(ErrorCode::kIo, "write failed for " + path);
}

Instance ReadInstanceFile(const std::string& path) {
  try {
    return ParseInstance(ReadTextFile(path));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kIo) throw;
    throw Error(e.code(), path + ": " + e.what());
  }
}

Json RationalToJson(const Rational& r) {
  return Json{{"exact", r.ToString()}, {"decimal", r.ToDecimal(20)}};
}

Json SolutionToJson(const Solution& s) {
  return Json{{"facility", s.facility}, {"location", s.location.ToString()}};
}

Json LotteryToJson(const Lottery& lot) {
  Json atoms = Json::array();
  for (const auto& [sol, p] : lot.atoms()) {
    Json a = SolutionToJson(sol);
    a["probability"] = p.ToString();
    atoms.push_back(std::move(a));
  }
  return atoms;
}

Json OptResultToJson(const OptResult& r) {
  Json table = Json::array();
  for (const auto& [sol, sw] : r.full_table) {
    Json row = SolutionToJson(sol);
    row["welfare"] = sw.ToString();
    table.push_back(std::move(row));
  }
  return Json{{"best", SolutionToJson(r.best)},
              {"opt_welfare", RationalToJson(r.opt_welfare)},
              {"table", std::move(table)}};
}

Json AuditReportToJson(const AuditReport& r) {
  Json devs = Json::array();
  for (const Deviation& d : r.deviations) {
    Json row;
    row["agent"] = d.agent;
    if (d.reported_approvals) {
      Json a = Json::array();
      for (bool b : *d.reported_approvals) a.push_back(b ? 1 : 0);
      row["reported_approvals"] = std::move(a);
    }
    if (d.reported_position) {
      row["reported_position"] = d.reported_position->ToString();
    }
    row["truthful_utility"] = d.truthful_utility.ToString();
    row["deviant_utility"] = d.deviant_utility.ToString();
    row["gain"] = d.Gain().ToString();
    devs.push_back(std::move(row));
  }
  Json j;
  j["instance"] = r.instance_id;
  j["mechanism"] = r.mechanism;
  j["deviations_checked"] = r.deviations_checked;
  j["exhaustive_preferences"] = r.exhaustive_preferences;
  j["exhaustive_positions"] = r.exhaustive_positions;
  if (r.outcome_invariant) {
    j["outcome_invariant"] = *r.outcome_invariant;
    j["outcome_changes"] = r.outcome_changes;
  }
  if (r.budget) {
    j["budget"] = *r.budget;
    j["truncated"] = r.truncated;
  }
  j["profitable_deviations"] = r.deviations.size();
  j["deviations"] = std::move(devs);
  return j;
}

Json RatioReportToJson(const RatioReport& r) {
  Json j;
  j["instance"] = r.instance_id;
  j["mechanism"] = r.mechanism;
  j["opt"] = RationalToJson(r.opt);
  j["mech"] = RationalToJson(r.mech);
  switch (r.kind) {
    case RatioKind::kFinite:
      j["ratio"] = RationalToJson(r.ratio);
      break;
    case RatioKind::kOne:
      j["ratio"] = "One";
      break;
    case RatioKind::kInfinite:
      j["ratio"] = "Infinite";
      break;
  }
  return j;
}

RandomSpec RandomSpecFromJson(const Json& j) {
  if (!j.is_object()) Fail("$", "expected an object");
  RejectUnknownKeys(
      j, {"seed", "agents", "k", "denominator", "candidates", "approvals"}, "$");
  RandomSpec spec = DefaultSweepSpec();
  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned()) Fail("$.seed", "expected an unsigned integer");
    spec.seed = j["seed"].get<std::uint64_t>();
  }
  if (j.contains("agents")) spec.agents = RangeAt(j["agents"], "$.agents");
  if (j.contains("k")) spec.k = RangeAt(j["k"], "$.k");
  if (j.contains("denominator")) {
    spec.denominator = IntAt(j["denominator"], "$.denominator");
  }
  if (j.contains("candidates")) {
    spec.candidates = RangeAt(j["candidates"], "$.candidates");
  }
  if (j.contains("approvals")) {
    if (!j["approvals"].is_string()) Fail("$.approvals", "expected a string");
    spec.approvals = ParseApprovalModel(j["approvals"].get<std::string>());
  }
  CheckRandomSpec(spec);
  return spec;
}

Json RandomSpecToJson(const RandomSpec& spec) {
  return Json{{"seed", spec.seed},
              {"agents", {spec.agents.lo, spec.agents.hi}},
              {"k", {spec.k.lo, spec.k.hi}},
              {"denominator", spec.denominator},
              {"candidates", {spec.candidates.lo, spec.candidates.hi}},
              {"approvals", std::string(ApprovalModelName(spec.approvals))}};
}

}  // namespace facloc
