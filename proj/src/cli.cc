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

#include "facloc/cli.h"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "facloc/audit.h"
#include "facloc/error.h"
#include "facloc/generators.h"
#include "facloc/io.h"
#include "facloc/mechanisms.h"
#include "facloc/solver.h"
#include "facloc/sweep.h"

namespace facloc {
namespace {

struct EvalArgs {
  std::string mech;
  std::string theta = "43/100";
  std::string instance;
};

struct OptArgs {
  std::string instance;
};

struct AuditArgs {
  std::string mech;
  std::string theta = "43/100";
  std::string instance;
  bool positions = false;
  int denom = 20;
  bool joint = false;
  std::int64_t budget = 10000;
};

struct SweepArgs {
  std::string spec;
  std::optional<std::uint64_t> seed;
  std::size_t count = 1000;
  std::vector<std::string> mechs{"general", "theta", "minisum"};
  std::string theta = "43/100";
  int denom = 20;
  bool no_preferences = false;
  unsigned threads = 0;
};

struct GenArgs {
  std::string family;
  int k = 2;
  std::string eps = "1/100";
  int step = 0;
  std::string variant = "I";
  std::string spec;
  std::optional<std::uint64_t> seed;
  std::size_t count = 1;
  std::string out;
};

void Emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

std::string CaseFor(const std::string& mech, const Instance& inst,
                    const Rational& theta) {
  if (mech == "general") return std::string(CaseName(ClassifyGeneral(inst)));
  if (mech == "theta") return std::string(CaseName(ClassifyTheta(inst, theta)));
  return "";
}

int DoEval(const EvalArgs& a, std::ostream& out) {
  const Rational theta = Rational::Parse(a.theta);
  const Mechanism m = MechanismByName(a.mech, theta);
  const Instance inst = ReadInstanceFile(a.instance);
  const Lottery lot = m.run(inst);
  Json j;
  j["mechanism"] = m.name;
  if (m.name == "theta") j["theta"] = theta.ToString();
  j["instance"] = a.instance;
  if (const std::string c = CaseFor(m.name, inst, theta); !c.empty()) {
    j["case"] = c;
  }
  j["outcome"] = LotteryToJson(lot);
  j["expected_welfare"] = RationalToJson(ExpectedSocialWelfare(inst, lot));
  Emit(out, j);
  return kExitOk;
}

int DoOpt(const OptArgs& a, std::ostream& out) {
  const Instance inst = ReadInstanceFile(a.instance);
  Json j;
  j["instance"] = a.instance;
  const Json result = OptResultToJson(OptimalSolution(inst));
  for (const auto& [key, value] : result.items()) j[key] = value;
  Emit(out, j);
  return kExitOk;
}

int DoAudit(const AuditArgs& a, std::ostream& out) {
  const Rational theta = Rational::Parse(a.theta);
  const Mechanism m = MechanismByName(a.mech, theta);
  const Instance inst = ReadInstanceFile(a.instance);
  std::size_t found = 0;
  Json j;
  const AuditReport prefs = AuditPreferences(m, inst, a.instance);
  found += prefs.deviations.size();
  j["preferences"] = AuditReportToJson(prefs);
  if (a.positions) {
    const AuditReport pos = AuditPositions(m, inst, a.denom, a.instance);
    found += pos.deviations.size();
    j["positions"] = AuditReportToJson(pos);
  }
  if (a.joint) {
    const AuditReport joint =
        AuditJoint(m, inst, a.denom, a.budget, a.instance);
    found += joint.deviations.size();
    j["joint"] = AuditReportToJson(joint);
  }
  j["profitable_deviations"] = found;
  Emit(out, j);
  return found == 0 ? kExitOk : kExitFinding;
}

RandomSpec LoadSpec(const std::string& path,
                    const std::optional<std::uint64_t>& seed) {
  RandomSpec spec = DefaultSweepSpec();
  if (!path.empty()) {
    const std::string text = ReadTextFile(path);
    Json j;
    try {
      j = Json::parse(text);
    } catch (const Json::parse_error& e) {
      throw Error(ErrorCode::kSyntax, path + ": byte " +
                                          std::to_string(e.byte) + ": " +
                                          e.what());
    }
    spec = RandomSpecFromJson(j);
  }
  if (seed) spec.seed = *seed;
  return spec;
}

int DoSweep(const SweepArgs& a, std::ostream& out) {
  SweepOptions o;
  o.spec = LoadSpec(a.spec, a.seed);
  o.count = a.count;
  o.mechanisms = a.mechs;
  o.theta = Rational::Parse(a.theta);
  o.position_denominator = a.denom;
  o.audit_preferences = !a.no_preferences;
  o.threads = a.threads;
  const SweepResult r = RunSweep(o);
  Emit(out, SweepResultToJson(r));
  return r.AllHeld() ? kExitOk : kExitFinding;
}

int DoGen(const GenArgs& a, std::ostream& out) {
  std::vector<Instance> instances;
  if (a.family == "random") {
    instances = GenRandom(LoadSpec(a.spec, a.seed), a.count);
  } else {
    const Rational eps = Rational::Parse(a.eps);
    if (a.family == "thm1") {
      instances.push_back(GenThm1(a.k, eps, a.step));
    } else if (a.family == "thm2") {
      if (a.variant != "I" && a.variant != "J") {
        throw Error(ErrorCode::kSyntax, "--variant must be I or J");
      }
      instances.push_back(GenThm2(
          a.k, eps, a.variant == "I" ? Thm2Variant::kI : Thm2Variant::kJ));
    } else {
      instances.push_back(GenThm6Sequence(a.k, eps, a.step));
    }
  }
  if (a.out.empty()) {
    if (instances.size() == 1) {
      out << SerializeInstance(instances.front());
    } else {
      for (const Instance& inst : instances) {
        out << InstanceToJson(inst).dump() << "\n";
      }
    }
    return kExitOk;
  }
  if (instances.size() == 1) {
    WriteTextFile(a.out, SerializeInstance(instances.front()));
    return kExitOk;
  }
  std::filesystem::create_directories(a.out);
  for (std::size_t i = 0; i < instances.size(); ++i) {
    char name[32];
    std::snprintf(name, sizeof(name), "instance_%05zu.json", i);
    WriteTextFile((std::filesystem::path(a.out) / name).string(),
                  SerializeInstance(instances[i]));
  }
  return kExitOk;
}

}  // namespace

int RunCommand(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"Strategyproof single-facility location with approvals",
               "facloc"};
  app.require_subcommand(1);
  const std::vector<std::string> mech_names{"general", "theta", "minisum",
                                            "opt"};

  EvalArgs eval;
  auto* eval_cmd = app.add_subcommand("eval", "Run a mechanism on an instance");
  eval_cmd->add_option("--mech", eval.mech, "Mechanism")
      ->required()
      ->check(CLI::IsMember(mech_names));
  eval_cmd->add_option("--theta", eval.theta, "Theta as p/q or decimal");
  eval_cmd->add_option("--instance", eval.instance, "Instance file")
      ->required();

  OptArgs opt;
  auto* opt_cmd = app.add_subcommand("opt", "Exhaustive optimal solution");
  opt_cmd->add_option("--instance", opt.instance, "Instance file")->required();

  AuditArgs audit;
  auto* audit_cmd =
      app.add_subcommand("audit", "Search for profitable misreports");
  audit_cmd->add_option("--mech", audit.mech, "Mechanism")
      ->required()
      ->check(CLI::IsMember(mech_names));
  audit_cmd->add_option("--theta", audit.theta, "Theta as p/q or decimal");
  audit_cmd->add_option("--instance", audit.instance, "Instance file")
      ->required();
  audit_cmd->add_flag("--positions", audit.positions,
                      "Also audit position misreports");
  audit_cmd->add_option("--denom", audit.denom, "Position grid denominator")
      ->check(CLI::PositiveNumber);
  audit_cmd->add_flag("--joint", audit.joint,
                      "Also audit joint position+approval misreports");
  audit_cmd->add_option("--budget", audit.budget,
                        "Joint misreports per agent");

  SweepArgs sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "Random ratio and SP sweep");
  sweep_cmd->add_option("--spec", sweep.spec, "Random spec file (JSON)");
  sweep_cmd->add_option("--seed", sweep.seed, "Override the seed from --spec");
  sweep_cmd->add_option("--count", sweep.count, "Number of instances");
  sweep_cmd->add_option("--mechs", sweep.mechs, "Mechanisms")
      ->delimiter(',')
      ->check(CLI::IsMember(mech_names));
  sweep_cmd->add_option("--theta", sweep.theta, "Theta as p/q or decimal");
  sweep_cmd->add_option("--denom", sweep.denom,
                        "Position grid denominator (0 disables)")
      ->check(CLI::NonNegativeNumber);
  sweep_cmd->add_flag("--no-preferences", sweep.no_preferences,
                      "Skip preference audits");
  sweep_cmd->add_option("--threads", sweep.threads,
                        "Worker threads (default: FACLOC_THREADS)");

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Write instance files");
  gen_cmd->add_option("--family", gen.family, "Instance family")
      ->required()
      ->check(CLI::IsMember({"random", "thm1", "thm2", "thm6"}));
  gen_cmd->add_option("--k", gen.k, "Number of facilities");
  gen_cmd->add_option("--eps", gen.eps, "Epsilon as p/q or decimal");
  gen_cmd->add_option("--step", gen.step, "Family step");
  gen_cmd->add_option("--variant", gen.variant, "thm2 variant (I or J)");
  gen_cmd->add_option("--spec", gen.spec, "Random spec file (JSON)");
  gen_cmd->add_option("--seed", gen.seed, "Override the seed from --spec");
  gen_cmd->add_option("--count", gen.count, "Number of random instances");
  gen_cmd->add_option("--out", gen.out,
                      "Output file, or directory when count > 1");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (eval_cmd->parsed()) return DoEval(eval, out);
    if (opt_cmd->parsed()) return DoOpt(opt, out);
    if (audit_cmd->parsed()) return DoAudit(audit, out);
    if (sweep_cmd->parsed()) return DoSweep(sweep, out);
    if (gen_cmd->parsed()) return DoGen(gen, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace facloc
