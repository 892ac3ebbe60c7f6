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

#include <gtest/gtest.h>

#include "facloc/audit.h"
#include "facloc/error.h"
#include "facloc/generators.h"
#include "facloc/solver.h"
#include "test_util.h"

namespace facloc {
namespace {

using testing::Q;

Error ParseError(std::string_view text) {
  try {
    ParseInstance(text);
  } catch (const Error& e) {
    return e;
  }
  ADD_FAILURE() << "parsed: " << text;
  return Error(ErrorCode::kSyntax, "");
}

TEST(ParseInstanceTest, MinimalFile) {
  const Instance inst = ParseInstance(
      R"({"k": 2, "candidates": ["1"], "agents": [{"x": "1/1000", "approvals": [1, 0]}]})");
  EXPECT_EQ(inst.k(), 2);
  EXPECT_EQ(inst.n(), 1u);
  EXPECT_EQ(inst.agent(0).position, Q("1/1000"));
  EXPECT_EQ(inst.agent(0).approvals, (std::vector<bool>{true, false}));
  EXPECT_EQ(inst.candidates(), std::vector<Rational>{Rational(1)});
}

TEST(ParseInstanceTest, DecimalsAreExact) {
  const Instance inst = ParseInstance(
      R"({"format": "facloc-instance", "version": 1, "k": 2,
          "candidates": ["0.43", "0.9"], "agents": [{"x": "0.125", "approvals": [0, 1]}]})");
  EXPECT_EQ(inst.candidates()[0], Q("43/100"));
  EXPECT_EQ(inst.candidates()[1], Q("9/10"));
  EXPECT_EQ(inst.agent(0).position, Q("1/8"));
}

TEST(ParseInstanceTest, ValidationErrors) {
  EXPECT_EQ(ParseError(R"({"k": 2, "candidates": ["1/3", "1/3"],
                           "agents": [{"x": "0", "approvals": [1, 0]}]})")
                .code(),
            ErrorCode::kDuplicateCandidate);
  EXPECT_EQ(ParseError(R"({"k": 2, "candidates": ["1"],
                           "agents": [{"x": "2", "approvals": [1, 0]}]})")
                .code(),
            ErrorCode::kPositionOutOfRange);
  EXPECT_EQ(ParseError(R"({"k": 2, "candidates": ["1"],
                           "agents": [{"x": "0", "approvals": [1]}]})")
                .code(),
            ErrorCode::kApprovalLengthMismatch);
}

TEST(ParseInstanceTest, SyntaxErrorsArePositional) {
  const Error bad_json = ParseError(R"({"k": 2, "candidates": ["1"],, })");
  EXPECT_EQ(bad_json.code(), ErrorCode::kSyntax);
  EXPECT_NE(std::string(bad_json.what()).find("byte 30"), std::string::npos)
      << bad_json.what();

  const Error bad_x = ParseError(R"({"k": 2, "candidates": ["1"],
      "agents": [{"x": "0", "approvals": [1, 0]}, {"x": "1e-3", "approvals": [1, 0]}]})");
  EXPECT_EQ(bad_x.code(), ErrorCode::kSyntax);
  EXPECT_NE(std::string(bad_x.what()).find("$.agents[1].x"), std::string::npos);

  const Error bad_bit = ParseError(R"({"k": 2, "candidates": ["1"],
      "agents": [{"x": "0", "approvals": [1, 2]}]})");
  EXPECT_NE(std::string(bad_bit.what()).find("$.agents[0].approvals[1]"),
            std::string::npos);

  const Error number = ParseError(R"({"k": 2, "candidates": [0.5], "agents": []})");
  EXPECT_NE(std::string(number.what()).find("$.candidates[0]"), std::string::npos);

  EXPECT_EQ(ParseError(R"({"k": 2, "candidates": ["1"], "agents": [], "n": 3})").code(),
            ErrorCode::kSyntax);
  EXPECT_EQ(ParseError(R"({"format": "other", "k": 2, "candidates": ["1"],
                           "agents": [{"x": "0", "approvals": [1, 0]}]})")
                .code(),
            ErrorCode::kSyntax);
  EXPECT_EQ(ParseError(R"({"version": 2, "k": 2, "candidates": ["1"],
                           "agents": [{"x": "0", "approvals": [1, 0]}]})")
                .code(),
            ErrorCode::kSyntax);
  EXPECT_EQ(ParseError("[]").code(), ErrorCode::kSyntax);
}

TEST(SerializeInstanceTest, RoundTripIsIdentity) {
  RandomSpec spec = DefaultSweepSpec(11);
  spec.denominator = 97;
  spec.approvals = ApprovalModel::kUnrestrictedUniform;
  for (const Instance& inst : GenRandom(spec, 300)) {
    const std::string text = SerializeInstance(inst);
    const Instance back = ParseInstance(text);
    EXPECT_EQ(back, inst);
    EXPECT_EQ(SerializeInstance(back), text);
  }
}

TEST(SerializeInstanceTest, Layout) {
  const Instance inst = GenThm1(2, Q("1/100"), 1);
  const Json j = InstanceToJson(inst);
  EXPECT_EQ(j["format"], "facloc-instance");
  EXPECT_EQ(j["version"], 1);
  EXPECT_EQ(j["candidates"], Json::array({"1"}));
  EXPECT_EQ(j["agents"][0]["x"], "1/100");
  EXPECT_EQ(j["agents"][1]["approvals"], Json::array({0, 1}));
  EXPECT_EQ(SerializeInstance(inst).back(), '\n');
}

TEST(ReportJsonTest, Shapes) {
  EXPECT_EQ(RationalToJson(Q("1/3")),
            Json({{"exact", "1/3"}, {"decimal", "0.33333333333333333333"}}));
  const Json lot = LotteryToJson(Lottery::Create(
      {{Solution{1, Q("1/5")}, Q("4/7")}, {Solution{1, Q("9/10")}, Q("3/7")}}));
  ASSERT_EQ(lot.size(), 2u);
  EXPECT_EQ(lot[0]["facility"], 1);
  EXPECT_EQ(lot[0]["location"], "1/5");
  EXPECT_EQ(lot[0]["probability"], "4/7");

  const Json opt = OptResultToJson(OptimalSolution(GenThm6Sequence(2, Q("1/100"), 0)));
  EXPECT_EQ(opt["best"]["facility"], 1);
  EXPECT_EQ(opt["best"]["location"], "0");
  EXPECT_EQ(opt["opt_welfare"]["exact"], "3");
  EXPECT_EQ(opt["table"].size(), 4u);

  const Json audit = AuditReportToJson(AuditPreferences(
      OptimalAsMechanism(), GenThm6Sequence(2, Q("1/100"), 0), "thm6"));
  EXPECT_EQ(audit["instance"], "thm6");
  EXPECT_GT(audit["profitable_deviations"].get<int>(), 0);
  EXPECT_EQ(audit["deviations"][0]["gain"], "1/50");

  const Instance nobody = Instance::Create(
      2, {testing::MakeAgent("0", {0, 0})}, {Q("1/2")});
  EXPECT_EQ(RatioReportToJson(EmpiricalRatio(GeneralMechanism(), nobody))["ratio"], "One");
}

TEST(RandomSpecJsonTest, ParseAndEcho) {
  const RandomSpec spec = RandomSpecFromJson(Json::parse(
      R"({"seed": 9, "agents": [2, 4], "k": 3, "denominator": 8,
          "candidates": [1, 2], "approvals": "single"})"));
  EXPECT_EQ(spec.seed, 9u);
  EXPECT_EQ(spec.agents, (IntRange{2, 4}));
  EXPECT_EQ(spec.k, (IntRange{3, 3}));
  EXPECT_EQ(spec.denominator, 8);
  EXPECT_EQ(spec.candidates, (IntRange{1, 2}));
  EXPECT_EQ(spec.approvals, ApprovalModel::kSingleApproval);
  EXPECT_EQ(RandomSpecFromJson(RandomSpecToJson(spec)), spec);
  EXPECT_EQ(RandomSpecFromJson(Json::object()), RandomSpec{});
  EXPECT_THROW(RandomSpecFromJson(Json::parse(R"({"seed": -1})")), Error);
  EXPECT_THROW(RandomSpecFromJson(Json::parse(R"({"agents": [1, 2, 3]})")), Error);
  EXPECT_THROW(RandomSpecFromJson(Json::parse(R"({"colour": 1})")), Error);
}

}  // namespace
}  // namespace facloc
