// Copyright 2026 The Anchorcheck Authors
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

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "report.hpp"

namespace anchorcheck::cli {
namespace {

using exactnum::ParamRational;
using exactnum::Rational;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result RunArgs(std::vector<std::string> args) {
  args.insert(args.begin(), "anchorcheck");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = Run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TEST(RenderDocTest, EmptyDocumentGoldenBytes) {
  const ReportDocument doc;
  EXPECT_EQ(Render(doc, Format::kJson),
            "{\n"
            "  \"certificate\": null,\n"
            "  \"config\": {},\n"
            "  \"equations\": null,\n"
            "  \"identities\": null,\n"
            "  \"lambda\": null,\n"
            "  \"numeric\": null,\n"
            "  \"verdict\": \"\",\n"
            "  \"version\": \"anchorcheck 1.0.0\"\n"
            "}\n");
  EXPECT_EQ(Render(doc, Format::kText), "anchorcheck 1.0.0\nconfig: {}\nverdict: \n");
  EXPECT_EQ(Render(doc, Format::kJson), Render(doc, Format::kJson));
}

TEST(RenderDocTest, MismatchFlaggedInBothFormats) {
  ReportDocument doc;
  doc.lambda = LambdaDoc{{{2, "-3", "1", true, false, "MISMATCH"}}, {}};
  EXPECT_NE(Render(doc, Format::kText).find("MISMATCH"), std::string::npos);
  EXPECT_NE(Render(doc, Format::kJson).find("MISMATCH"), std::string::npos);

  ReportDocument agreeing;
  agreeing.lambda = LambdaDoc{{{1, "-1", "-1", true, true, "agree"}}, {}};
  EXPECT_EQ(Render(agreeing, Format::kText).find("MISMATCH"), std::string::npos);
}

TEST(RenderDocTest, JsonRoundTrip) {
  const Result r = RunArgs({"report", "--max-order", "3", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const ReportDocument doc = FromJson(nlohmann::json::parse(r.out));
  EXPECT_EQ(Render(doc, Format::kJson), r.out);
  EXPECT_EQ(FromJson(ToJson(doc)), doc);
  ASSERT_TRUE(doc.numeric.has_value());
  ASSERT_TRUE(doc.numeric->adjudication.has_value());
  EXPECT_EQ(doc.numeric->adjudication->winner, "engine");
}

TEST(RenderDocTest, SchemaKeys) {
  const Result r = RunArgs({"verify", "--format", "json"});
  const auto j = nlohmann::json::parse(r.out);
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"certificate", "config", "equations",
                                            "identities", "lambda", "numeric", "verdict",
                                            "version"}));
  EXPECT_THROW(FromJson(nlohmann::json::object()), nlohmann::json::exception);
}

TEST(RunTest, IterateText) {
  const Result r = RunArgs({"iterate", "--order", "1", "--target", "n3", "--format", "text"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "-1/r^2*s - 1/r*s*c*g^-1\n");
  EXPECT_EQ(RunArgs({"iterate", "--params", "a=2,r=1"}).out, "-s - s*c*g^-1\n");
  EXPECT_EQ(RunArgs({"iterate", "--target", "n1"}).out,
            "cos(phi)*(-1/r^2*c - 1/r*c^2*g^-1 + 1/r*g^-1 - c*g^-2)\n");
}

TEST(RunTest, IterateJsonCarriesPublishedForm) {
  const Result r = RunArgs({"iterate", "--order", "2", "--format", "json"});
  const ReportDocument doc = FromJson(nlohmann::json::parse(r.out));
  ASSERT_TRUE(doc.equations.has_value());
  const EquationRow& row = doc.equations->front();
  EXPECT_EQ(row.engine_pole, 3u);
  ASSERT_TRUE(row.published.has_value());
  EXPECT_NE(*row.published, row.engine);
}

TEST(RunTest, CertifyMatchesGoldenFile) {
  const Result first = RunArgs({"certify", "--max-order", "4", "--format", "json"});
  const Result second = RunArgs({"certify", "--max-order", "4", "--format", "json"});
  ASSERT_EQ(first.code, kExitOk) << first.err;
  EXPECT_EQ(first.out, second.out);
  EXPECT_EQ(first.out, ReadFile(std::string(ANCHORCHECK_GOLDEN_DIR) + "/certify_m4.json"));
  const auto j = nlohmann::json::parse(first.out);
  EXPECT_EQ(j["certificate"]["verdict"], "NoRelationUpTo(4)");
  EXPECT_EQ(j["certificate"]["poles"], nlohmann::json({1, 3, 5, 7}));
  EXPECT_EQ(j["verdict"],
            "NoRelationUpTo(4): the anchor-ring Gauss map is of infinite type, verified "
            "up to order 4");
}

TEST(RunTest, ParallelCertificateEqualsSequential) {
  auto seq = nlohmann::json::parse(RunArgs({"certify", "--max-order", "5", "--format", "json"}).out);
  auto par = nlohmann::json::parse(
      RunArgs({"certify", "--max-order", "5", "--format", "json", "--parallel"}).out);
  seq.erase("config");
  par.erase("config");
  EXPECT_EQ(seq, par);
}

TEST(RunTest, VerifyAndFalsification) {
  const Result ok = RunArgs({"verify"});
  EXPECT_EQ(ok.code, kExitOk);
  EXPECT_NE(ok.out.find("PASS  laplace_position"), std::string::npos);
  EXPECT_NE(ok.out.find("PASS  laplace_gauss"), std::string::npos);
  const Result h = RunArgs({"verify", "--perturb", "H"});
  EXPECT_EQ(h.code, kExitCheckFailed);
  EXPECT_NE(h.out.find("FAIL  laplace_position"), std::string::npos);
  EXPECT_FALSE(h.err.empty());
  const Result k = RunArgs({"verify", "--perturb", "K"});
  EXPECT_EQ(k.code, kExitCheckFailed);
  EXPECT_NE(k.out.find("PASS  laplace_position"), std::string::npos);
  EXPECT_NE(k.out.find("FAIL  laplace_gauss"), std::string::npos);
}

TEST(RunTest, AdjudicateAndNumeric) {
  const Result adj = RunArgs({"adjudicate", "--order", "2"});
  EXPECT_EQ(adj.code, kExitOk);
  EXPECT_NE(adj.out.find("winner: engine"), std::string::npos);
  EXPECT_EQ(RunArgs({"numeric"}).code, kExitOk);
}

TEST(RunTest, UsageErrors) {
  EXPECT_EQ(RunArgs({}).code, kExitUsage);
  EXPECT_EQ(RunArgs({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(RunArgs({"iterate", "--order", "0"}).code, kExitUsage);
  EXPECT_EQ(RunArgs({"iterate", "--target", "n4"}).code, kExitUsage);
  EXPECT_EQ(RunArgs({"certify", "--max-order", "0"}).code, kExitUsage);
  EXPECT_EQ(RunArgs({"iterate", "--format", "xml"}).code, kExitUsage);
  const Result bad = RunArgs({"iterate", "--params", "a=1,r=2"});
  EXPECT_EQ(bad.code, kExitUsage);
  EXPECT_NE(bad.err.find("a > r > 0"), std::string::npos);
  EXPECT_EQ(RunArgs({"--help"}).code, kExitOk);
}

TEST(RunTest, ResourceGuard) {
  const Result r = RunArgs({"certify", "--max-order", "6", "--ceiling", "10"});
  EXPECT_EQ(r.code, kExitResourceLimit);
  EXPECT_NE(r.err.find("ceiling"), std::string::npos);
  EXPECT_TRUE(r.out.empty());
}

TEST(RunTest, CeilingFromEnvironment) {
  ::setenv(kCeilingEnv, "10", 1);
  EXPECT_EQ(RunArgs({"certify", "--max-order", "6"}).code, kExitResourceLimit);
  EXPECT_EQ(RunArgs({"certify", "--max-order", "6", "--ceiling", "100000"}).code, kExitOk);
  ::setenv(kCeilingEnv, "many", 1);
  EXPECT_EQ(RunArgs({"certify", "--max-order", "2"}).code, kExitUsage);
  ::unsetenv(kCeilingEnv);
}

TEST(RunTest, OutputFile) {
  const auto path = std::filesystem::temp_directory_path() / "anchorcheck_cli_test.json";
  const Result r = RunArgs({"certify", "--max-order", "2", "--format", "json", "--output",
                            path.string()});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(r.out.empty());
  const auto doc = FromJson(nlohmann::json::parse(ReadFile(path.string())));
  EXPECT_EQ(doc.certificate->verdict, "NoRelationUpTo(2)");
  std::filesystem::remove(path);
}

TEST(ParseParamsTest, Accepts) {
  const Instantiation p = ParseParams("r=1/2,a=3");
  EXPECT_EQ(p.a, Rational(3));
  EXPECT_EQ(p.r, Rational(1, 2));
}

TEST(ParseParamsTest, Rejects) {
  EXPECT_THROW(ParseParams("a=1,r=1"), std::invalid_argument);
  EXPECT_THROW(ParseParams("a=2"), std::invalid_argument);
  EXPECT_THROW(ParseParams("a=2,r=-1"), std::invalid_argument);
  EXPECT_THROW(ParseParams("a=2,b=1"), std::invalid_argument);
  EXPECT_THROW(ParseParams("a=2,a=3,r=1"), std::invalid_argument);
  EXPECT_THROW(ParseParams("a2,r=1"), std::invalid_argument);
  EXPECT_THROW(ParseParams("a=x,r=1"), std::invalid_argument);
}

TEST(PublishedTest, Candidates) {
  const auto ctx = surface::BuildAnchorRing();
  const auto trace = finitetype::Iterate(ctx.laplacian, ctx.gauss[2], 3);
  EXPECT_EQ(*PublishedIterate(1), trace.channel_value(1));
  EXPECT_NE(*PublishedIterate(2), trace.channel_value(2));
  EXPECT_FALSE(PublishedIterate(3).has_value());
  EXPECT_EQ(PublishedCandidate(2, trace), *PublishedIterate(2));
  // The printed second iterate has the product-formula leading coefficient.
  const auto tmpl2 = finitetype::LeadingTemplate(2);
  EXPECT_EQ(*finitetype::LeadingRatio(PublishedCandidate(2, trace), tmpl2), Rational(-3));
  const auto tmpl3 = finitetype::LeadingTemplate(3);
  EXPECT_EQ(*finitetype::LeadingRatio(PublishedCandidate(3, trace), tmpl3), Rational(-45));
  const TrigPoly diff = PublishedCandidate(3, trace) - trace.channel_value(3);
  EXPECT_EQ(diff, tmpl3.scaled(ParamRational(-36)));
}

}  // namespace
}  // namespace anchorcheck::cli
