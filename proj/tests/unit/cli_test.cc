// Copyright 2026 The extraconn Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <sstream>

#include "extraconn/serialization.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"

namespace extraconn::cli {
namespace {

using ::testing::HasSubstr;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome Invoke(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  int code = Run(args, in, out, err);
  return {code, out.str(), err.str()};
}

TEST(CliTest, KappaJsonUndefined) {
  auto r = Invoke({"kappa", "--g", "1", "--g6", "D?{", "--json"});
  EXPECT_EQ(r.code, kExitOk);
  Json j = Json::parse(r.out);
  EXPECT_TRUE(j["kappa_g"].is_null());
  EXPECT_EQ(j["defined"], false);
}

TEST(CliTest, KappaWitness) {
  auto r = Invoke({"kappa", "--g", "0", "--g6", "D?{", "--witness"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_THAT(r.out, HasSubstr("kappa_g=1"));
  EXPECT_THAT(r.out, HasSubstr("{4}"));
}

TEST(CliTest, FamilyPipesIntoKappa) {
  auto fam = Invoke({"family", "wheel", "--n", "7"});
  ASSERT_EQ(fam.code, kExitOk);
  auto r = Invoke({"kappa", "--g", "1", "--stdin", "--json"}, fam.out);
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(Json::parse(r.out)["kappa_g"], 3);
}

TEST(CliTest, VerifyPassesWithJson) {
  auto r = Invoke({"verify", "thm4.1-k2", "--n", "6", "--g", "1", "--json"});
  EXPECT_EQ(r.code, kExitOk);
  Json j = Json::parse(r.out);
  EXPECT_EQ(j["passed"], true);
  EXPECT_TRUE(j["failures"].empty());
}

TEST(CliTest, VerifyFailureExitsOne) {
  auto r = Invoke({"verify", "thm4.3-k3-literal", "--n", "7", "--min-n", "7",
                   "--g", "1", "--dedupe", "--json"});
  EXPECT_EQ(r.code, kExitVerificationFailed);
  EXPECT_FALSE(Json::parse(r.out)["failures"].empty());
}

TEST(CliTest, VerifyList) {
  auto r = Invoke({"verify", "--list"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_THAT(r.out, HasSubstr("thm4.1-k2"));
}

TEST(CliTest, UsageErrorsExitTwo) {
  EXPECT_EQ(Invoke({"kappa", "--g", "1", "--bogus"}).code, kExitUsage);
  EXPECT_EQ(Invoke({"kappa", "--g", "1", "--g6", "D?{", "--stdin"}).code,
            kExitUsage);
  EXPECT_EQ(Invoke({}).code, kExitUsage);
  EXPECT_EQ(Invoke({"verify", "nope"}).code, kExitUsage);
  EXPECT_EQ(Invoke({"extremal", "h", "--n", "5", "--g", "1", "--k", "1"}).code,
            kExitUsage);
}

TEST(CliTest, LibraryErrorsNameTheirCode) {
  auto r = Invoke({"kappa", "--g", "1", "--g6", "D?{ "});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_THAT(r.err, HasSubstr("ParseError"));
  EXPECT_THAT(r.err, HasSubstr("byte 3"));
}

TEST(CliTest, HelpExitsZero) {
  EXPECT_EQ(Invoke({"--help"}).code, kExitOk);
}

TEST(CliTest, OutputIsByteIdenticalAcrossRuns) {
  std::vector<std::string> args = {"extremal", "s", "--n", "6",
                                   "--g", "1", "--k", "2", "--json"};
  auto first = Invoke(args);
  auto second = Invoke(args);
  EXPECT_EQ(first.code, kExitOk);
  EXPECT_EQ(first.out, second.out);
}

TEST(CliTest, EnumerateCountsUnlabeledConnected) {
  auto r = Invoke({"enumerate", "--n", "5", "--connected", "--dedupe"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 21);
}

}  // namespace
}  // namespace extraconn::cli
