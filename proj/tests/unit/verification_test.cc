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

#include "extraconn/verification.h"

#include <cstdlib>

#include "extraconn/error.h"
#include "extraconn/graph_io.h"
#include "extraconn/serialization.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"

namespace extraconn {
namespace {

using ::testing::Contains;
using ::testing::Field;

TEST(VerificationTest, ListIsStableAndKnown) {
  auto list = ListTheorems();
  ASSERT_FALSE(list.empty());
  EXPECT_EQ(list.front().id, "obs4.1-k1");
  for (const auto& info : list) {
    EXPECT_TRUE(IsKnownTheorem(info.id)) << info.id;
    EXPECT_FALSE(info.summary.empty()) << info.id;
  }
  EXPECT_THAT(list, Contains(Field(&TheoremInfo::id, "thm4.3-k3-literal")));
}

TEST(VerificationTest, UnknownIdThrows) {
  EXPECT_FALSE(IsKnownTheorem("thm9.9"));
  try {
    VerifyTheorem("thm9.9");
    FAIL() << "expected an exception";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnknownTheorem);
  }
}

TEST(VerificationTest, Kappa2ClaimHoldsThroughSix) {
  auto report =
      VerifyTheorem("thm4.1-k2", InstanceSource::ConnectedGraphs(1, 6).WithG(1));
  EXPECT_TRUE(report.passed());
  EXPECT_GT(report.checked, 26000U);
}

TEST(VerificationTest, ReportIsIndependentOfThreadCount) {
  auto source = InstanceSource::ConnectedGraphs(1, 5);
  ::setenv("EXTRACONN_THREADS", "1", 1);
  std::string serial = ToJson(VerifyTheorem("prop3.1-bounds", source)).dump();
  ::setenv("EXTRACONN_THREADS", "3", 1);
  std::string parallel = ToJson(VerifyTheorem("prop3.1-bounds", source)).dump();
  ::unsetenv("EXTRACONN_THREADS");
  EXPECT_EQ(serial, parallel);
}

TEST(VerificationTest, LiteralKappa3ReadingYieldsCertificates) {
  Graph pair_case = ParseGraph6("F?LVW");
  auto report = VerifyTheorem(
      "thm4.3-k3-literal", InstanceSource::Graphs({pair_case}).WithG(1));
  ASSERT_EQ(report.failures.size(), 1U);
  const Certificate& cert = report.failures.front();
  EXPECT_EQ(cert.graph6, "F?LVW");
  EXPECT_EQ(cert.g, 1);
  EXPECT_EQ(cert.expected, ClaimValue(false));
  EXPECT_EQ(cert.got, ClaimValue(true));

  auto corrected = VerifyTheorem(
      "thm4.3-k3", InstanceSource::Graphs({pair_case}).WithG(1));
  EXPECT_TRUE(corrected.passed());
  EXPECT_EQ(corrected.checked, 1U);
}

TEST(VerificationTest, OutOfRangeInstancesAreExcluded) {
  // A 4-vertex graph has no g with 1 <= g <= (n - 5) / 2.
  auto report = VerifyTheorem(
      "thm4.3-k3", InstanceSource::Graphs({ParseGraph6("C~")}).WithG(1));
  EXPECT_EQ(report.checked, 0U);
  EXPECT_TRUE(report.passed());
}

TEST(VerificationTest, BuiltInTheoremsPass) {
  for (const char* id : {"thm2.1-join", "thm2.2-corona", "families",
                         "clique-pair-examples", "anti-monotone-pair"}) {
    auto report = VerifyTheorem(id);
    EXPECT_TRUE(report.passed()) << id;
    EXPECT_GT(report.checked, 0U) << id;
  }
}

TEST(VerificationTest, TreeTemplateOnTrees) {
  auto report =
      VerifyTheorem("lemma4.1-tstar", InstanceSource::LabeledTrees(2, 7));
  EXPECT_TRUE(report.passed());
  EXPECT_GT(report.checked, 0U);
}

TEST(ClaimValueTest, Strings) {
  EXPECT_EQ(ClaimValueToString(ClaimValue{}), "null");
  EXPECT_EQ(ClaimValueToString(ClaimValue{3}), "3");
  EXPECT_EQ(ClaimValueToString(ClaimValue{true}), "true");
}

}  // namespace
}  // namespace extraconn
