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

#include "extraconn/families.h"

#include <vector>

#include "extraconn/error.h"
#include "extraconn/extra_connectivity.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"

namespace extraconn {
namespace {

using ::testing::Optional;

ErrorCode CodeOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kUnknownTheorem;
}

TEST(BasicFamiliesTest, Sizes) {
  EXPECT_EQ(CompleteGraph(6).size(), 15);
  EXPECT_EQ(EmptyGraph(4).size(), 0);
  EXPECT_EQ(PathGraph(6).size(), 5);
  EXPECT_EQ(CycleGraph(6).size(), 6);
  EXPECT_EQ(StarGraph(4).order(), 5);
  EXPECT_EQ(WheelGraph(7).size(), 12);
  EXPECT_EQ(WheelGraph(7).Degree(0), 6);
  EXPECT_EQ(CompleteMultipartiteGraph({2, 2, 3}).size(), 16);
}

TEST(BasicFamiliesTest, MultipartiteLayoutSortsParts) {
  Graph g = CompleteMultipartiteGraph({3, 1});
  // Part {0} then part {1, 2, 3}.
  EXPECT_EQ(g.Degree(0), 3);
  EXPECT_FALSE(g.HasEdge(1, 2));
  EXPECT_EQ(Build(CompleteBipartiteSpec{3, 1}), g);
}

TEST(BasicFamiliesTest, InvalidParameters) {
  EXPECT_EQ(CodeOf([] { CycleGraph(2); }), ErrorCode::kInvalidSpec);
  EXPECT_EQ(CodeOf([] { WheelGraph(3); }), ErrorCode::kInvalidSpec);
  EXPECT_EQ(CodeOf([] { Build(KnMinusMatchingSpec{5, 3}); }),
            ErrorCode::kInvalidSpec);
  EXPECT_EQ(CodeOf([] { Build(HkSpec{9, 1, 1}); }), ErrorCode::kInvalidSpec);
  EXPECT_EQ(CodeOf([] { Build(HkSpec{6, 2, 2}); }), ErrorCode::kInvalidSpec);
  EXPECT_EQ(CodeOf([] { Build(CliquePairExampleSpec{6, 10}); }),
            ErrorCode::kInvalidSpec);
  EXPECT_EQ(CodeOf([] { Build(TPrimeSpec{8, 1, 2, 2, 1}); }),
            ErrorCode::kInvalidSpec);
}

TEST(ProductsTest, JoinAndCorona) {
  Graph j = Join(PathGraph(3), CycleGraph(4));
  EXPECT_EQ(j.order(), 7);
  EXPECT_EQ(j.size(), 2 + 4 + 12);
  Graph c = Corona(PathGraph(3), CompleteGraph(2));
  EXPECT_EQ(c.order(), 9);
  EXPECT_EQ(c.size(), 2 + 3 * (1 + 2));
  // The copy hosted by base vertex 1 occupies 5 and 6.
  EXPECT_TRUE(c.HasEdge(1, 5));
  EXPECT_TRUE(c.HasEdge(1, 6));
  EXPECT_TRUE(c.HasEdge(5, 6));
  EXPECT_FALSE(c.HasEdge(0, 5));
}

TEST(TStarTest, LayoutAndSizes) {
  std::vector<Graph> small = {PathGraph(1), PathGraph(1)};
  Graph t = TStar(7, 1, small);
  EXPECT_TRUE(IsTree(t));
  EXPECT_EQ(t.Degree(0), 4);
  EXPECT_EQ(t.order(), 7);
  EXPECT_EQ(CodeOf([&] { TStar(8, 1, small); }), ErrorCode::kInvalidSpec);
  std::vector<Graph> too_big = {PathGraph(2)};
  EXPECT_EQ(CodeOf([&] { TStar(7, 1, too_big); }), ErrorCode::kInvalidSpec);
}

TEST(TStarTest, DefaultSubtrees) {
  auto subtrees = DefaultTStarSubtrees(12, 2);
  int total = 0;
  for (const auto& t : subtrees) {
    EXPECT_LE(t.order(), 2);
    total += t.order();
  }
  EXPECT_EQ(total, 12 - 4 - 3);
  EXPECT_TRUE(DefaultTStarSubtrees(5, 1).empty());
}

TEST(TPrimeTest, FindsValidSplit) {
  auto spec = FindTPrime(7, 1, 2);
  ASSERT_TRUE(spec.has_value());
  Graph t = TPrime(*spec);
  EXPECT_TRUE(IsTree(t));
  EXPECT_EQ(t.order(), 7);
  EXPECT_THAT(ExtraConnectivity(t, 1).value, Optional(2));
  // (n - k - 1) mod (g + 1) = g leaves no valid x.
  EXPECT_FALSE(FindTPrime(8, 1, 2).has_value());
}

TEST(HkFkTest, EdgeCounts) {
  // C(n,2) - (n-k-g)(g+1) edges.
  EXPECT_EQ(Build(HkSpec{7, 1, 2}).size(), 21 - 4 * 2);
  // C(n,2) - (g+1)^2 edges.
  EXPECT_EQ(Build(FkSpec{7, 1}).size(), 17);
}

TEST(CliquePairTest, ConnectedWithStatedConnectivity) {
  struct Case {
    int index;
    int n;
    int kappa;
  };
  for (Case c : {Case{1, 10, 2}, Case{2, 10, 1}, Case{3, 11, 3},
                 Case{4, 11, 2}, Case{5, 11, 1}}) {
    Graph g = Build(CliquePairExampleSpec{c.index, c.n});
    ASSERT_EQ(g.order(), c.n);
    EXPECT_TRUE(IsConnected(g)) << c.index;
    EXPECT_EQ(VertexConnectivity(g), c.kappa) << c.index;
  }
}

TEST(AntiMonotonePairTest, SparseIsSpanning) {
  auto [dense, sparse] = BuildAntiMonotonePair({2, 0});
  EXPECT_EQ(dense.order(), 3 + 4 * 3);
  EXPECT_TRUE(sparse.IsSpanningSubgraphOf(dense));
  EXPECT_LT(sparse.size(), dense.size());
  EXPECT_TRUE(IsConnected(sparse));
}

TEST(ConstructionNameTest, Names) {
  EXPECT_EQ(ConstructionName(WheelSpec{7}), "wheel");
  EXPECT_EQ(ConstructionName(HkSpec{}), "hk");
}

}  // namespace
}  // namespace extraconn
