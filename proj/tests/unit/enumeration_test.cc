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

#include "extraconn/enumeration.h"

#include <set>
#include <vector>

#include "extraconn/error.h"
#include "extraconn/families.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"

namespace extraconn {
namespace {

std::size_t Count(int n, bool connected, bool dedupe) {
  EnumerationOptions options;
  options.connected_only = connected;
  options.dedupe = dedupe;
  std::size_t count = 0;
  ForEachGraph(n, options, [&](const Graph&) { ++count; });
  return count;
}

// OEIS A001187 (labeled connected), A000088 (unlabeled), A001349
// (unlabeled connected).
TEST(EnumerationTest, KnownCounts) {
  const std::vector<std::size_t> labeled_connected = {1, 1, 4, 38, 728, 26704};
  const std::vector<std::size_t> unlabeled = {1, 2, 4, 11, 34, 156, 1044};
  const std::vector<std::size_t> unlabeled_connected = {1, 1, 2, 6, 21, 112,
                                                        853};
  for (int n = 1; n <= 6; ++n) {
    EXPECT_EQ(Count(n, true, false), labeled_connected[n - 1]) << n;
    EXPECT_EQ(Count(n, false, false), std::size_t{1} << (n * (n - 1) / 2));
  }
  for (int n = 1; n <= 7; ++n) {
    EXPECT_EQ(Count(n, false, true), unlabeled[n - 1]) << n;
    EXPECT_EQ(Count(n, true, true), unlabeled_connected[n - 1]) << n;
  }
}

TEST(EnumerationTest, GuardsOrder) {
  EXPECT_THROW(Count(8, true, false), Error);
  EXPECT_THROW(Count(0, true, false), Error);
}

TEST(EnumerationTest, MaskShardsPartitionTheStream) {
  EnumerationOptions all;
  all.connected_only = false;
  std::vector<Graph> whole;
  ForEachGraph(5, all, [&](const Graph& g) { whole.push_back(g); });
  std::vector<Graph> sharded;
  for (std::uint64_t lo = 0; lo < 1024; lo += 300) {
    EnumerationOptions shard = all;
    shard.mask_begin = lo;
    shard.mask_end = lo + 300;
    ForEachGraph(5, shard, [&](const Graph& g) { sharded.push_back(g); });
  }
  EXPECT_EQ(whole, sharded);
}

TEST(EdgeMaskTest, RoundTrip) {
  Graph w = WheelGraph(6);
  EXPECT_EQ(GraphFromEdgeMask(6, EdgeMask(w)), w);
  EXPECT_EQ(EdgeMask(CompleteGraph(3)), 0b111u);
}

TEST(PruferTest, DecodesKnownSequences) {
  std::vector<int> star = {0, 0, 0};
  Graph s = DecodePrufer(5, star);
  EXPECT_EQ(s.Degree(0), 4);
  std::vector<int> path = {1, 2, 3};
  Graph p = DecodePrufer(5, path);
  EXPECT_TRUE(p.HasEdge(0, 1));
  EXPECT_TRUE(p.HasEdge(3, 4));
  EXPECT_EQ(p.MaxDegree(), 2);
  std::vector<int> wrong = {1};
  EXPECT_THROW(DecodePrufer(5, wrong), Error);
  std::vector<int> outside = {0, 9, 0};
  EXPECT_THROW(DecodePrufer(5, outside), Error);
}

TEST(PruferTest, CayleyCountsAndDistinctTrees) {
  for (int n = 2; n <= 7; ++n) {
    std::set<std::uint64_t> masks;
    std::size_t count = 0;
    ForEachLabeledTree(n, [&](const Graph& t) {
      EXPECT_TRUE(IsTree(t));
      masks.insert(EdgeMask(t));
      ++count;
    });
    std::size_t cayley = 1;
    for (int i = 0; i < n - 2; ++i) cayley *= n;
    EXPECT_EQ(count, cayley) << n;
    EXPECT_EQ(masks.size(), cayley) << n;
  }
}

TEST(CanonicalTest, IsomorphismInvariant) {
  Graph p = PathGraph(5);
  GraphBuilder relabeled(5);
  relabeled.AddEdge(3, 0).AddEdge(0, 4).AddEdge(4, 1).AddEdge(1, 2);
  EXPECT_TRUE(AreIsomorphic(p, relabeled.Build()));
  EXPECT_EQ(CanonicalForm(p), CanonicalForm(relabeled.Build()));
  EXPECT_FALSE(AreIsomorphic(p, StarGraph(4)));
  GraphBuilder triangles(6);
  triangles.AddGraph(CycleGraph(3), 0).AddGraph(CycleGraph(3), 3);
  EXPECT_FALSE(AreIsomorphic(CycleGraph(6), triangles.Build()));
}

}  // namespace
}  // namespace extraconn
