// Copyright 2026 The netcake Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "netcake/graph.h"

#include <gtest/gtest.h>

#include <random>

#include "test_util.h"

namespace netcake {
namespace {

using Parents = std::vector<std::optional<Vertex>>;
constexpr std::nullopt_t kRoot = std::nullopt;

RootedTree Path3() { return RootedTree::FromParents(Parents{kRoot, 0, 1}); }

TEST(RootedTreeTest, FromParentsExamples) {
  RootedTree single = RootedTree::FromParents(Parents{kRoot});
  EXPECT_EQ(single.size(), 1);
  EXPECT_EQ(single.height(), 0);

  RootedTree star = RootedTree::FromParents(Parents{kRoot, 0, 0});
  EXPECT_EQ(star.children(0), (std::vector<Vertex>{1, 2}));
  EXPECT_EQ(star.height(), 1);

  RootedTree branch = RootedTree::FromParents(Parents{kRoot, 0, 1, 1});
  EXPECT_EQ(branch.depth(0), 0);
  EXPECT_EQ(branch.depth(1), 1);
  EXPECT_EQ(branch.depth(2), 2);
  EXPECT_EQ(branch.depth(3), 2);
  EXPECT_EQ(branch.subtree_size(1), 3);
  EXPECT_TRUE(branch.IsStrictAncestor(0, 3));
  EXPECT_FALSE(branch.IsStrictAncestor(2, 3));
  EXPECT_EQ(branch.StrictDescendantsByDepth(0), (std::vector<Vertex>{1, 2, 3}));
}

TEST(RootedTreeTest, RootNeedNotBeVertexZero) {
  RootedTree t = RootedTree::FromParents(Parents{2, 2, kRoot});
  EXPECT_EQ(t.root(), 2);
  EXPECT_EQ(t.children(2), (std::vector<Vertex>{0, 1}));
  EXPECT_EQ(t.ByDepth(), (std::vector<Vertex>{2, 0, 1}));
}

TEST(RootedTreeTest, MalformedInputs) {
  EXPECT_THROW(RootedTree::FromParents(Parents{}), MalformedTree);
  EXPECT_THROW(RootedTree::FromParents(Parents{kRoot, kRoot}), MalformedTree);
  EXPECT_THROW(RootedTree::FromParents(Parents{1, 0}), MalformedTree);
  EXPECT_THROW(RootedTree::FromParents(Parents{kRoot, 2, 1}), MalformedTree);
  EXPECT_THROW(RootedTree::FromParents(Parents{kRoot, 5}), MalformedTree);
  EXPECT_THROW(RootedTree::FromParents(Parents{kRoot, 1}), MalformedTree);
}

TEST(RootedTreeTest, SubtreeSizesAreConsistent) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    RootedTree t = RootedTree::FromParents(testing::RandomParents(rng, 30));
    for (Vertex v = 0; v < t.size(); ++v) {
      int below = 0;
      for (Vertex c : t.children(v)) below += t.subtree_size(c);
      ASSERT_EQ(below, t.subtree_size(v) - 1);
      if (t.parent(v)) ASSERT_EQ(t.depth(v), t.depth(*t.parent(v)) + 1);
    }
  }
}

TEST(DescendantClosureTest, Examples) {
  FairnessGraph tri = DescendantClosure(Path3());
  EXPECT_EQ(tri.Edges(),
            (std::vector<std::pair<Vertex, Vertex>>{{0, 1}, {0, 2}, {1, 2}}));

  RootedTree star = RootedTree::FromParents(Parents{kRoot, 0, 0, 0});
  EXPECT_EQ(DescendantClosure(star), TreeGraph(star));

  EXPECT_EQ(DescendantClosure(RootedTree::FromParents(Parents{kRoot})).edge_count(),
            0u);
}

TEST(DescendantClosureTest, PathClosesToCompleteGraph) {
  for (int n = 1; n <= 8; ++n) {
    Parents p{kRoot};
    for (int v = 1; v < n; ++v) p.push_back(v - 1);
    FairnessGraph g = DescendantClosure(RootedTree::FromParents(p));
    EXPECT_EQ(g.edge_count(), static_cast<std::size_t>(n * (n - 1) / 2));
  }
}

TEST(DescendantClosureTest, EdgesAreExactlyAncestorPairs) {
  std::mt19937_64 rng(8);
  RootedTree t = RootedTree::FromParents(testing::RandomParents(rng, 25));
  FairnessGraph g = DescendantClosure(t);
  for (Vertex u = 0; u < t.size(); ++u) {
    for (Vertex v = 0; v < t.size(); ++v) {
      ASSERT_EQ(g.HasEdge(u, v),
                t.IsStrictAncestor(u, v) || t.IsStrictAncestor(v, u));
    }
  }
  EXPECT_TRUE(TreeGraph(t).IsSubgraphOf(g));
}

TEST(FairnessGraphTest, RejectsBadEdges) {
  FairnessGraph g(3);
  EXPECT_THROW(g.AddEdge(1, 1), std::invalid_argument);
  EXPECT_THROW(g.AddEdge(0, 3), std::invalid_argument);
  g.AddEdge(0, 1);
  g.AddEdge(1, 0);
  EXPECT_EQ(g.edge_count(), 1u);
  g.RemoveEdge(0, 1);
  EXPECT_EQ(g.edge_count(), 0u);
}

TEST(FValueTest, Examples) {
  RootedTree path = Path3();
  EXPECT_EQ(FValue(path, 0), 6);
  EXPECT_EQ(FValue(path, 1), 3);
  EXPECT_EQ(FValue(path, 2), 2);

  RootedTree single = RootedTree::FromParents(Parents{kRoot});
  EXPECT_EQ(FValue(single, 0), 1);

  RootedTree star = RootedTree::FromParents(Parents{kRoot, 0, 0});
  EXPECT_EQ(FValue(star, 0), 3);
  EXPECT_EQ(FValue(star, 1), 1);
}

// Oracle: the recursive identity f(v) = d! + sum over strict descendants u
// of f(u) / d(u), checked with exact rationals so a non-divisible term
// cannot hide.
TEST(FValueTest, RecursiveIdentityAndDivisibility) {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> ndist(1, 50);
  for (int trial = 0; trial < 100; ++trial) {
    RootedTree t = RootedTree::FromParents(testing::RandomParents(rng, ndist(rng)));
    BigInt d_fact = Factorial(t.height());
    ASSERT_EQ(FValue(t, t.root()), BigInt(t.size()) * d_fact);
    for (Vertex v = 0; v < t.size(); ++v) {
      BigInt f = FValue(t, v);
      if (t.depth(v) >= 1) ASSERT_EQ(f % t.depth(v), 0);
      if (t.IsLeaf(v)) ASSERT_EQ(f, d_fact);
      Rational sum(d_fact);
      for (Vertex u : t.StrictDescendantsByDepth(v)) {
        sum += Rational(FValue(t, u)) / Rational(t.depth(u));
      }
      ASSERT_EQ(sum, Rational(f)) << "vertex " << v;
    }
  }
}

}  // namespace
}  // namespace netcake
