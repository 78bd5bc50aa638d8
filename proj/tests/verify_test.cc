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

#include "netcake/verify.h"

#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "netcake/cake.h"
#include "netcake/instance.h"
#include "test_util.h"

namespace netcake {
namespace {

using testing::P;
using testing::R;

std::string Slurp(const std::string& name) {
  std::ifstream in(std::string(NETCAKE_FIXTURES) + "/" + name);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

FairnessGraph Edge() {
  FairnessGraph g(2);
  g.AddEdge(0, 1);
  return g;
}

FairnessGraph Complete(int n) {
  FairnessGraph g(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) g.AddEdge(u, v);
  }
  return g;
}

const std::vector<Density> kTwoUniform{Density::Uniform(), Density::Uniform()};

TEST(CheckPartitionTest, Examples) {
  EXPECT_TRUE(CheckPartition(std::vector<Piece>{Piece::Whole()}));
  EXPECT_FALSE(CheckPartition(std::vector<Piece>{P({{"0", "1/2"}}),
                                                 P({{"1/4", "1"}})}));
  EXPECT_FALSE(CheckPartition(std::vector<Piece>{P({{"0", "1/2"}}),
                                                 P({{"1/2", "3/4"}})}));
  EXPECT_TRUE(CheckPartition(std::vector<Piece>{
      P({{"0", "1/4"}, {"1/2", "1"}}), Piece(), P({{"1/4", "1/2"}})}));
  EXPECT_FALSE(CheckPartition(std::vector<Piece>{}));
}

TEST(CheckEnvyFreeTest, Examples) {
  std::vector<Piece> halves{P({{"0", "1/2"}}), P({{"1/2", "1"}})};
  EXPECT_TRUE(CheckEnvyFree(halves, Edge(), kTwoUniform).satisfied());

  std::vector<Piece> greedy{Piece::Whole(), Piece()};
  auto report = CheckEnvyFree(greedy, Edge(), kTwoUniform, "edge");
  ASSERT_EQ(report.violations.size(), 1u);
  EXPECT_EQ(report.violations[0].agent, 1);
  EXPECT_EQ(report.violations[0].neighbor, 0);
  EXPECT_EQ(report.violations[0].own, Rational(0));
  EXPECT_EQ(report.violations[0].compared, Rational(1));
  EXPECT_EQ(report.graph, "edge");
}

TEST(CheckProportionalTest, Examples) {
  std::vector<Piece> uneven{P({{"0", "1/4"}}), P({{"1/4", "1"}})};
  auto report = CheckProportional(uneven, Edge(), kTwoUniform);
  ASSERT_EQ(report.violations.size(), 1u);
  EXPECT_EQ(report.violations[0].agent, 0);
  EXPECT_FALSE(report.violations[0].neighbor.has_value());
  EXPECT_EQ(report.violations[0].own, R("1/4"));
  EXPECT_EQ(report.violations[0].compared, R("3/4"));

  // Isolated vertices pass.
  EXPECT_TRUE(CheckProportional(uneven, FairnessGraph(2), kTwoUniform).satisfied());
}

// On K_n, a partition where everyone gets at least 1/n of their total is
// proportional; checked through the neighbourhood-average definition.
TEST(CheckProportionalTest, ClassicalProportionalityOnCompleteGraph) {
  std::mt19937_64 rng(13);
  for (int n = 2; n <= 5; ++n) {
    std::vector<Density> ds;
    for (int i = 0; i < n; ++i) ds.push_back(Density::Uniform());
    auto parts = EqualSplit(Density::Uniform(), Piece::Whole(), n);
    EXPECT_TRUE(CheckProportional(parts, Complete(n), ds).satisfied());
  }
}

TEST(FairnessPropertiesTest, EnvyFreeSurvivesEdgeRemovalAndImpliesProportional) {
  std::mt19937_64 rng(71);
  std::bernoulli_distribution keep(0.5);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 5;
    std::vector<Density> ds;
    for (int i = 0; i < n; ++i) ds.push_back(testing::RandomDensity(rng, 4));
    auto parts = EqualSplit(Density::Uniform(), Piece::Whole(), n);
    std::shuffle(parts.begin(), parts.end(), rng);

    // The largest graph this allocation is envy-free on.
    FairnessGraph g(n);
    for (Vertex i = 0; i < n; ++i) {
      for (Vertex j = i + 1; j < n; ++j) {
        if (Measure(ds[i], parts[j]) <= Measure(ds[i], parts[i]) &&
            Measure(ds[j], parts[i]) <= Measure(ds[j], parts[j])) {
          g.AddEdge(i, j);
        }
      }
    }
    ASSERT_TRUE(CheckEnvyFree(parts, g, ds).satisfied());
    ASSERT_TRUE(CheckProportional(parts, g, ds).satisfied());

    FairnessGraph sub = g;
    for (const auto& [u, v] : g.Edges()) {
      if (!keep(rng)) sub.RemoveEdge(u, v);
    }
    ASSERT_TRUE(CheckEnvyFree(parts, sub, ds).satisfied());
  }
}

TEST(FairnessPropertiesTest, ProportionalityCanBreakOnASubgraph) {
  Instance full = ParseInstance(Slurp("nonmonotone_instance.json"));
  Instance sub = ParseInstance(Slurp("nonmonotone_subgraph_instance.json"));
  AllocationRecord alloc = ParseAllocation(Slurp("nonmonotone_allocation.json"));
  FairnessGraph g = FairnessGraph::FromEdges(full.size(), *full.graph);
  FairnessGraph h = FairnessGraph::FromEdges(sub.size(), *sub.graph);
  ASSERT_TRUE(h.IsSubgraphOf(g));
  ASSERT_LT(h.edge_count(), g.edge_count());
  ASSERT_EQ(full.densities, sub.densities);
  ASSERT_TRUE(CheckPartition(alloc.pieces));

  EXPECT_TRUE(CheckProportional(alloc.pieces, g, full.densities).satisfied());
  auto report = CheckProportional(alloc.pieces, h, full.densities);
  ASSERT_EQ(report.violations.size(), 1u);
  EXPECT_EQ(report.violations[0].agent, 1);
  EXPECT_EQ(report.violations[0].own, R("2/5"));
  EXPECT_EQ(report.violations[0].compared, R("1/2"));
}

TEST(CutCountTest, ReadsBothConventions) {
  Allocation a;
  a.cuts.Record(R("1/2"), "x", 0);
  a.cuts.Record(R("1/2"), "y", 1);
  a.cuts.Record(R("1/3"), "y", 1);
  a.cuts.Charge(4, "x", 0);
  a.cuts.Charge(2, "y", 1);
  EXPECT_EQ(CutCount(a, CutConvention::kPaper), 6);
  EXPECT_EQ(CutCount(a, CutConvention::kTrue), 2);
}

}  // namespace
}  // namespace netcake
