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

#include "netcake/austin.h"

#include <gtest/gtest.h>

#include <random>

#include "test_util.h"

namespace netcake {
namespace {

using testing::D;
using testing::OracleMeasure;
using testing::OraclePartitions;
using testing::P;
using testing::R;

const Density kUniform = Density::Uniform();

void ExpectExactDivision(const Density& di, const Density& dj, int n,
                         const Piece& s, const std::vector<Piece>& parts) {
  ASSERT_EQ(parts.size(), static_cast<std::size_t>(n));
  ASSERT_TRUE(OraclePartitions(parts, s));
  Rational want_i = OracleMeasure(di, s) / Rational(n);
  Rational want_j = OracleMeasure(dj, s) / Rational(n);
  for (const Piece& p : parts) {
    ASSERT_EQ(OracleMeasure(di, p), want_i) << p;
    ASSERT_EQ(OracleMeasure(dj, p), want_j) << p;
  }
}

TEST(ExactFractionTest, IdenticalAgentsTakeLeftmostWindow) {
  EXPECT_EQ(ExactFraction(kUniform, kUniform, 2, Piece::Whole()),
            P({{"0", "1/2"}}));
}

TEST(ExactFractionTest, SlidingHalfWindow) {
  // Window [x, x + 1/2): agent j values it at 2(1/2 - x) = 1 - 2x, which
  // equals 1/2 at x = 1/4.
  Density left = D({"0", "1/2", "1"}, {"2", "0"});
  EXPECT_EQ(ExactFraction(kUniform, left, 2, Piece::Whole()),
            P({{"1/4", "3/4"}}));
}

TEST(ExactFractionTest, KOneIsWholePiece) {
  Piece s = P({{"0", "1/3"}, {"1/2", "2/3"}});
  EXPECT_EQ(ExactFraction(kUniform, D({"0", "1/2", "1"}, {"1", "4"}), 1, s), s);
}

TEST(ExactFractionTest, WindowSlidesAcrossGap) {
  // S = [0, 1/4) u [1/2, 3/4); j only values [0, 1/8) and [5/8, 3/4).
  Density j = D({"0", "1/8", "5/8", "3/4", "1"}, {"1", "0", "1", "0"});
  Piece s = P({{"0", "1/4"}, {"1/2", "3/4"}});
  Piece got = ExactFraction(kUniform, j, 2, s);
  EXPECT_EQ(OracleMeasure(kUniform, got), R("1/4"));
  EXPECT_EQ(OracleMeasure(j, got), R("1/8"));
}

TEST(ExactFractionTest, TilerPlateauUnderJudgeMass) {
  // i is worthless on [1/2, 1) where all of j's value lies. A window indexed
  // purely by i's mass would jump over j's mass; the walk must not.
  Density i = D({"0", "1/2", "1"}, {"1", "0"});
  Density j = D({"0", "1/2", "1"}, {"0", "1"});
  Piece got = ExactFraction(i, j, 2, Piece::Whole());
  EXPECT_EQ(OracleMeasure(i, got), R("1/4"));
  EXPECT_EQ(OracleMeasure(j, got), R("1/4"));
  // Leftmost along the slide: [1/4, 1/2) then j's half of [1/2, 1).
  EXPECT_EQ(got, P({{"1/4", "3/4"}}));
}

TEST(ExactFractionTest, DegenerateMasses) {
  Density zero = Density::Uniform(Rational(0));
  Density left = D({"0", "1/2", "1"}, {"2", "0"});
  // i worthless: cut by j.
  EXPECT_EQ(ExactFraction(zero, left, 4, Piece::Whole()), P({{"0", "1/8"}}));
  // j worthless: cut by i.
  EXPECT_EQ(ExactFraction(left, zero, 2, Piece::Whole()), P({{"0", "1/4"}}));
  // Both worthless: by length.
  EXPECT_EQ(ExactFraction(zero, zero, 4, P({{"1/2", "1"}})),
            P({{"1/2", "5/8"}}));
}

TEST(AustinCutTest, Examples) {
  auto quarters = AustinCut(kUniform, kUniform, 4, Piece::Whole());
  ASSERT_EQ(quarters.size(), 4u);
  EXPECT_EQ(quarters[0], P({{"0", "1/4"}}));
  EXPECT_EQ(quarters[1], P({{"1/4", "1/2"}}));
  EXPECT_EQ(quarters[2], P({{"1/2", "3/4"}}));
  EXPECT_EQ(quarters[3], P({{"3/4", "1"}}));

  Density left = D({"0", "1/2", "1"}, {"2", "0"});
  auto halves = AustinCut(kUniform, left, 2, Piece::Whole());
  ASSERT_EQ(halves.size(), 2u);
  EXPECT_EQ(halves[0], P({{"1/4", "3/4"}}));
  EXPECT_EQ(halves[1], P({{"0", "1/4"}, {"3/4", "1"}}));

  Piece s = P({{"1/8", "1/4"}});
  EXPECT_EQ(AustinCut(kUniform, left, 1, s), std::vector<Piece>{s});
}

TEST(AustinCutTest, LogsCutPoints) {
  CutLog log;
  Density left = D({"0", "1/2", "1"}, {"2", "0"});
  AustinCut(kUniform, left, 2, Piece::Whole(), &log, 7);
  ASSERT_EQ(log.points().size(), 2u);
  EXPECT_EQ(log.points()[0].position, R("1/4"));
  EXPECT_EQ(log.points()[1].position, R("3/4"));
  EXPECT_EQ(log.points()[0].agent, 7);
  EXPECT_TRUE(log.charges().empty());
}

TEST(AustinCutTest, DoubleEqualityOnRandomInputs) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> ndist(1, 6);
  for (int trial = 0; trial < 200; ++trial) {
    Density di = testing::RandomDensity(rng, 6);
    Density dj = testing::RandomDensity(rng, 6);
    Piece s = testing::RandomPiece(rng, 3);
    int n = ndist(rng);
    auto parts = AustinCut(di, dj, n, s);
    ExpectExactDivision(di, dj, n, s, parts);
    if (HasFatalFailure()) {
      FAIL() << "trial " << trial << " n=" << n << " s=" << s;
    }
  }
}

TEST(AustinCutTest, Deterministic) {
  std::mt19937_64 rng(99);
  Density di = testing::RandomDensity(rng, 6);
  Density dj = testing::RandomDensity(rng, 6);
  Piece s = testing::RandomPiece(rng, 3);
  EXPECT_EQ(AustinCut(di, dj, 5, s), AustinCut(di, dj, 5, s));
}

}  // namespace
}  // namespace netcake
