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

#include "netcake/rational.h"

#include <gtest/gtest.h>

#include <stdexcept>

namespace netcake {
namespace {

TEST(RationalTest, StoredInLowestTerms) {
  Rational r(6, -8);
  EXPECT_EQ(r.ToString(), "-3/4");
  EXPECT_EQ(Rational(0).ToString(), "0/1");
  EXPECT_EQ(Rational::Parse("10/4").ToString(), "5/2");
  EXPECT_EQ(Rational::Parse("7").ToString(), "7/1");
}

TEST(RationalTest, ArithmeticIsExact) {
  Rational third(1, 3);
  EXPECT_EQ(third + third + third, Rational(1));
  EXPECT_EQ(Rational(1, 6) - Rational(1, 2), Rational(-1, 3));
  EXPECT_EQ(Rational(2, 3) * Rational(9, 4), Rational(3, 2));
  EXPECT_EQ(Rational(2, 3) / Rational(4, 9), Rational(3, 2));
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_EQ(-Rational(1, 2), Rational(-1, 2));
}

TEST(RationalTest, LargeValuesStayExact) {
  Rational tiny(1);
  for (int i = 0; i < 200; ++i) tiny /= Rational(3);
  Rational back = tiny;
  for (int i = 0; i < 200; ++i) back *= Rational(3);
  EXPECT_EQ(back, Rational(1));
  EXPECT_GT(tiny, Rational(0));
}

TEST(RationalTest, ParseRejectsGarbage) {
  for (const char* bad : {"", "/", "1/", "/2", "1/0", "1/-2", "a/b", "1.5",
                          "1//2", " 1/2"}) {
    EXPECT_THROW(Rational::Parse(bad), std::invalid_argument) << bad;
  }
  EXPECT_EQ(Rational::Parse("-1/2"), Rational(-1, 2));
}

TEST(RationalTest, DivisionByZeroThrows) {
  EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
}

TEST(RationalTest, Factorial) {
  EXPECT_EQ(Factorial(0), 1);
  EXPECT_EQ(Factorial(4), 24);
  EXPECT_EQ(ToDecimal(Factorial(25)), "15511210043330985984000000");
}

}  // namespace
}  // namespace netcake
