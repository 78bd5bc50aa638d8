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

#ifndef NETCAKE_CAKE_H_
#define NETCAKE_CAKE_H_

#include <stdexcept>
#include <string>
#include <vector>

#include "netcake/cut_log.h"
#include "netcake/density.h"
#include "netcake/piece.h"
#include "netcake/rational.h"

namespace netcake {

class TargetExceedsMeasure : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Exact integral of d over s.
Rational Measure(const Density& d, const Piece& s);

struct PrefixSplit {
  Piece prefix;
  Piece rest;
};

// Splits s at the leftmost point where d's running mass reaches t.
// Throws TargetExceedsMeasure if t > Measure(d, s) (or t < 0).
PrefixSplit PrefixCut(const Density& d, const Piece& s, const Rational& t,
                      CutLog* log = nullptr, int agent = -1);

// k pieces of s, left to right, each worth exactly Measure(d, s) / k under
// d. When s is worthless to d the pieces have equal length instead.
std::vector<Piece> EqualSplit(const Density& d, const Piece& s, int k,
                              CutLog* log = nullptr, int agent = -1,
                              const std::string& step = "equal_split");

}  // namespace netcake

#endif  // NETCAKE_CAKE_H_
