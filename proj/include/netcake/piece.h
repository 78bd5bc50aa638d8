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

#ifndef NETCAKE_PIECE_H_
#define NETCAKE_PIECE_H_

#include <ostream>
#include <span>
#include <vector>

#include "netcake/rational.h"

namespace netcake {

// Half-open [lo, hi) inside the cake [0, 1). Boundary conventions carry no
// value since valuations have no atoms.
struct Interval {
  Rational lo;
  Rational hi;

  Rational length() const { return hi - lo; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

// A finite union of disjoint intervals of the cake, stored canonically:
// sorted by lo, non-empty, and with touching neighbours coalesced, so
// while [0, 1/2) and [1/2, 1) are disjoint they are stored as [0, 1).
// Two pieces are equal as sets iff they compare equal.
class Piece {
 public:
  // The empty piece.
  Piece() = default;

  // Normalizes arbitrary (possibly overlapping, unsorted, empty) intervals.
  // Throws std::invalid_argument if an interval has lo > hi or leaves [0, 1].
  static Piece FromIntervals(std::vector<Interval> intervals);

  // [0, 1).
  static Piece Whole();

  // True iff the intervals already satisfy the canonical invariants.
  static bool IsCanonical(std::span<const Interval> intervals);

  const std::vector<Interval>& intervals() const { return intervals_; }
  bool empty() const { return intervals_.empty(); }
  std::size_t size() const { return intervals_.size(); }
  Rational length() const;

  friend bool operator==(const Piece&, const Piece&) = default;
  friend std::ostream& operator<<(std::ostream& os, const Piece& p);

 private:
  std::vector<Interval> intervals_;
};

Piece Union(const Piece& a, const Piece& b);
Piece Difference(const Piece& a, const Piece& b);
Piece Intersect(const Piece& a, const Piece& b);

// Union of any number of pieces.
Piece UnionAll(std::span<const Piece> pieces);

}  // namespace netcake

#endif  // NETCAKE_PIECE_H_
