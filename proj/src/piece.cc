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

#include "netcake/piece.h"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace netcake {

Piece Piece::FromIntervals(std::vector<Interval> intervals) {
  for (const Interval& iv : intervals) {
    if (iv.hi < iv.lo) {
      throw std::invalid_argument("interval [" + iv.lo.ToString() + ", " +
                                  iv.hi.ToString() + ") has lo > hi");
    }
    if (iv.lo < Rational(0) || Rational(1) < iv.hi) {
      throw std::invalid_argument("interval [" + iv.lo.ToString() + ", " +
                                  iv.hi.ToString() + ") leaves the cake");
    }
  }
  std::erase_if(intervals, [](const Interval& iv) { return iv.lo == iv.hi; });
  std::sort(intervals.begin(), intervals.end(),
            [](const Interval& x, const Interval& y) { return x.lo < y.lo; });

  Piece out;
  for (Interval& iv : intervals) {
    if (!out.intervals_.empty() && iv.lo <= out.intervals_.back().hi) {
      Interval& last = out.intervals_.back();
      if (last.hi < iv.hi) last.hi = std::move(iv.hi);
    } else {
      out.intervals_.push_back(std::move(iv));
    }
  }
  return out;
}

Piece Piece::Whole() {
  Piece p;
  p.intervals_.push_back({Rational(0), Rational(1)});
  return p;
}

bool Piece::IsCanonical(std::span<const Interval> intervals) {
  for (std::size_t i = 0; i < intervals.size(); ++i) {
    const Interval& iv = intervals[i];
    if (!(iv.lo < iv.hi)) return false;
    if (iv.lo < Rational(0) || Rational(1) < iv.hi) return false;
    if (i > 0 && !(intervals[i - 1].hi < iv.lo)) return false;
  }
  return true;
}

Rational Piece::length() const {
  Rational total;
  for (const Interval& iv : intervals_) total += iv.length();
  return total;
}

std::ostream& operator<<(std::ostream& os, const Piece& p) {
  os << "{";
  for (std::size_t i = 0; i < p.intervals_.size(); ++i) {
    if (i > 0) os << " u ";
    os << "[" << p.intervals_[i].lo << ", " << p.intervals_[i].hi << ")";
  }
  return os << "}";
}

Piece Union(const Piece& a, const Piece& b) {
  std::vector<Interval> all = a.intervals();
  all.insert(all.end(), b.intervals().begin(), b.intervals().end());
  return Piece::FromIntervals(std::move(all));
}

Piece UnionAll(std::span<const Piece> pieces) {
  std::vector<Interval> all;
  for (const Piece& p : pieces) {
    all.insert(all.end(), p.intervals().begin(), p.intervals().end());
  }
  return Piece::FromIntervals(std::move(all));
}

Piece Intersect(const Piece& a, const Piece& b) {
  std::vector<Interval> out;
  const auto& x = a.intervals();
  const auto& y = b.intervals();
  std::size_t i = 0, j = 0;
  while (i < x.size() && j < y.size()) {
    const Rational& lo = Max(x[i].lo, y[j].lo);
    const Rational& hi = Min(x[i].hi, y[j].hi);
    if (lo < hi) out.push_back({lo, hi});
    if (x[i].hi < y[j].hi) {
      ++i;
    } else {
      ++j;
    }
  }
  return Piece::FromIntervals(std::move(out));
}

Piece Difference(const Piece& a, const Piece& b) {
  std::vector<Interval> out;
  const auto& y = b.intervals();
  std::size_t j = 0;
  for (const Interval& iv : a.intervals()) {
    Rational cursor = iv.lo;
    while (j < y.size() && y[j].hi <= cursor) ++j;
    std::size_t k = j;
    while (k < y.size() && y[k].lo < iv.hi) {
      if (cursor < y[k].lo) out.push_back({cursor, y[k].lo});
      if (cursor < y[k].hi) cursor = y[k].hi;
      if (iv.hi <= cursor) break;
      ++k;
    }
    if (cursor < iv.hi) out.push_back({cursor, iv.hi});
  }
  return Piece::FromIntervals(std::move(out));
}

}  // namespace netcake
