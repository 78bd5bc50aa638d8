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

#include "netcake/unrolled.h"

#include <algorithm>
#include <stdexcept>

namespace netcake {

namespace {

// Value of d on the segment that contains x (x < 1).
const Rational& RateAt(const Density& d, const Rational& x) {
  const auto& bp = d.breakpoints();
  auto it = std::upper_bound(bp.begin(), bp.end(), x);
  return d.values()[static_cast<std::size_t>(it - bp.begin()) - 1];
}

}  // namespace

UnrolledPiece::UnrolledPiece(const Piece& piece,
                             std::initializer_list<const Density*> ds)
    : totals_(ds.size()) {
  for (const Interval& iv : piece.intervals()) {
    spans_.push_back({iv.lo, length_, iv.length()});

    std::vector<Rational> cuts{iv.lo, iv.hi};
    for (const Density* d : ds) {
      for (const Rational& b : d->breakpoints()) {
        if (iv.lo < b && b < iv.hi) cuts.push_back(b);
      }
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
      Cell cell;
      cell.start = length_ + (cuts[i] - iv.lo);
      cell.end = length_ + (cuts[i + 1] - iv.lo);
      Rational width = cuts[i + 1] - cuts[i];
      std::size_t k = 0;
      for (const Density* d : ds) {
        cell.rate.push_back(RateAt(*d, cuts[i]));
        cell.mass_before.push_back(totals_[k]);
        totals_[k] += cell.rate.back() * width;
        ++k;
      }
      cells_.push_back(std::move(cell));
    }
    length_ += iv.length();
  }
}

std::size_t UnrolledPiece::CellAt(const Rational& s) const {
  auto it = std::upper_bound(
      cells_.begin(), cells_.end(), s,
      [](const Rational& v, const Cell& c) { return v < c.start; });
  if (it == cells_.begin()) throw std::out_of_range("CellAt: s < 0");
  return static_cast<std::size_t>(it - cells_.begin()) - 1;
}

Rational UnrolledPiece::Mass(std::size_t k, const Rational& s) const {
  if (s.sign() <= 0 || cells_.empty()) return Rational(0);
  if (length_ <= s) return totals_[k];
  const Cell& c = cells_[CellAt(s)];
  return c.mass_before[k] + c.rate[k] * (s - c.start);
}

Rational UnrolledPiece::LeftmostAt(std::size_t k,
                                   const Rational& mass) const {
  if (mass.sign() < 0 || totals_[k] < mass) {
    throw std::out_of_range("target mass " + mass.ToString() +
                            " outside [0, " + totals_[k].ToString() + "]");
  }
  if (mass.is_zero()) return Rational(0);
  for (const Cell& c : cells_) {
    Rational after = c.mass_before[k] + c.rate[k] * (c.end - c.start);
    if (mass <= after) {
      // mass > mass_before here, so the rate is positive.
      return c.start + (mass - c.mass_before[k]) / c.rate[k];
    }
  }
  throw std::logic_error("LeftmostAt: mass not reached");
}

Piece UnrolledPiece::Window(const Rational& a, const Rational& b) const {
  std::vector<Interval> out;
  for (const Span& sp : spans_) {
    Rational s_hi = sp.s_lo + sp.len;
    const Rational& lo = Max(a, sp.s_lo);
    const Rational& hi = Min(b, s_hi);
    if (lo < hi) {
      out.push_back({sp.x_lo + (lo - sp.s_lo), sp.x_lo + (hi - sp.s_lo)});
    }
  }
  return Piece::FromIntervals(std::move(out));
}

void UnrolledPiece::RecordCut(const Rational& s, CutLog* log,
                              const std::string& step, int agent) const {
  if (log == nullptr) return;
  for (const Span& sp : spans_) {
    if (sp.s_lo < s && s < sp.s_lo + sp.len) {
      log->Record(sp.x_lo + (s - sp.s_lo), step, agent);
      return;
    }
  }
}

}  // namespace netcake
