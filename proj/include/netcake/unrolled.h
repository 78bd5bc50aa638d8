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

#ifndef NETCAKE_UNROLLED_H_
#define NETCAKE_UNROLLED_H_

#include <initializer_list>
#include <string>
#include <vector>

#include "netcake/cut_log.h"
#include "netcake/density.h"
#include "netcake/piece.h"
#include "netcake/rational.h"

namespace netcake {

// A piece laid end to end: position s runs over [0, length()] with the gaps
// between the piece's intervals squeezed out. The line is split into cells
// on which every attached density is constant, so each cumulative mass is a
// continuous piecewise-linear function of s.
//
// Holds pointers to the densities; they must outlive this object.
class UnrolledPiece {
 public:
  UnrolledPiece(const Piece& piece, std::initializer_list<const Density*> ds);

  const Rational& length() const { return length_; }
  std::size_t cell_count() const { return cells_.size(); }
  const Rational& cell_start(std::size_t c) const { return cells_[c].start; }
  const Rational& cell_end(std::size_t c) const { return cells_[c].end; }
  // Density `k` on cell `c`.
  const Rational& rate(std::size_t c, std::size_t k) const {
    return cells_[c].rate[k];
  }

  // Index of the cell whose half-open span contains s. Requires
  // 0 <= s < length().
  std::size_t CellAt(const Rational& s) const;

  const Rational& Total(std::size_t k) const { return totals_[k]; }
  // Mass of density k on [0, s).
  Rational Mass(std::size_t k, const Rational& s) const;
  // Smallest s with Mass(k, s) == mass. Throws std::out_of_range if mass
  // is negative or exceeds Total(k).
  Rational LeftmostAt(std::size_t k, const Rational& mass) const;

  // The sub-piece of the original piece covered by [a, b).
  Piece Window(const Rational& a, const Rational& b) const;

  // Logs the cake coordinate of s if s falls strictly inside one of the
  // piece's intervals; positions on existing boundaries are not new cuts.
  void RecordCut(const Rational& s, CutLog* log, const std::string& step,
                 int agent) const;

 private:
  struct Span {
    Rational x_lo;
    Rational s_lo;
    Rational len;
  };
  struct Cell {
    Rational start;
    Rational end;
    std::vector<Rational> rate;
    std::vector<Rational> mass_before;
  };

  std::vector<Span> spans_;
  std::vector<Cell> cells_;
  std::vector<Rational> totals_;
  Rational length_;
};

}  // namespace netcake

#endif  // NETCAKE_UNROLLED_H_
