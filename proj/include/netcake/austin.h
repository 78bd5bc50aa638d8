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

// Two-agent exact division (Austin's moving knife).
//
// The moving-knife procedure is continuous in general. For piecewise-
// constant densities with rational data it reduces to a finite walk: a
// window holding exactly 1/k of agent i's value slides along the piece, and
// agent j's value of the window is a continuous piecewise-linear function
// of the slide whose kinks are all rational. The crossing with 1/k of
// agent j's value is therefore found exactly by visiting kinks in order.
// Nothing here claims exactness for other density classes.

#ifndef NETCAKE_AUSTIN_H_
#define NETCAKE_AUSTIN_H_

#include <vector>

#include "netcake/cut_log.h"
#include "netcake/density.h"
#include "netcake/piece.h"

namespace netcake {

// A sub-piece P of s, contiguous in s's own left-to-right order, with
// Measure(di, P) == Measure(di, s) / k and Measure(dj, P) ==
// Measure(dj, s) / k. The leftmost such window along the slide is chosen.
//
// If di values s at zero, the window is cut by dj alone; if both do, by
// length. k >= 1; k == 1 returns s.
Piece ExactFraction(const Density& di, const Density& dj, int k,
                    const Piece& s, CutLog* log = nullptr, int agent = -1);

// n pieces partitioning s, each worth exactly 1/n of s to BOTH di and dj.
// Pieces come in extraction order: ExactFraction with k = n, n - 1, ..., 2
// on the shrinking remainder, then the remainder itself.
std::vector<Piece> AustinCut(const Density& di, const Density& dj, int n,
                             const Piece& s, CutLog* log = nullptr,
                             int agent = -1);

}  // namespace netcake

#endif  // NETCAKE_AUSTIN_H_
