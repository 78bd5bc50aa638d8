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

#ifndef NETCAKE_PROTOCOLS_H_
#define NETCAKE_PROTOCOLS_H_

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "netcake/cut_log.h"
#include "netcake/density.h"
#include "netcake/graph.h"
#include "netcake/piece.h"

namespace netcake {

class NotEnoughPieces : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// One slice handed down during the descendant-graph protocol.
struct SliceRecord {
  Vertex from = -1;
  Piece piece;
  friend bool operator==(const SliceRecord&, const SliceRecord&) = default;
};

// Per-vertex slice accounting. received[v] lists every slice v took from an
// ancestor's split; kept[v] lists the slices of v's own split that nobody
// below took, which together form v's final bundle.
struct SliceLedger {
  std::vector<std::vector<SliceRecord>> received;
  std::vector<std::vector<Piece>> kept;
  friend bool operator==(const SliceLedger&, const SliceLedger&) = default;
};

struct Allocation {
  // pieces[v] is agent v's bundle, merged into canonical form.
  std::vector<Piece> pieces;
  CutLog cuts;
  // Present only for the descendant-graph protocol.
  std::optional<SliceLedger> ledger;
};

// The m candidates d values most, ties to the lower index. Returned in
// ascending index order. Throws NotEnoughPieces if m > candidates.size().
std::vector<std::size_t> PickTop(const Density& d,
                                 std::span<const Piece> candidates,
                                 std::size_t m);

// Envy-free on the tree: the root splits the cake into n equal parts by its
// own measure; recursively, each child (in child order) takes the |T(i)|
// parts it likes best, the parent keeps the last one, and each child's take
// is re-divided by a two-agent exact division between child and parent
// into the parts handed down the child's subtree.
//
// densities[v] is agent v's valuation.
Allocation AllocationTree(const RootedTree& tree,
                          std::span<const Density> densities);

struct DescendantOptions {
  // Refuse trees whose root would cut more slices than this.
  std::size_t max_slices = std::size_t{1} << 20;
};

// Proportional on the descendant closure. Vertices are processed by
// (depth, id). Each gathers every slice it has received (the root starts
// with the cake), splits the lot into FValue(v) equal slices by its own
// measure, and lets each strict descendant, by (depth, id), take its
// FValue(w) / depth(w) favourites. Every vertex ends with height()! slices.
//
// Throws std::length_error if FValue(root) exceeds options.max_slices.
Allocation AlgDescendant(const RootedTree& tree,
                         std::span<const Density> densities,
                         const DescendantOptions& options = {});

}  // namespace netcake

#endif  // NETCAKE_PROTOCOLS_H_
