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

#include "netcake/protocols.h"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "netcake/austin.h"
#include "netcake/cake.h"

namespace netcake {

namespace {

void CheckDensities(const RootedTree& tree,
                    std::span<const Density> densities) {
  if (densities.size() != static_cast<std::size_t>(tree.size())) {
    throw std::invalid_argument(
        "expected " + std::to_string(tree.size()) + " densities, got " +
        std::to_string(densities.size()));
  }
}

// Lets `d` pick m favourites among pool[available[...]], removes them from
// `available` and returns their pool indices in ascending order.
std::vector<std::size_t> TakeFavourites(const Density& d,
                                        const std::vector<Piece>& pool,
                                        std::vector<std::size_t>& available,
                                        std::size_t m) {
  std::vector<Piece> candidates;
  candidates.reserve(available.size());
  for (std::size_t i : available) candidates.push_back(pool[i]);

  std::vector<std::size_t> picked;
  for (std::size_t c : PickTop(d, candidates, m)) picked.push_back(available[c]);
  std::erase_if(available, [&picked](std::size_t i) {
    return std::binary_search(picked.begin(), picked.end(), i);
  });
  return picked;
}

class TreeRun {
 public:
  TreeRun(const RootedTree& tree, std::span<const Density> densities)
      : tree_(tree), densities_(densities) {
    out_.pieces.resize(static_cast<std::size_t>(tree.size()));
  }

  Allocation Run() {
    const Vertex root = tree_.root();
    const int n = tree_.size();
    auto parts = EqualSplit(densities_[root], Piece::Whole(), n, &out_.cuts,
                            root, "initial_split");
    out_.cuts.Charge(n - 1, "initial_split", root);
    Distribute(root, std::move(parts));
    return std::move(out_);
  }

 private:
  // `parts` are |T(v)| pieces to share out across T(v).
  void Distribute(Vertex v, std::vector<Piece> parts) {
    std::vector<std::size_t> available(parts.size());
    std::iota(available.begin(), available.end(), 0);

    const auto& children = tree_.children(v);
    std::vector<Piece> bundles;
    for (Vertex c : children) {
      auto picked = TakeFavourites(densities_[c], parts, available,
                                   static_cast<std::size_t>(tree_.subtree_size(c)));
      std::vector<Piece> mine;
      for (std::size_t i : picked) mine.push_back(parts[i]);
      bundles.push_back(UnionAll(mine));
    }
    if (available.size() != 1) {
      throw std::logic_error("tree protocol: parent left with " +
                             std::to_string(available.size()) + " parts");
    }
    out_.pieces[v] = parts[available.front()];

    for (std::size_t i = 0; i < children.size(); ++i) {
      Vertex c = children[i];
      int size = tree_.subtree_size(c);
      auto split = AustinCut(densities_[c], densities_[v], size, bundles[i],
                             &out_.cuts, c);
      out_.cuts.Charge(2 * static_cast<std::int64_t>(size), "austin", c);
      Distribute(c, std::move(split));
    }
  }

  const RootedTree& tree_;
  std::span<const Density> densities_;
  Allocation out_;
};

}  // namespace

std::vector<std::size_t> PickTop(const Density& d,
                                 std::span<const Piece> candidates,
                                 std::size_t m) {
  if (m > candidates.size()) {
    throw NotEnoughPieces("asked for " + std::to_string(m) + " of " +
                          std::to_string(candidates.size()) + " pieces");
  }
  std::vector<Rational> value;
  value.reserve(candidates.size());
  for (const Piece& p : candidates) value.push_back(Measure(d, p));

  std::vector<std::size_t> order(candidates.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&value](std::size_t a, std::size_t b) {
                     return value[b] < value[a];
                   });
  order.resize(m);
  std::sort(order.begin(), order.end());
  return order;
}

Allocation AllocationTree(const RootedTree& tree,
                          std::span<const Density> densities) {
  CheckDensities(tree, densities);
  return TreeRun(tree, densities).Run();
}

Allocation AlgDescendant(const RootedTree& tree,
                         std::span<const Density> densities,
                         const DescendantOptions& options) {
  CheckDensities(tree, densities);
  const auto n = static_cast<std::size_t>(tree.size());

  BigInt root_slices = FValue(tree, tree.root());
  if (root_slices > BigInt(static_cast<unsigned long>(options.max_slices))) {
    throw std::length_error("tree of height " + std::to_string(tree.height()) +
                            " needs " + ToDecimal(root_slices) +
                            " slices at the root; limit is " +
                            std::to_string(options.max_slices));
  }
  std::vector<std::size_t> slices(n);
  for (Vertex v = 0; v < tree.size(); ++v) {
    slices[v] = FValue(tree, v).get_ui();
  }

  Allocation out;
  out.pieces.resize(n);
  SliceLedger ledger;
  ledger.received.resize(n);
  ledger.kept.resize(n);

  for (Vertex u : tree.ByDepth()) {
    Piece holding;
    if (u == tree.root()) {
      holding = Piece::Whole();
    } else {
      std::vector<Piece> got;
      for (const SliceRecord& r : ledger.received[u]) got.push_back(r.piece);
      holding = UnionAll(got);
    }

    const int k = static_cast<int>(slices[u]);
    auto pool = EqualSplit(densities[u], holding, k, &out.cuts, u, "slice");
    out.cuts.Charge(k - 1, "slice", u);

    std::vector<std::size_t> available(pool.size());
    std::iota(available.begin(), available.end(), 0);
    for (Vertex w : tree.StrictDescendantsByDepth(u)) {
      std::size_t take = slices[w] / static_cast<std::size_t>(tree.depth(w));
      for (std::size_t i : TakeFavourites(densities[w], pool, available, take)) {
        ledger.received[w].push_back({u, pool[i]});
      }
    }
    for (std::size_t i : available) ledger.kept[u].push_back(pool[i]);
    out.pieces[u] = UnionAll(ledger.kept[u]);
  }
  out.ledger = std::move(ledger);
  return out;
}

}  // namespace netcake
