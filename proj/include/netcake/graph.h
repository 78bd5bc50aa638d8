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

#ifndef NETCAKE_GRAPH_H_
#define NETCAKE_GRAPH_H_

#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "netcake/rational.h"

namespace netcake {

// Vertices are 0..n-1; vertex v is agent v.
using Vertex = int;

class MalformedTree : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class RootedTree {
 public:
  // parents[v] is v's parent, or nullopt for the (single) root. Children
  // are ordered by vertex id, i.e. by first appearance in the list. Throws
  // MalformedTree on an empty list, zero or several roots, an out-of-range
  // parent, or a cycle.
  static RootedTree FromParents(std::span<const std::optional<Vertex>> parents);

  int size() const { return static_cast<int>(parent_.size()); }
  Vertex root() const { return root_; }
  const std::optional<Vertex>& parent(Vertex v) const { return parent_[v]; }
  const std::vector<Vertex>& children(Vertex v) const { return children_[v]; }
  // Edges from v up to the root; the root has depth 0.
  int depth(Vertex v) const { return depth_[v]; }
  // |T(v)|, counting v.
  int subtree_size(Vertex v) const { return subtree_size_[v]; }
  // Largest depth over all vertices.
  int height() const { return height_; }
  const std::vector<std::optional<Vertex>>& parents() const { return parent_; }

  bool IsLeaf(Vertex v) const { return children_[v].empty(); }
  // True iff u lies strictly above v.
  bool IsStrictAncestor(Vertex u, Vertex v) const;
  // T(v) in preorder, v first.
  std::vector<Vertex> Subtree(Vertex v) const;
  // T(v) minus v, sorted by (depth, id).
  std::vector<Vertex> StrictDescendantsByDepth(Vertex v) const;
  // All vertices sorted by (depth, id).
  std::vector<Vertex> ByDepth() const;

 private:
  std::vector<std::optional<Vertex>> parent_;
  std::vector<std::vector<Vertex>> children_;
  std::vector<int> depth_;
  std::vector<int> subtree_size_;
  Vertex root_ = 0;
  int height_ = 0;
};

// Undirected simple graph given by neighbour sets.
class FairnessGraph {
 public:
  explicit FairnessGraph(int n = 0) : neighbors_(static_cast<std::size_t>(n)) {}

  // Throws std::invalid_argument on self-loops or out-of-range ids.
  // Duplicate edges are merged.
  static FairnessGraph FromEdges(int n,
                                 std::span<const std::pair<Vertex, Vertex>> edges);

  void AddEdge(Vertex u, Vertex v);
  void RemoveEdge(Vertex u, Vertex v);
  bool HasEdge(Vertex u, Vertex v) const;

  int size() const { return static_cast<int>(neighbors_.size()); }
  // Sorted ascending.
  const std::vector<Vertex>& neighbors(Vertex v) const { return neighbors_[v]; }
  // Each edge once, as (u, v) with u < v, sorted.
  std::vector<std::pair<Vertex, Vertex>> Edges() const;
  std::size_t edge_count() const;

  bool IsSubgraphOf(const FairnessGraph& g) const;
  friend bool operator==(const FairnessGraph&, const FairnessGraph&) = default;

 private:
  std::vector<std::vector<Vertex>> neighbors_;
};

// The tree's own edges.
FairnessGraph TreeGraph(const RootedTree& t);

// Edge {i, j} for every strict ancestor-descendant pair.
FairnessGraph DescendantClosure(const RootedTree& t);

// Raised by FValue if the slice count is not a whole number, which would
// mean a bug rather than a bad input.
class NonIntegral : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Number of equal slices vertex v cuts in the descendant-graph protocol:
// (depth(v) + |T(v)|) / (depth(v) + 1) * height()!.
BigInt FValue(const RootedTree& t, Vertex v);

}  // namespace netcake

#endif  // NETCAKE_GRAPH_H_
