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

#include "netcake/graph.h"

#include <algorithm>
#include <string>

namespace netcake {

RootedTree RootedTree::FromParents(
    std::span<const std::optional<Vertex>> parents) {
  const int n = static_cast<int>(parents.size());
  if (n == 0) throw MalformedTree("tree has no vertices");

  RootedTree t;
  t.parent_.assign(parents.begin(), parents.end());
  t.children_.resize(n);
  t.depth_.assign(n, -1);
  t.subtree_size_.assign(n, 1);

  int roots = 0;
  for (Vertex v = 0; v < n; ++v) {
    const auto& p = parents[v];
    if (!p) {
      ++roots;
      t.root_ = v;
      continue;
    }
    if (*p < 0 || *p >= n) {
      throw MalformedTree("vertex " + std::to_string(v) + " has parent " +
                          std::to_string(*p) + " outside 0.." +
                          std::to_string(n - 1));
    }
    if (*p == v) {
      throw MalformedTree("vertex " + std::to_string(v) + " is its own parent");
    }
    t.children_[*p].push_back(v);
  }
  if (roots != 1) {
    throw MalformedTree("expected exactly one root, found " +
                        std::to_string(roots));
  }

  // BFS from the root; anything unreached sits on a cycle.
  std::vector<Vertex> order{t.root_};
  t.depth_[t.root_] = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (Vertex c : t.children_[order[i]]) {
      t.depth_[c] = t.depth_[order[i]] + 1;
      order.push_back(c);
    }
  }
  if (static_cast<int>(order.size()) != n) {
    throw MalformedTree("parent links contain a cycle");
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (t.parent_[*it]) t.subtree_size_[*t.parent_[*it]] += t.subtree_size_[*it];
  }
  t.height_ = *std::max_element(t.depth_.begin(), t.depth_.end());
  return t;
}

bool RootedTree::IsStrictAncestor(Vertex u, Vertex v) const {
  for (auto p = parent_[v]; p; p = parent_[*p]) {
    if (*p == u) return true;
  }
  return false;
}

std::vector<Vertex> RootedTree::Subtree(Vertex v) const {
  std::vector<Vertex> out;
  std::vector<Vertex> stack{v};
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    out.push_back(x);
    const auto& ch = children_[x];
    stack.insert(stack.end(), ch.rbegin(), ch.rend());
  }
  return out;
}

namespace {

void SortByDepth(const RootedTree& t, std::vector<Vertex>& vs) {
  std::sort(vs.begin(), vs.end(), [&t](Vertex a, Vertex b) {
    return std::pair(t.depth(a), a) < std::pair(t.depth(b), b);
  });
}

}  // namespace

std::vector<Vertex> RootedTree::StrictDescendantsByDepth(Vertex v) const {
  std::vector<Vertex> out = Subtree(v);
  out.erase(out.begin());
  SortByDepth(*this, out);
  return out;
}

std::vector<Vertex> RootedTree::ByDepth() const {
  std::vector<Vertex> out(parent_.size());
  for (std::size_t v = 0; v < out.size(); ++v) out[v] = static_cast<Vertex>(v);
  SortByDepth(*this, out);
  return out;
}

FairnessGraph FairnessGraph::FromEdges(
    int n, std::span<const std::pair<Vertex, Vertex>> edges) {
  FairnessGraph g(n);
  for (const auto& [u, v] : edges) g.AddEdge(u, v);
  return g;
}

void FairnessGraph::AddEdge(Vertex u, Vertex v) {
  if (u < 0 || v < 0 || u >= size() || v >= size()) {
    throw std::invalid_argument("edge {" + std::to_string(u) + ", " +
                                std::to_string(v) + "} has an unknown vertex");
  }
  if (u == v) {
    throw std::invalid_argument("self-loop at " + std::to_string(u));
  }
  auto insert = [](std::vector<Vertex>& set, Vertex x) {
    auto it = std::lower_bound(set.begin(), set.end(), x);
    if (it == set.end() || *it != x) set.insert(it, x);
  };
  insert(neighbors_[u], v);
  insert(neighbors_[v], u);
}

void FairnessGraph::RemoveEdge(Vertex u, Vertex v) {
  std::erase(neighbors_[u], v);
  std::erase(neighbors_[v], u);
}

bool FairnessGraph::HasEdge(Vertex u, Vertex v) const {
  return std::binary_search(neighbors_[u].begin(), neighbors_[u].end(), v);
}

std::vector<std::pair<Vertex, Vertex>> FairnessGraph::Edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 0; u < size(); ++u) {
    for (Vertex v : neighbors_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::size_t FairnessGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& n : neighbors_) twice += n.size();
  return twice / 2;
}

bool FairnessGraph::IsSubgraphOf(const FairnessGraph& g) const {
  if (size() != g.size()) return false;
  for (Vertex u = 0; u < size(); ++u) {
    for (Vertex v : neighbors_[u]) {
      if (!g.HasEdge(u, v)) return false;
    }
  }
  return true;
}

FairnessGraph TreeGraph(const RootedTree& t) {
  FairnessGraph g(t.size());
  for (Vertex v = 0; v < t.size(); ++v) {
    if (t.parent(v)) g.AddEdge(*t.parent(v), v);
  }
  return g;
}

FairnessGraph DescendantClosure(const RootedTree& t) {
  FairnessGraph g(t.size());
  for (Vertex v = 0; v < t.size(); ++v) {
    for (auto p = t.parent(v); p; p = t.parent(*p)) g.AddEdge(*p, v);
  }
  return g;
}

BigInt FValue(const RootedTree& t, Vertex v) {
  BigInt num = BigInt(t.depth(v) + t.subtree_size(v)) * Factorial(t.height());
  BigInt den = t.depth(v) + 1;
  if (num % den != 0) {
    throw NonIntegral("slice count for vertex " + std::to_string(v) +
                      " is not an integer");
  }
  return num / den;
}

}  // namespace netcake
