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

// JSON file formats. Rationals are always "p/q" strings; no floating point
// appears anywhere.
//
//   instance:   {"parents": [null, 0, ...],
//                "densities": [{"breakpoints": ["0/1", ..., "1/1"],
//                               "values": ["p/q", ...]}, ...],
//                "graph": [[i, j], ...]}            // optional
//   allocation: {"pieces": {"0": [["lo", "hi"], ...], ...},
//                "cuts_paper": N, "cuts_true": N,
//                "ledger": {"0": {"received": [{"from": u, "piece": [...]}],
//                                 "kept": [[...], ...]}, ...}}

#ifndef NETCAKE_INSTANCE_H_
#define NETCAKE_INSTANCE_H_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

#include "netcake/density.h"
#include "netcake/graph.h"
#include "netcake/piece.h"
#include "netcake/protocols.h"
#include "netcake/verify.h"

namespace netcake {

using Json = nlohmann::json;

// Malformed JSON or a field of the wrong shape. what() names the line or
// the field path.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Well-formed JSON describing an invalid instance.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Instance {
  std::vector<std::optional<Vertex>> parents;
  std::vector<Density> densities;
  // Explicit fairness graph for verification-only runs.
  std::optional<std::vector<std::pair<Vertex, Vertex>>> graph;

  RootedTree Tree() const { return RootedTree::FromParents(parents); }
  int size() const { return static_cast<int>(parents.size()); }
  friend bool operator==(const Instance&, const Instance&) = default;
};

Instance ParseInstance(std::string_view text);
Json InstanceToJson(const Instance& instance);

// Random tree (each vertex's parent uniform among earlier vertices, limited
// to those shallower than max_depth when given) and random piecewise-
// constant densities with at most `segments` pieces and small rational
// data. Deterministic in seed.
Instance GenerateInstance(int n, std::uint64_t seed, int segments,
                          std::optional<int> max_depth = std::nullopt);

// What an allocation file holds.
struct AllocationRecord {
  std::vector<Piece> pieces;
  std::int64_t cuts_paper = 0;
  std::int64_t cuts_true = 0;
  std::optional<SliceLedger> ledger;

  static AllocationRecord From(const Allocation& a);
  friend bool operator==(const AllocationRecord&,
                         const AllocationRecord&) = default;
};

Json AllocationToJson(const AllocationRecord& a);
AllocationRecord ParseAllocation(std::string_view text);

Json PieceToJson(const Piece& p);
Json ReportToJson(const FairnessReport& report);

}  // namespace netcake

#endif  // NETCAKE_INSTANCE_H_
