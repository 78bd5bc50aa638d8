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

// Fairness checks relative to a graph. These recompute every value from the
// raw intervals and densities and share no code with the protocols, so they
// can serve as the oracle for protocol output.

#ifndef NETCAKE_VERIFY_H_
#define NETCAKE_VERIFY_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "netcake/density.h"
#include "netcake/graph.h"
#include "netcake/piece.h"
#include "netcake/protocols.h"
#include "netcake/rational.h"

namespace netcake {

enum class Criterion { kEnvyFree, kProportional };

const char* CriterionName(Criterion c);

struct Violation {
  Vertex agent = -1;
  // The envied neighbour; nullopt for the neighbourhood average.
  std::optional<Vertex> neighbor;
  Rational own;
  Rational compared;
};

struct FairnessReport {
  Criterion criterion = Criterion::kEnvyFree;
  std::string graph;
  std::vector<Violation> violations;

  bool satisfied() const { return violations.empty(); }
};

// True iff the bundles are pairwise disjoint and cover [0, 1) exactly.
bool CheckPartition(std::span<const Piece> bundles);
inline bool CheckPartition(const Allocation& a) {
  return CheckPartition(a.pieces);
}

// Every agent i values its own bundle at least as much as each neighbour's.
FairnessReport CheckEnvyFree(std::span<const Piece> bundles,
                             const FairnessGraph& g,
                             std::span<const Density> densities,
                             std::string graph_name = "");

// Every agent i with neighbours values its own bundle at least as much as
// the average of its neighbours' bundles. Isolated agents pass.
FairnessReport CheckProportional(std::span<const Piece> bundles,
                                 const FairnessGraph& g,
                                 std::span<const Density> densities,
                                 std::string graph_name = "");

enum class CutConvention {
  // Conventional charges: k - 1 per k-way split, 2n per n-way two-agent
  // exact division.
  kPaper,
  // Distinct cut coordinates actually introduced.
  kTrue,
};

std::int64_t CutCount(const Allocation& a, CutConvention convention);

}  // namespace netcake

#endif  // NETCAKE_VERIFY_H_
