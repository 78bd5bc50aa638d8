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

#include "netcake/verify.h"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace netcake {

namespace {

// Deliberately naive: every interval against every density segment.
Rational Value(const Density& d, const Piece& p) {
  const auto& bp = d.breakpoints();
  const auto& vals = d.values();
  Rational total;
  for (const Interval& iv : p.intervals()) {
    for (std::size_t k = 0; k < vals.size(); ++k) {
      Rational lo = Max(bp[k], iv.lo);
      Rational hi = Min(bp[k + 1], iv.hi);
      if (lo < hi) total += vals[k] * (hi - lo);
    }
  }
  return total;
}

void CheckSizes(std::span<const Piece> bundles, const FairnessGraph& g,
                std::span<const Density> densities) {
  if (bundles.size() != densities.size() ||
      bundles.size() != static_cast<std::size_t>(g.size())) {
    throw std::invalid_argument(
        "bundles, densities and graph disagree on the number of agents");
  }
}

}  // namespace

const char* CriterionName(Criterion c) {
  switch (c) {
    case Criterion::kEnvyFree:
      return "envy-free";
    case Criterion::kProportional:
      return "proportional";
  }
  return "unknown";
}

bool CheckPartition(std::span<const Piece> bundles) {
  std::vector<Interval> all;
  for (const Piece& p : bundles) {
    all.insert(all.end(), p.intervals().begin(), p.intervals().end());
  }
  std::sort(all.begin(), all.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  Rational cursor(0);
  for (const Interval& iv : all) {
    if (!(iv.lo < iv.hi)) continue;
    // iv.lo < cursor is an overlap, cursor < iv.lo a gap.
    if (iv.lo != cursor) return false;
    cursor = iv.hi;
  }
  return cursor == Rational(1);
}

FairnessReport CheckEnvyFree(std::span<const Piece> bundles,
                             const FairnessGraph& g,
                             std::span<const Density> densities,
                             std::string graph_name) {
  CheckSizes(bundles, g, densities);
  FairnessReport report{Criterion::kEnvyFree, std::move(graph_name), {}};
  for (Vertex i = 0; i < g.size(); ++i) {
    if (g.neighbors(i).empty()) continue;
    Rational own = Value(densities[i], bundles[i]);
    for (Vertex j : g.neighbors(i)) {
      Rational other = Value(densities[i], bundles[j]);
      if (own < other) report.violations.push_back({i, j, own, other});
    }
  }
  return report;
}

FairnessReport CheckProportional(std::span<const Piece> bundles,
                                 const FairnessGraph& g,
                                 std::span<const Density> densities,
                                 std::string graph_name) {
  CheckSizes(bundles, g, densities);
  FairnessReport report{Criterion::kProportional, std::move(graph_name), {}};
  for (Vertex i = 0; i < g.size(); ++i) {
    const auto& nbrs = g.neighbors(i);
    if (nbrs.empty()) continue;
    Rational own = Value(densities[i], bundles[i]);
    Rational sum;
    for (Vertex j : nbrs) sum += Value(densities[i], bundles[j]);
    Rational average = sum / Rational(static_cast<long>(nbrs.size()));
    if (own < average) {
      report.violations.push_back({i, std::nullopt, own, average});
    }
  }
  return report;
}

std::int64_t CutCount(const Allocation& a, CutConvention convention) {
  return convention == CutConvention::kPaper ? a.cuts.ChargedCount()
                                             : a.cuts.DistinctPointCount();
}

}  // namespace netcake
