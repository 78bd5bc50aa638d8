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

#include "netcake/instance.h"

#include <algorithm>
#include <random>
#include <set>

namespace netcake {

namespace {

Json ParseJson(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t at = std::min<std::size_t>(e.byte, text.size());
    auto line = 1 + std::count(text.begin(), text.begin() + at, '\n');
    throw ParseError("line " + std::to_string(line) + ": " + e.what());
  }
}

[[noreturn]] void Bad(const std::string& field, const std::string& what) {
  throw ParseError("field " + field + ": " + what);
}

const Json& Require(const Json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) Bad(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) Bad(path + "." + key, "missing");
  return *it;
}

const Json& RequireArray(const Json& v, const std::string& field) {
  if (!v.is_array()) Bad(field, "expected an array");
  return v;
}

std::int64_t RequireInt(const Json& v, const std::string& field) {
  if (!v.is_number_integer()) Bad(field, "expected an integer");
  return v.get<std::int64_t>();
}

Rational RequireRational(const Json& v, const std::string& field) {
  if (!v.is_string()) Bad(field, "expected a \"p/q\" string");
  try {
    return Rational::Parse(v.get<std::string>());
  } catch (const std::invalid_argument& e) {
    Bad(field, e.what());
  }
}

std::string Index(const std::string& base, std::size_t i) {
  return base + "[" + std::to_string(i) + "]";
}

Piece PieceFromJson(const Json& v, const std::string& field) {
  RequireArray(v, field);
  std::vector<Interval> ivs;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Json& pair = v[i];
    std::string f = Index(field, i);
    if (!pair.is_array() || pair.size() != 2) Bad(f, "expected [lo, hi]");
    ivs.push_back({RequireRational(pair[0], f + "[0]"),
                   RequireRational(pair[1], f + "[1]")});
  }
  if (!Piece::IsCanonical(ivs)) {
    throw ValidationError("field " + field +
                          ": intervals must be sorted, disjoint, non-touching "
                          "and inside [0, 1]");
  }
  return Piece::FromIntervals(std::move(ivs));
}

// Bundle-keyed object {"0": ..., "1": ...} with keys exactly 0..n-1.
std::vector<const Json*> VertexKeyed(const Json& obj, const std::string& field) {
  if (!obj.is_object()) Bad(field, "expected an object keyed by vertex id");
  std::vector<const Json*> out(obj.size(), nullptr);
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    std::size_t v = 0;
    try {
      std::size_t used = 0;
      v = std::stoul(it.key(), &used);
      if (used != it.key().size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      Bad(field + "." + it.key(), "key is not a vertex id");
    }
    if (v >= out.size()) Bad(field + "." + it.key(), "vertex ids must be 0..n-1");
    out[v] = &it.value();
  }
  return out;
}

Rational RandomRational(std::mt19937_64& rng, int max_num, int max_den) {
  std::uniform_int_distribution<int> num(0, max_num);
  std::uniform_int_distribution<int> den(1, max_den);
  int p = num(rng);
  int q = den(rng);
  return Rational(p, q);
}

}  // namespace

Instance ParseInstance(std::string_view text) {
  Json root = ParseJson(text);
  if (!root.is_object()) Bad("<root>", "expected an object");

  Instance inst;
  const Json& parents = RequireArray(Require(root, "parents", "<root>"), "parents");
  for (std::size_t i = 0; i < parents.size(); ++i) {
    if (parents[i].is_null()) {
      inst.parents.push_back(std::nullopt);
    } else {
      inst.parents.push_back(
          static_cast<Vertex>(RequireInt(parents[i], Index("parents", i))));
    }
  }
  try {
    (void)inst.Tree();
  } catch (const MalformedTree& e) {
    throw ValidationError(std::string("field parents: ") + e.what());
  }

  const Json& dens =
      RequireArray(Require(root, "densities", "<root>"), "densities");
  if (dens.size() != parents.size()) {
    throw ValidationError("field densities: expected " +
                          std::to_string(parents.size()) + " densities, got " +
                          std::to_string(dens.size()));
  }
  for (std::size_t i = 0; i < dens.size(); ++i) {
    std::string f = Index("densities", i);
    const Json& bp = RequireArray(Require(dens[i], "breakpoints", f),
                                  f + ".breakpoints");
    const Json& vals = RequireArray(Require(dens[i], "values", f), f + ".values");
    std::vector<Rational> b, v;
    for (std::size_t k = 0; k < bp.size(); ++k) {
      b.push_back(RequireRational(bp[k], Index(f + ".breakpoints", k)));
    }
    for (std::size_t k = 0; k < vals.size(); ++k) {
      v.push_back(RequireRational(vals[k], Index(f + ".values", k)));
    }
    try {
      inst.densities.emplace_back(std::move(b), std::move(v));
    } catch (const InvalidDensity& e) {
      throw ValidationError("field " + f + ": " + e.what());
    }
  }

  if (auto it = root.find("graph"); it != root.end() && !it->is_null()) {
    RequireArray(*it, "graph");
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (std::size_t i = 0; i < it->size(); ++i) {
      const Json& e = (*it)[i];
      std::string f = Index("graph", i);
      if (!e.is_array() || e.size() != 2) Bad(f, "expected [i, j]");
      edges.emplace_back(static_cast<Vertex>(RequireInt(e[0], f + "[0]")),
                         static_cast<Vertex>(RequireInt(e[1], f + "[1]")));
    }
    try {
      (void)FairnessGraph::FromEdges(inst.size(), edges);
    } catch (const std::invalid_argument& e) {
      throw ValidationError(std::string("field graph: ") + e.what());
    }
    inst.graph = std::move(edges);
  }
  return inst;
}

Json InstanceToJson(const Instance& instance) {
  Json parents = Json::array();
  for (const auto& p : instance.parents) {
    parents.push_back(p ? Json(*p) : Json(nullptr));
  }
  Json dens = Json::array();
  for (const Density& d : instance.densities) {
    Json bp = Json::array();
    Json vals = Json::array();
    for (const Rational& b : d.breakpoints()) bp.push_back(b.ToString());
    for (const Rational& v : d.values()) vals.push_back(v.ToString());
    dens.push_back({{"breakpoints", bp}, {"values", vals}});
  }
  Json out = {{"parents", parents}, {"densities", dens}};
  if (instance.graph) {
    Json edges = Json::array();
    for (const auto& [u, v] : *instance.graph) edges.push_back({u, v});
    out["graph"] = edges;
  }
  return out;
}

Instance GenerateInstance(int n, std::uint64_t seed, int segments,
                          std::optional<int> max_depth) {
  if (n < 1) throw std::invalid_argument("gen: n must be at least 1");
  if (segments < 1) throw std::invalid_argument("gen: segments must be at least 1");
  if (max_depth && *max_depth < 1 && n > 1) {
    throw std::invalid_argument("gen: max depth below 1 allows a single vertex");
  }
  std::mt19937_64 rng(seed);

  Instance inst;
  std::vector<int> depth;
  inst.parents.push_back(std::nullopt);
  depth.push_back(0);
  for (int v = 1; v < n; ++v) {
    std::vector<Vertex> eligible;
    for (Vertex u = 0; u < v; ++u) {
      if (!max_depth || depth[u] < *max_depth) eligible.push_back(u);
    }
    std::uniform_int_distribution<std::size_t> pick(0, eligible.size() - 1);
    Vertex p = eligible[pick(rng)];
    inst.parents.push_back(p);
    depth.push_back(depth[p] + 1);
  }

  std::uniform_int_distribution<int> seg_count(1, segments);
  for (int v = 0; v < n; ++v) {
    int s = seg_count(rng);
    std::uniform_int_distribution<int> extra(0, segments);
    const int grid = 2 * segments + extra(rng);
    std::uniform_int_distribution<int> pos(1, grid - 1);
    std::set<int> cuts;
    while (static_cast<int>(cuts.size()) < s - 1) cuts.insert(pos(rng));

    std::vector<Rational> bp{Rational(0)};
    for (int c : cuts) bp.push_back(Rational(c, grid));
    bp.push_back(Rational(1));
    std::vector<Rational> vals;
    for (int k = 0; k < s; ++k) vals.push_back(RandomRational(rng, 9, 6));
    inst.densities.emplace_back(std::move(bp), std::move(vals));
  }
  return inst;
}

AllocationRecord AllocationRecord::From(const Allocation& a) {
  return {a.pieces, CutCount(a, CutConvention::kPaper),
          CutCount(a, CutConvention::kTrue), a.ledger};
}

Json PieceToJson(const Piece& p) {
  Json out = Json::array();
  for (const Interval& iv : p.intervals()) {
    out.push_back({iv.lo.ToString(), iv.hi.ToString()});
  }
  return out;
}

Json AllocationToJson(const AllocationRecord& a) {
  Json pieces = Json::object();
  for (std::size_t v = 0; v < a.pieces.size(); ++v) {
    pieces[std::to_string(v)] = PieceToJson(a.pieces[v]);
  }
  Json ledger = Json::object();
  if (a.ledger) {
    for (std::size_t v = 0; v < a.ledger->received.size(); ++v) {
      Json received = Json::array();
      for (const SliceRecord& r : a.ledger->received[v]) {
        received.push_back({{"from", r.from}, {"piece", PieceToJson(r.piece)}});
      }
      Json kept = Json::array();
      for (const Piece& p : a.ledger->kept[v]) kept.push_back(PieceToJson(p));
      ledger[std::to_string(v)] = {{"received", received}, {"kept", kept}};
    }
  }
  return {{"pieces", pieces},
          {"cuts_paper", a.cuts_paper},
          {"cuts_true", a.cuts_true},
          {"ledger", ledger}};
}

AllocationRecord ParseAllocation(std::string_view text) {
  Json root = ParseJson(text);
  if (!root.is_object()) Bad("<root>", "expected an object");

  AllocationRecord out;
  auto bundles = VertexKeyed(Require(root, "pieces", "<root>"), "pieces");
  for (std::size_t v = 0; v < bundles.size(); ++v) {
    out.pieces.push_back(PieceFromJson(*bundles[v], "pieces." + std::to_string(v)));
  }
  if (root.contains("cuts_paper")) {
    out.cuts_paper = RequireInt(root["cuts_paper"], "cuts_paper");
  }
  if (root.contains("cuts_true")) {
    out.cuts_true = RequireInt(root["cuts_true"], "cuts_true");
  }
  if (auto it = root.find("ledger"); it != root.end() && !it->empty()) {
    auto entries = VertexKeyed(*it, "ledger");
    if (entries.size() != out.pieces.size()) {
      throw ValidationError("field ledger: expected one entry per vertex");
    }
    SliceLedger ledger;
    for (std::size_t v = 0; v < entries.size(); ++v) {
      std::string f = "ledger." + std::to_string(v);
      const Json& received = RequireArray(Require(*entries[v], "received", f),
                                          f + ".received");
      const Json& kept = RequireArray(Require(*entries[v], "kept", f), f + ".kept");
      auto& rec = ledger.received.emplace_back();
      for (std::size_t i = 0; i < received.size(); ++i) {
        std::string g = Index(f + ".received", i);
        rec.push_back({static_cast<Vertex>(RequireInt(Require(received[i], "from", g),
                                                      g + ".from")),
                       PieceFromJson(Require(received[i], "piece", g), g + ".piece")});
      }
      auto& keep = ledger.kept.emplace_back();
      for (std::size_t i = 0; i < kept.size(); ++i) {
        keep.push_back(PieceFromJson(kept[i], Index(f + ".kept", i)));
      }
    }
    out.ledger = std::move(ledger);
  }
  return out;
}

Json ReportToJson(const FairnessReport& report) {
  Json violations = Json::array();
  for (const Violation& v : report.violations) {
    violations.push_back(
        {{"agent", v.agent},
         {"neighbor", v.neighbor ? Json(*v.neighbor) : Json("aggregate")},
         {"own", v.own.ToString()},
         {"compared", v.compared.ToString()}});
  }
  return {{"criterion", CriterionName(report.criterion)},
          {"graph", report.graph},
          {"satisfied", report.satisfied()},
          {"violations", violations}};
}

}  // namespace netcake
