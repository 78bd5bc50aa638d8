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

#include "netcake/cli.h"

#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "netcake/graph.h"
#include "netcake/instance.h"
#include "netcake/protocols.h"
#include "netcake/verify.h"

namespace netcake::cli {

namespace {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void Emit(const Json& doc, const std::string& path, std::ostream& out) {
  std::string text = doc.dump(2) + "\n";
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << text)) throw IoError("cannot write " + path);
}

int Fail(std::ostream& err, const std::string& kind, const std::string& msg) {
  err << Json{{"error", {{"kind", kind}, {"message", msg}}}}.dump() << "\n";
  return kError;
}

Json BigJson(const BigInt& v) {
  if (v.fits_slong_p()) return Json(v.get_si());
  return Json(ToDecimal(v));
}

Json Info(const Instance& inst) {
  RootedTree t = inst.Tree();
  const int n = t.size();
  BigInt d_fact = Factorial(t.height());
  Json depths = Json::array(), sizes = Json::array(), f = Json::array();
  BigInt desc_cuts = 0;
  std::int64_t tree_cuts = n - 1;
  for (Vertex v = 0; v < n; ++v) {
    depths.push_back(t.depth(v));
    sizes.push_back(t.subtree_size(v));
    BigInt fv = FValue(t, v);
    f.push_back(BigJson(fv));
    desc_cuts += fv - 1;
    if (v != t.root()) tree_cuts += 2 * static_cast<std::int64_t>(t.subtree_size(v));
  }
  BigInt n2 = BigInt(n) * n;
  return {{"n", n},
          {"root", t.root()},
          {"depth", t.height()},
          {"d_factorial", BigJson(d_fact)},
          {"depths", depths},
          {"subtree_sizes", sizes},
          {"f_values", f},
          {"cut_bounds",
           {{"tree_paper_cuts", tree_cuts},
            {"tree_bound", BigJson(3 * n2)},
            {"descendant_paper_cuts", BigJson(desc_cuts)},
            {"descendant_bound", BigJson(n2 * d_fact)}}}};
}

FairnessGraph ChooseGraph(const std::string& which, const Instance& inst) {
  if (which == "tree") return TreeGraph(inst.Tree());
  if (which == "descendant-closure") return DescendantClosure(inst.Tree());
  if (!inst.graph) {
    throw ValidationError("--graph explicit needs a \"graph\" field in the instance");
  }
  return FairnessGraph::FromEdges(inst.size(), *inst.graph);
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"netcake: exact fair division on networks", "netcake"};
  app.require_subcommand(1);

  std::string in_path, out_path, alloc_path;
  std::string protocol, criterion, graph;
  int n = 0, segments = 0;
  std::uint64_t seed = 0;
  std::optional<int> max_depth;

  auto* solve = app.add_subcommand("solve", "run an allocation protocol");
  solve->add_option("--protocol", protocol)
      ->required()
      ->check(CLI::IsMember({"tree", "descendant"}));
  solve->add_option("--in", in_path)->required();
  solve->add_option("--out", out_path);

  auto* verify = app.add_subcommand("verify", "check an allocation");
  verify->add_option("--criterion", criterion)
      ->required()
      ->check(CLI::IsMember({"envy-free", "proportional"}));
  verify->add_option("--graph", graph)
      ->required()
      ->check(CLI::IsMember({"tree", "descendant-closure", "explicit"}));
  verify->add_option("--in", in_path)->required();
  verify->add_option("--alloc", alloc_path)->required();
  verify->add_option("--out", out_path);

  auto* gen = app.add_subcommand("gen", "generate a random instance");
  gen->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  gen->add_option("--seed", seed)->required();
  gen->add_option("--segments", segments)->required()->check(CLI::PositiveNumber);
  gen->add_option("--max-depth", max_depth)->check(CLI::PositiveNumber);
  gen->add_option("--out", out_path);

  auto* info = app.add_subcommand("info", "tree statistics and cut bounds");
  info->add_option("--in", in_path)->required();
  info->add_option("--out", out_path);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    return Fail(err, "usage", e.what());
  }

  try {
    if (*gen) {
      Emit(InstanceToJson(GenerateInstance(n, seed, segments, max_depth)),
           out_path, out);
      return kOk;
    }

    Instance inst = ParseInstance(ReadFile(in_path));
    if (*info) {
      Emit(Info(inst), out_path, out);
      return kOk;
    }
    if (*solve) {
      RootedTree t = inst.Tree();
      Allocation a = protocol == "tree" ? AllocationTree(t, inst.densities)
                                        : AlgDescendant(t, inst.densities);
      Emit(AllocationToJson(AllocationRecord::From(a)), out_path, out);
      return kOk;
    }

    AllocationRecord alloc = ParseAllocation(ReadFile(alloc_path));
    if (alloc.pieces.size() != inst.densities.size()) {
      throw ValidationError("allocation has " +
                            std::to_string(alloc.pieces.size()) +
                            " bundles for " + std::to_string(inst.size()) +
                            " agents");
    }
    if (!CheckPartition(alloc.pieces)) {
      throw ValidationError("allocation is not a partition of [0, 1)");
    }
    FairnessGraph g = ChooseGraph(graph, inst);
    FairnessReport report =
        criterion == "envy-free"
            ? CheckEnvyFree(alloc.pieces, g, inst.densities, graph)
            : CheckProportional(alloc.pieces, g, inst.densities, graph);
    Emit(ReportToJson(report), out_path, out);
    return report.satisfied() ? kOk : kViolated;
  } catch (const IoError& e) {
    return Fail(err, "io", e.what());
  } catch (const ParseError& e) {
    return Fail(err, "parse", e.what());
  } catch (const ValidationError& e) {
    return Fail(err, "validation", e.what());
  } catch (const std::exception& e) {
    return Fail(err, "internal", e.what());
  }
}

}  // namespace netcake::cli
