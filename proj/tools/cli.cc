// Copyright 2026 The extraconn Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "extraconn/enumeration.h"
#include "extraconn/error.h"
#include "extraconn/extra_connectivity.h"
#include "extraconn/extremal.h"
#include "extraconn/families.h"
#include "extraconn/graph.h"
#include "extraconn/graph_io.h"
#include "extraconn/serialization.h"
#include "extraconn/verification.h"

namespace extraconn::cli {

namespace {

struct KappaArgs {
  int g = 0;
  std::optional<std::string> g6;
  std::optional<std::string> edges;
  bool from_stdin = false;
  bool witness = false;
  bool profile = false;
  int max_n = kDefaultSolverMaxOrder;
  bool json = false;
};

struct FamilyArgs {
  std::string kind;
  std::optional<int> n, g, k, a, b, leaves, matching, index, clique_size;
  std::vector<int> parts;
  std::optional<std::string> left, right, out;
  bool sparse = false;
};

struct VerifyArgs {
  std::string theorem;
  std::optional<int> n, min_n, g;
  std::optional<std::string> corpus;
  bool dedupe = false;
  bool trees = false;
  bool list = false;
  bool json = false;
};

struct ExtremalArgs {
  std::string quantity;
  int n = 0, g = 0, k = 0;
  bool dedupe = false;
  std::optional<std::string> corpus;
  bool json = false;
};

struct EnumerateArgs {
  int n = 0;
  bool connected = false;
  bool dedupe = false;
  bool trees = false;
  bool json = false;
};

std::string Witness(const std::optional<VertexSet>& set) {
  if (!set) return "-";
  std::string text = "{";
  bool first = true;
  for (Vertex v : *set) {
    if (!first) text += ",";
    text += std::to_string(v);
    first = false;
  }
  return text + "}";
}

std::string Value(const std::optional<int>& value) {
  return value ? std::to_string(*value) : "undefined";
}

std::vector<Graph> ReadGraph6File(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw Error(ErrorCode::kParseError, "cannot open " + path);
  return ReadGraph6Stream(file);
}

int RunKappa(const KappaArgs& args, std::istream& in, std::ostream& out) {
  std::vector<Graph> graphs;
  if (args.g6) {
    graphs.push_back(ParseGraph6(*args.g6));
  } else if (args.edges) {
    std::ifstream file(*args.edges);
    if (!file) throw Error(ErrorCode::kParseError, "cannot open " + *args.edges);
    graphs.push_back(ParseEdgeList(file));
  } else {
    graphs = ReadGraph6Stream(in);
    if (graphs.empty()) {
      throw Error(ErrorCode::kParseError, "no graph6 lines on stdin");
    }
  }

  Json doc = Json::array();
  for (const Graph& graph : graphs) {
    const std::string code = ToGraph6(graph);
    if (args.profile) {
      auto profile = KappaProfile(graph, args.max_n);
      if (args.json) {
        Json entry;
        entry["graph6"] = code;
        entry["profile"] = ToJson(profile);
        doc.push_back(std::move(entry));
        continue;
      }
      out << code << " n=" << graph.order() << "\n";
      for (const auto& r : profile) {
        out << "  g=" << r.g << " kappa_g=" << Value(r.value);
        if (args.witness) out << " witness=" << Witness(r.witness);
        out << "\n";
      }
      continue;
    }
    auto result = ExtraConnectivity(graph, args.g, args.max_n);
    if (args.json) {
      doc.push_back(ToJson(result));
      continue;
    }
    out << code << " n=" << result.n << " g=" << result.g
        << " kappa_g=" << Value(result.value);
    if (args.witness) out << " witness=" << Witness(result.witness);
    out << "\n";
  }
  if (args.json) {
    out << (doc.size() == 1 ? doc[0] : doc).dump(2) << "\n";
  }
  return kExitOk;
}

int Need(const std::optional<int>& value, const char* flag,
         const std::string& kind) {
  if (!value) {
    throw Error(ErrorCode::kInvalidSpec,
                "family " + kind + " requires " + std::string(flag));
  }
  return *value;
}

ConstructionSpec FamilySpec(const FamilyArgs& args) {
  const std::string& kind = args.kind;
  auto n = [&] { return Need(args.n, "--n", kind); };
  auto g = [&] { return Need(args.g, "--g", kind); };
  auto k = [&] { return Need(args.k, "--k", kind); };
  auto operand = [&](const std::optional<std::string>& text, const char* flag) {
    if (!text) {
      throw Error(ErrorCode::kInvalidSpec,
                  "family " + kind + " requires " + std::string(flag));
    }
    return ParseGraph6(*text);
  };
  if (kind == "complete") return CompleteSpec{n()};
  if (kind == "bipartite") {
    return CompleteBipartiteSpec{Need(args.a, "--a", kind),
                                 Need(args.b, "--b", kind)};
  }
  if (kind == "multipartite") {
    if (args.parts.empty()) {
      throw Error(ErrorCode::kInvalidSpec, "family multipartite requires --parts");
    }
    return CompleteMultipartiteSpec{args.parts};
  }
  if (kind == "path") return PathSpec{n()};
  if (kind == "cycle") return CycleSpec{n()};
  if (kind == "star") return StarSpec{Need(args.leaves, "--leaves", kind)};
  if (kind == "wheel") return WheelSpec{n()};
  if (kind == "kn-minus-matching") {
    return KnMinusMatchingSpec{n(), Need(args.matching, "--matching", kind)};
  }
  if (kind == "join") {
    return JoinSpec{operand(args.left, "--left"), operand(args.right, "--right")};
  }
  if (kind == "corona") {
    return CoronaSpec{operand(args.left, "--left"),
                      operand(args.right, "--right")};
  }
  if (kind == "tstar") return TStarSpec{n(), g(), DefaultTStarSubtrees(n(), g()), std::nullopt};
  if (kind == "tprime") {
    auto spec = FindTPrime(n(), g(), k());
    if (!spec) {
      throw Error(ErrorCode::kInvalidSpec,
                  "no T' exists: needs n - k - 1 = (g+1) r + x with "
                  "g + 1 <= x <= 2g");
    }
    return *spec;
  }
  if (kind == "hk") return HkSpec{n(), g(), k()};
  if (kind == "fk") return FkSpec{n(), g()};
  if (kind == "anti-monotone") {
    return AntiMonotonePairSpec{args.g.value_or(1), args.clique_size.value_or(0)};
  }
  if (kind == "clique-pair") {
    return CliquePairExampleSpec{Need(args.index, "--index", kind), n()};
  }
  throw Error(ErrorCode::kInvalidSpec, "unknown family kind '" + kind + "'");
}

int RunFamily(const FamilyArgs& args, std::ostream& out) {
  ConstructionSpec spec = FamilySpec(args);
  Graph graph = args.sparse && std::holds_alternative<AntiMonotonePairSpec>(spec)
                    ? BuildAntiMonotonePair(std::get<AntiMonotonePairSpec>(spec)).second
                    : Build(spec);
  const std::string line = ToGraph6(graph) + "\n";
  if (args.out) {
    std::ofstream file(*args.out);
    if (!file) throw Error(ErrorCode::kParseError, "cannot write " + *args.out);
    file << line;
  } else {
    out << line;
  }
  return kExitOk;
}

int RunVerify(const VerifyArgs& args, std::ostream& out) {
  if (args.list) {
    for (const auto& t : ListTheorems()) {
      out << t.id << "\t" << t.source << "\t" << t.summary << "\n";
    }
    return kExitOk;
  }
  if (args.theorem.empty()) {
    throw Error(ErrorCode::kUnknownTheorem, "verify needs a theorem id (see --list)");
  }
  if (!IsKnownTheorem(args.theorem)) {
    throw Error(ErrorCode::kUnknownTheorem,
                "unknown theorem id '" + args.theorem + "' (see --list)");
  }
  std::string default_source;
  for (const auto& t : ListTheorems()) {
    if (t.id == args.theorem) default_source = t.source;
  }

  InstanceSource source;
  if (args.corpus) {
    source = InstanceSource::Graphs(ReadGraph6File(*args.corpus));
  } else if (args.n) {
    const int lo = args.min_n.value_or(*args.n);
    if (args.trees || default_source == "labeled-trees") {
      source = InstanceSource::LabeledTrees(lo, *args.n);
    } else {
      source = InstanceSource::ConnectedGraphs(lo, *args.n, args.dedupe);
    }
  } else if (args.trees) {
    source = InstanceSource::LabeledTrees(2, 8);
  }
  if (args.g) source.WithG(*args.g);

  const VerificationReport report = VerifyTheorem(args.theorem, source);
  if (args.json) {
    out << ToJson(report).dump(2) << "\n";
  } else {
    out << report.theorem << ": checked " << report.checked << ", excluded "
        << report.excluded << ", failures " << report.failures.size() << "\n";
    for (const auto& c : report.failures) {
      out << "  " << c.graph6 << " g=" << c.g
          << " expected=" << ClaimValueToString(c.expected)
          << " got=" << ClaimValueToString(c.got);
      if (!c.params.empty()) out << " " << c.params;
      out << "\n";
    }
    for (const auto& note : report.notes) out << "  note: " << note << "\n";
  }
  return report.passed() ? kExitOk : kExitVerificationFailed;
}

int RunExtremal(const ExtremalArgs& args, std::ostream& out) {
  ExtremalOptions options;
  options.dedupe = args.dedupe;
  if (args.corpus) options.corpus = ReadGraph6File(*args.corpus);
  const auto result = SearchExtremal(ParseExtremalQuantity(args.quantity),
                                     args.n, args.g, args.k, options);
  if (args.json) {
    out << ToJson(result).dump(2) << "\n";
    return kExitOk;
  }
  out << ExtremalQuantityName(result.quantity) << "(n=" << result.n
      << ", k=" << result.k << ") at g=" << result.g << ": "
      << (result.value ? std::to_string(*result.value) : "nonexistent")
      << ", closed form "
      << (result.closed_form ? std::to_string(*result.closed_form)
                             : "nonexistent")
      << (result.agrees ? ", agrees" : ", differs") << "\n";
  out << "  witness " << result.witness.value_or("-") << ", scanned "
      << result.graphs_scanned << ", disconnected skipped "
      << result.skipped_disconnected << "\n";
  if (!result.note.empty()) out << "  note: " << result.note << "\n";
  return kExitOk;
}

int RunEnumerate(const EnumerateArgs& args, std::ostream& out) {
  std::vector<std::string> codes;
  auto emit = [&](const Graph& graph) { codes.push_back(ToGraph6(graph)); };
  if (args.trees) {
    ForEachLabeledTree(args.n, emit);
  } else {
    EnumerationOptions options;
    options.connected_only = args.connected;
    options.dedupe = args.dedupe;
    ForEachGraph(args.n, options, emit);
  }
  if (args.json) {
    Json doc;
    doc["n"] = args.n;
    doc["count"] = codes.size();
    doc["graphs"] = codes;
    out << doc.dump(2) << "\n";
  } else {
    for (const auto& c : codes) out << c << "\n";
  }
  return kExitOk;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact g-extra connectivity of small graphs", "extraconn"};
  app.require_subcommand(1, 1);

  KappaArgs kappa;
  auto* kappa_cmd = app.add_subcommand("kappa", "compute kappa_g of a graph");
  kappa_cmd->add_option("--g", kappa.g, "component size threshold minus one")
      ->check(CLI::NonNegativeNumber);
  auto* g6 = kappa_cmd->add_option("--g6", kappa.g6, "graph6 string");
  auto* edges = kappa_cmd->add_option("--edges", kappa.edges, "edge-list file");
  auto* from_stdin = kappa_cmd->add_flag("--stdin", kappa.from_stdin,
                                         "read graph6 lines from stdin");
  g6->excludes(edges)->excludes(from_stdin);
  edges->excludes(from_stdin);
  kappa_cmd->add_flag("--witness", kappa.witness, "print the minimum cutset");
  kappa_cmd->add_flag("--profile", kappa.profile, "all feasible g");
  kappa_cmd->add_option("--max-n", kappa.max_n, "solver order guard")
      ->check(CLI::Range(1, Graph::kMaxOrder));
  kappa_cmd->add_flag("--json", kappa.json, "JSON output");

  FamilyArgs family;
  auto* family_cmd = app.add_subcommand("family", "print a construction as graph6");
  family_cmd->add_option("kind", family.kind,
                         "complete|bipartite|multipartite|path|cycle|star|"
                         "wheel|kn-minus-matching|join|corona|tstar|tprime|"
                         "hk|fk|anti-monotone|clique-pair")
      ->required();
  family_cmd->add_option("--n", family.n);
  family_cmd->add_option("--g", family.g);
  family_cmd->add_option("--k", family.k);
  family_cmd->add_option("--a", family.a);
  family_cmd->add_option("--b", family.b);
  family_cmd->add_option("--parts", family.parts)->delimiter(',');
  family_cmd->add_option("--leaves", family.leaves);
  family_cmd->add_option("--matching", family.matching);
  family_cmd->add_option("--index", family.index);
  family_cmd->add_option("--clique-size", family.clique_size);
  family_cmd->add_option("--left", family.left, "graph6 operand");
  family_cmd->add_option("--right", family.right, "graph6 operand");
  family_cmd->add_flag("--sparse", family.sparse,
                       "anti-monotone: print the spanning subgraph");
  family_cmd->add_option("--out", family.out, "write to file");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "check a statement against the solver");
  verify_cmd->add_option("theorem", verify.theorem, "theorem id");
  verify_cmd->add_option("--n", verify.n, "largest order")->check(CLI::Range(1, 9));
  verify_cmd->add_option("--min-n", verify.min_n, "smallest order (default: --n)")
      ->check(CLI::Range(1, 9));
  verify_cmd->add_option("--g", verify.g)->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--corpus", verify.corpus, "graph6 file");
  verify_cmd->add_flag("--dedupe", verify.dedupe, "one graph per isomorphism class");
  verify_cmd->add_flag("--trees", verify.trees, "labeled trees instead of graphs");
  verify_cmd->add_flag("--list", verify.list, "list theorem ids");
  verify_cmd->add_flag("--json", verify.json, "JSON output");

  ExtremalArgs extremal;
  auto* extremal_cmd = app.add_subcommand("extremal", "exhaustive extremal search");
  extremal_cmd->add_option("quantity", extremal.quantity, "s, f or g")
      ->required()
      ->check(CLI::IsMember({"s", "f", "g"}));
  extremal_cmd->add_option("--n", extremal.n)->required();
  extremal_cmd->add_option("--g", extremal.g)->required();
  extremal_cmd->add_option("--k", extremal.k)->required();
  extremal_cmd->add_flag("--dedupe", extremal.dedupe);
  extremal_cmd->add_option("--corpus", extremal.corpus, "graph6 file of order n");
  extremal_cmd->add_flag("--json", extremal.json);

  EnumerateArgs enumerate;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "print graphs of order n");
  enumerate_cmd->add_option("--n", enumerate.n)->required();
  enumerate_cmd->add_flag("--connected", enumerate.connected);
  enumerate_cmd->add_flag("--dedupe", enumerate.dedupe);
  enumerate_cmd->add_flag("--trees", enumerate.trees, "labeled trees");
  enumerate_cmd->add_flag("--json", enumerate.json);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*kappa_cmd) {
      if (!kappa.g6 && !kappa.edges && !kappa.from_stdin) {
        err << "error: kappa needs one of --g6, --edges, --stdin\n"
            << kappa_cmd->help();
        return kExitUsage;
      }
      return RunKappa(kappa, in, out);
    }
    if (*family_cmd) return RunFamily(family, out);
    if (*verify_cmd) return RunVerify(verify, out);
    if (*extremal_cmd) return RunExtremal(extremal, out);
    if (*enumerate_cmd) return RunEnumerate(enumerate, out);
  } catch (const Error& e) {
    err << "error [" << ErrorCodeName(e.code()) << "]: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace extraconn::cli
