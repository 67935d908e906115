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

#include "extraconn/verification.h"

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <utility>

#include "extraconn/characterizations.h"
#include "extraconn/enumeration.h"
#include "extraconn/error.h"
#include "extraconn/extra_connectivity.h"
#include "extraconn/families.h"
#include "extraconn/graph_io.h"
#include "extraconn/parallel.h"

namespace extraconn {

namespace {

struct Outcome {
  bool excluded = false;
  bool flagged = false;  // counted into the theorem's note
  std::string graph6;    // filled by the driver for stream instances
  int g = 0;
  ClaimValue expected;
  ClaimValue got;
  std::string params;
};

using GraphCheck =
    std::function<std::vector<Outcome>(const Graph&, std::optional<int>)>;
using BuiltinTask = std::function<std::vector<Outcome>()>;
using BuiltinPlan = std::function<std::vector<BuiltinTask>(std::optional<int>)>;

struct Theorem {
  TheoremInfo info;
  InstanceSource::Kind default_kind = InstanceSource::Kind::kConnectedGraphs;
  int default_min_n = 1;
  int default_max_n = 6;
  GraphCheck check;    // graph-stream statements
  BuiltinPlan plan;    // self-generating statements
  std::string flag_note;
};

ClaimValue FromOptional(std::optional<int> value) {
  if (value) return *value;
  return std::monostate{};
}

std::vector<int> GValues(int lo, int hi, std::optional<int> only) {
  std::vector<int> values;
  for (int g = lo; g <= hi; ++g) {
    if (!only || *only == g) values.push_back(g);
  }
  return values;
}

Outcome Compare(int g, ClaimValue expected, ClaimValue got) {
  Outcome out;
  out.g = g;
  out.expected = std::move(expected);
  out.got = std::move(got);
  return out;
}

Outcome Excluded(int g) {
  Outcome out;
  out.excluded = true;
  out.g = g;
  return out;
}

std::optional<int> Kappa(const Graph& graph, int g) {
  return ExtraConnectivity(graph, g, Graph::kMaxOrder).value;
}

// Statements of the form "kappa_g(G) = value <=> predicate(G, g)".
GraphCheck Equivalence(std::function<int(int n, int g)> value,
                       std::function<bool(const Graph&, int)> predicate,
                       int min_g = 0) {
  return [=](const Graph& graph, std::optional<int> only) {
    std::vector<Outcome> out;
    const int n = graph.order();
    for (int g : GValues(min_g, MaxFeasibleG(n), only)) {
      auto kappa = Kappa(graph, g);
      out.push_back(Compare(g, predicate(graph, g),
                            kappa.has_value() && *kappa == value(n, g)));
    }
    return out;
  };
}

std::vector<Outcome> CheckKappa3(const Graph& graph, std::optional<int> only,
                                 Kappa3Reading reading) {
  std::vector<Outcome> out;
  const int n = graph.order();
  for (int g : GValues(0, MaxFeasibleG(n), only)) {
    if (g < 1 || 2 * g > n - 5) {
      out.push_back(Excluded(g));
      continue;
    }
    auto kappa = Kappa(graph, g);
    out.push_back(Compare(g, CharacterizeKappa3(graph, g, reading),
                          kappa.has_value() && *kappa == 3));
  }
  return out;
}

std::vector<Outcome> CheckKappa0(const Graph& graph, std::optional<int> only) {
  if (only && *only != 0) return {};
  if (graph.IsComplete()) return {Excluded(0)};
  return {Compare(0, VertexConnectivity(graph), FromOptional(Kappa(graph, 0)))};
}

std::vector<Outcome> CheckMatching(const Graph& graph,
                                   std::optional<int> only) {
  const int n = graph.order();
  if ((only && *only != 0) || n < 3) return {};
  auto kappa = Kappa(graph, 0);
  Outcome out = Compare(0, IsKnMinusMatching(graph) && !graph.IsComplete(),
                        kappa.has_value() && *kappa == n - 2);
  out.flagged = graph.IsComplete();
  return {out};
}

std::vector<Outcome> CheckTree(const Graph& graph, std::optional<int> only) {
  std::vector<Outcome> out;
  const int n = graph.order();
  if (!IsTree(graph)) {
    for (int g : GValues(0, MaxFeasibleG(n), only)) out.push_back(Excluded(g));
    return out;
  }
  for (int g : GValues(0, MaxFeasibleG(n), only)) {
    auto kappa = Kappa(graph, g);
    out.push_back(Compare(g, IsTStar(graph, g),
                          kappa.has_value() && *kappa == n - 2 * g - 2));
  }
  return out;
}

std::vector<Outcome> CheckMonotone(const Graph& graph, std::optional<int>) {
  auto profile = KappaProfile(graph, Graph::kMaxOrder);
  int bad_g = 0;
  bool ok = true;
  for (std::size_t i = 1; i < profile.size() && ok; ++i) {
    const auto& prev = profile[i - 1];
    const auto& cur = profile[i];
    if ((!prev.defined() && cur.defined()) ||
        (prev.defined() && cur.defined() && *cur.value < *prev.value)) {
      ok = false;
      bad_g = cur.g;
    }
  }
  return {Compare(bad_g, true, ok)};
}

std::vector<Outcome> CheckFeasibility(const Graph& graph,
                                      std::optional<int> only) {
  std::vector<Outcome> out;
  for (int g : GValues(0, graph.order(), only)) {
    auto kappa = Kappa(graph, g);
    auto feasibility = CheckGFeasibility(graph, g);
    const bool holds = !kappa.has_value() ||
                       (feasibility.g_in_range && feasibility.passes_edge_bound);
    out.push_back(Compare(g, true, holds));
  }
  return out;
}

std::vector<Outcome> CheckBounds(const Graph& graph, std::optional<int> only) {
  std::vector<Outcome> out;
  const int n = graph.order();
  const int kappa = VertexConnectivity(graph);
  for (int g : GValues(0, MaxFeasibleG(n), only)) {
    auto value = Kappa(graph, g);
    Outcome o = Compare(
        g, true,
        !value.has_value() || (kappa <= *value && *value <= n - 2 * g - 2));
    o.flagged = !value.has_value() && 2 * g <= n - kappa - 2;
    out.push_back(o);
  }
  return out;
}

std::vector<Outcome> CheckDiameter(const Graph& graph,
                                   std::optional<int> only) {
  std::vector<Outcome> out;
  const int n = graph.order();
  const int diameter = Diameter(graph);
  for (int g : GValues(0, diameter / 2 - 1, only)) {
    auto value = Kappa(graph, g);
    if (!value) {
      out.push_back(Excluded(g));
      continue;
    }
    out.push_back(Compare(g, true, *value <= n - diameter));
  }
  return out;
}

// Single-edge deletions suffice: any connected spanning subgraph is reached
// through a chain of connected, non-complete spanning subgraphs.
std::vector<Outcome> CheckSpanning(const Graph& graph,
                                   std::optional<int> only) {
  if (only && *only != 0) return {};
  if (graph.IsComplete()) return {Excluded(0)};
  const int parent = *Kappa(graph, 0);
  std::vector<Outcome> out;
  for (const auto& [u, v] : graph.Edges()) {
    Graph sub = graph.WithoutEdge(u, v);
    if (!IsConnected(sub)) continue;
    auto child = Kappa(sub, 0);
    Outcome o = Compare(0, true, !child.has_value() || *child <= parent);
    o.params = "spanning=" + ToGraph6(sub);
    out.push_back(o);
  }
  return out;
}

// Built-in instance generators.

struct Named {
  std::string name;
  Graph graph;
};

std::vector<Named> ProductOperands(bool with_star) {
  std::vector<Named> ops;
  for (int n = 3; n <= 5; ++n) ops.push_back({"P" + std::to_string(n), PathGraph(n)});
  for (int n = 3; n <= 5; ++n) ops.push_back({"C" + std::to_string(n), CycleGraph(n)});
  if (with_star) ops.push_back({"K1,3", StarGraph(3)});
  return ops;
}

Outcome CompareKappa(const Graph& graph, int g, std::optional<int> predicted,
                     std::string params) {
  Outcome o = Compare(g, FromOptional(predicted), FromOptional(Kappa(graph, g)));
  o.graph6 = ToGraph6(graph);
  o.params = std::move(params);
  return o;
}

std::vector<BuiltinTask> PlanJoin(std::optional<int> only) {
  std::vector<BuiltinTask> tasks;
  auto ops = ProductOperands(true);
  for (const auto& left : ops) {
    for (const auto& right : ops) {
      tasks.push_back([left, right, only] {
        const Graph joined = Join(left.graph, right.graph);
        std::vector<Outcome> out;
        for (int g : GValues(0, MaxFeasibleG(joined.order()), only)) {
          auto p = PredictJoin(left.graph, right.graph, g);
          out.push_back(CompareKappa(
              joined, g, p.value,
              "left=" + left.name + " right=" + right.name +
                  " rule=" + std::string(PredictionRuleName(p.rule))));
        }
        return out;
      });
    }
  }
  return tasks;
}

std::vector<BuiltinTask> PlanCorona(std::optional<int> only) {
  std::vector<BuiltinTask> tasks;
  const std::vector<Named> attached = {
      {"K1", CompleteGraph(1)}, {"K2", CompleteGraph(2)}, {"P3", PathGraph(3)}};
  for (const auto& base : ProductOperands(false)) {
    for (const auto& att : attached) {
      const Graph product = Corona(base.graph, att.graph);
      for (int g : GValues(0, MaxFeasibleG(product.order()), only)) {
        tasks.push_back([base, att, product, g] {
          auto p = PredictCorona(base.graph, att.graph, g);
          return std::vector<Outcome>{CompareKappa(
              product, g, p.value,
              "base=" + base.name + " attached=" + att.name +
                  " rule=" + std::string(PredictionRuleName(p.rule)))};
        });
      }
    }
  }
  return tasks;
}

BuiltinTask FamilyTask(ConstructionSpec spec, std::string params,
                       std::vector<int> gs) {
  return [spec = std::move(spec), params = std::move(params),
          gs = std::move(gs)] {
    const Graph graph = Build(spec);
    std::vector<Outcome> out;
    for (int g : gs) {
      out.push_back(CompareKappa(graph, g, PredictFamily(spec, g).value, params));
    }
    return out;
  };
}

std::vector<BuiltinTask> PlanFamilies(std::optional<int> only) {
  std::vector<BuiltinTask> tasks;
  auto add = [&](ConstructionSpec spec, std::string params, std::vector<int> gs) {
    if (!gs.empty()) tasks.push_back(FamilyTask(std::move(spec), std::move(params), std::move(gs)));
  };
  for (int a = 2; a <= 5; ++a) {
    for (int b = 2; b <= a; ++b) {
      add(CompleteBipartiteSpec{a, b},
          "K" + std::to_string(a) + "," + std::to_string(b),
          GValues(0, MaxFeasibleG(a + b), only));
    }
  }
  for (const std::vector<int>& parts :
       std::vector<std::vector<int>>{{2, 2, 3}, {1, 2, 3}, {2, 2, 2}, {1, 1, 4}}) {
    std::string name = "K";
    for (int p : parts) name += std::to_string(p) + ",";
    name.pop_back();
    int n = 0;
    for (int p : parts) n += p;
    add(CompleteMultipartiteSpec{parts}, name, GValues(0, MaxFeasibleG(n), only));
  }
  for (int n = 5; n <= 9; ++n) {
    add(WheelSpec{n}, "W" + std::to_string(n), GValues(0, MaxFeasibleG(n), only));
  }
  for (int n = 3; n <= 9; ++n) {
    add(PathSpec{n}, "P" + std::to_string(n), GValues(0, MaxFeasibleG(n), only));
  }
  for (int n = 3; n <= 9; ++n) {
    for (int g : GValues(0, MaxFeasibleG(n), only)) {
      const int rest = n - 2 * g - 3;
      if (rest > 0 && g == 0) continue;
      std::vector<std::vector<Graph>> shapes = {DefaultTStarSubtrees(n, g)};
      if (rest > 0) {
        shapes.push_back(std::vector<Graph>(static_cast<std::size_t>(rest),
                                            PathGraph(1)));
      }
      for (std::size_t i = 0; i < shapes.size(); ++i) {
        TStarSpec spec{n, g, shapes[i], std::nullopt};
        add(spec, "T*(n=" + std::to_string(n) + ",g=" + std::to_string(g) +
                      ",shape=" + std::to_string(i) + ")", {g});
        if (g >= 2) {
          spec.large_subtrees = std::make_pair(StarGraph(g), PathGraph(g + 1));
          add(spec, "T*(n=" + std::to_string(n) + ",g=" + std::to_string(g) +
                        ",shape=" + std::to_string(i) + ",star)", {g});
        }
      }
    }
  }
  for (int n = 4; n <= 9; ++n) {
    for (int g = 1; 2 * g <= n - 3; ++g) {
      if (only && *only != g) continue;
      for (int k = 1; 2 * g <= n - k - 2; ++k) {
        const std::string tag = "(n=" + std::to_string(n) + ",g=" +
                                std::to_string(g) + ",k=" + std::to_string(k) + ")";
        if (auto spec = FindTPrime(n, g, k)) add(*spec, "T'" + tag, {g});
        if (k >= 2) add(HkSpec{n, g, k}, "H_k" + tag, {g});
      }
    }
  }
  return tasks;
}

std::vector<BuiltinTask> PlanCliquePairs(std::optional<int> only) {
  std::vector<BuiltinTask> tasks;
  for (int index = 1; index <= 5; ++index) {
    for (int n = 7; n <= 12; ++n) {
      tasks.push_back([index, n, only] {
        std::vector<Outcome> out;
        const CliquePairExampleSpec spec{index, n};
        Graph graph;
        try {
          graph = Build(spec);
        } catch (const Error&) {
          return out;
        }
        const std::string params = "H" + std::to_string(index) +
                                   "(n=" + std::to_string(n) + ")";
        for (int g : GValues(0, MaxFeasibleG(n), only)) {
          std::optional<Prediction> p;
          try {
            p = PredictFamily(spec, g);
          } catch (const Error&) {
            continue;
          }
          out.push_back(CompareKappa(graph, g, p->value, params));
          if (index <= 2) {
            Outcome o = Compare(g, true, CharacterizeKappa2(graph, g));
            o.graph6 = ToGraph6(graph);
            o.params = params + " characterization";
            out.push_back(o);
          } else if (g >= 1 && 2 * g <= n - 5) {
            Outcome o = Compare(g, true, CharacterizeKappa3(graph, g));
            o.graph6 = ToGraph6(graph);
            o.params = params + " characterization";
            out.push_back(o);
          }
        }
        return out;
      });
    }
  }
  return tasks;
}

std::vector<BuiltinTask> PlanAntiMonotone(std::optional<int> only) {
  std::vector<BuiltinTask> tasks;
  for (const auto& [g, size] :
       std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 3}}) {
    if (only && *only != g) continue;
    tasks.push_back([g = g, size = size] {
      auto [dense, sparse] = BuildAntiMonotonePair({g, size});
      const std::string params = "g=" + std::to_string(g) +
                                 " clique=" + std::to_string(size);
      Outcome spanning = Compare(g, true, sparse.IsSpanningSubgraphOf(dense));
      spanning.graph6 = ToGraph6(sparse);
      spanning.params = params + " spanning";
      return std::vector<Outcome>{
          CompareKappa(dense, g, 1, params + " dense"),
          CompareKappa(sparse, g, 2, params + " sparse"), spanning};
    });
  }
  return tasks;
}

const std::vector<Theorem>& Registry() {
  using Kind = InstanceSource::Kind;
  static const std::vector<Theorem> registry = [] {
    std::vector<Theorem> r;
    auto stream = [&](std::string id, std::string summary, GraphCheck check,
                      std::string note = {}) {
      Theorem t;
      t.info = {std::move(id), std::move(summary), {}};
      t.check = std::move(check);
      t.flag_note = std::move(note);
      r.push_back(std::move(t));
      return &r.back();
    };
    auto builtin = [&](std::string id, std::string summary, BuiltinPlan plan) {
      Theorem t;
      t.info = {std::move(id), std::move(summary), {}};
      t.default_kind = Kind::kDefault;
      t.plan = std::move(plan);
      r.push_back(std::move(t));
    };
    r.reserve(32);
    stream("obs4.1-k1", "kappa_g = 1 iff a cut vertex leaves only large parts",
           Equivalence([](int, int) { return 1; }, CharacterizeKappa1));
    stream("thm4.1-k2", "kappa_g = 2 characterization",
           Equivalence([](int, int) { return 2; }, CharacterizeKappa2));
    stream("thm4.3-k3", "kappa_g = 3 characterization, corrected reading",
           [](const Graph& graph, std::optional<int> g) {
             return CheckKappa3(graph, g, Kappa3Reading::Corrected());
           });
    stream("thm4.3-k3-literal", "kappa_g = 3 characterization as stated",
           [](const Graph& graph, std::optional<int> g) {
             return CheckKappa3(graph, g, Kappa3Reading::AsStated());
           });
    stream("obs4.2", "kappa_0 = n - 2 iff K_n minus a nonempty matching",
           CheckMatching, "complete graphs seen (empty matching, kappa_0 undefined)");
    Theorem* trees = stream("lemma4.1-tstar",
                            "a tree has kappa_g = n - 2g - 2 iff it is T_n*",
                            CheckTree);
    trees->default_kind = Kind::kLabeledTrees;
    trees->default_min_n = 2;
    trees->default_max_n = 8;
    stream("prop1.1-monotone", "kappa profiles are non-decreasing",
           CheckMonotone);
    stream("prop1.3-feasibility",
           "kappa_g defined implies g <= floor((n-3)/2) and the edge bound",
           CheckFeasibility);
    stream("prop3.1-bounds", "kappa <= kappa_g <= n - 2g - 2", CheckBounds,
           "instances with kappa_g undefined for g <= floor((n-kappa-2)/2)");
    stream("prop3.2-diameter", "kappa_g <= n - diam for g <= floor(diam/2) - 1",
           CheckDiameter);
    stream("obs1.2-spanning",
           "kappa_0 never grows when an edge is removed (connected result)",
           CheckSpanning);
    stream("kappa0-equals-kappa", "kappa_0 = kappa for non-complete graphs",
           CheckKappa0);
    builtin("thm2.1-join", "join formula over small paths, cycles and K1,3",
            PlanJoin);
    builtin("thm2.2-corona", "corona formula over small paths and cycles",
            PlanCorona);
    builtin("families", "closed forms for multipartite, wheel, path, T*, T', H_k",
            PlanFamilies);
    builtin("clique-pair-examples",
            "the five clique-pair examples and their characterizations",
            PlanCliquePairs);
    builtin("anti-monotone-pair",
            "a spanning subgraph with larger kappa_g for g >= 1",
            PlanAntiMonotone);
    return r;
  }();
  return registry;
}

const Theorem& Lookup(std::string_view id) {
  for (const auto& t : Registry()) {
    if (t.info.id == id) return t;
  }
  throw Error(ErrorCode::kUnknownTheorem,
              "unknown theorem id '" + std::string(id) + "'");
}

void Merge(VerificationReport& report, std::vector<Outcome>& outcomes,
           std::uint64_t& flagged) {
  for (auto& o : outcomes) {
    if (o.excluded) {
      ++report.excluded;
      continue;
    }
    ++report.checked;
    if (o.flagged) ++flagged;
    if (o.expected != o.got) {
      report.failures.push_back(Certificate{std::move(o.graph6), o.g,
                                            o.expected, o.got,
                                            std::move(o.params)});
    }
  }
}

constexpr std::size_t kBatchSize = 2048;

void RunBatch(const Theorem& theorem, std::vector<Graph>& batch,
              std::optional<int> g, VerificationReport& report,
              std::uint64_t& flagged) {
  auto results = ParallelMap<std::vector<Outcome>>(
      batch.size(), [&](std::size_t i) {
        auto out = theorem.check(batch[i], g);
        const std::string code = ToGraph6(batch[i]);
        for (auto& o : out) {
          if (o.graph6.empty()) o.graph6 = code;
        }
        ++ProgressCounter();
        return out;
      });
  for (auto& r : results) Merge(report, r, flagged);
  batch.clear();
}

}  // namespace

std::string ClaimValueToString(const ClaimValue& value) {
  if (std::holds_alternative<int>(value)) {
    return std::to_string(std::get<int>(value));
  }
  if (std::holds_alternative<bool>(value)) {
    return std::get<bool>(value) ? "true" : "false";
  }
  return "null";
}

InstanceSource InstanceSource::ConnectedGraphs(int min_n, int max_n,
                                               bool dedupe) {
  InstanceSource source;
  source.kind = Kind::kConnectedGraphs;
  source.min_n = min_n;
  source.max_n = max_n;
  source.dedupe = dedupe;
  return source;
}

InstanceSource InstanceSource::LabeledTrees(int min_n, int max_n) {
  InstanceSource source;
  source.kind = Kind::kLabeledTrees;
  source.min_n = min_n;
  source.max_n = max_n;
  return source;
}

InstanceSource InstanceSource::Graphs(std::vector<Graph> graphs) {
  InstanceSource source;
  source.kind = Kind::kGraphs;
  source.graphs = std::move(graphs);
  return source;
}

InstanceSource& InstanceSource::WithG(int value) {
  g = value;
  return *this;
}

std::vector<TheoremInfo> ListTheorems() {
  std::vector<TheoremInfo> out;
  for (const auto& t : Registry()) {
    TheoremInfo info = t.info;
    if (t.plan) {
      info.source = "built-in";
    } else if (t.default_kind == InstanceSource::Kind::kLabeledTrees) {
      info.source = "labeled-trees";
    } else {
      info.source = "connected-graphs";
    }
    out.push_back(std::move(info));
  }
  return out;
}

bool IsKnownTheorem(std::string_view id) {
  return std::any_of(Registry().begin(), Registry().end(),
                     [&](const Theorem& t) { return t.info.id == id; });
}

VerificationReport VerifyTheorem(std::string_view theorem_id,
                                 const InstanceSource& source) {
  const Theorem& theorem = Lookup(theorem_id);
  VerificationReport report;
  report.theorem = theorem.info.id;
  std::uint64_t flagged = 0;

  if (theorem.plan) {
    auto tasks = theorem.plan(source.g);
    auto results = ParallelMap<std::vector<Outcome>>(
        tasks.size(), [&](std::size_t i) {
          auto out = tasks[i]();
          ++ProgressCounter();
          return out;
        });
    for (auto& r : results) Merge(report, r, flagged);
    return report;
  }

  InstanceSource::Kind kind = source.kind;
  int min_n = source.min_n;
  int max_n = source.max_n;
  if (kind == InstanceSource::Kind::kDefault) {
    kind = theorem.default_kind;
    min_n = theorem.default_min_n;
    max_n = theorem.default_max_n;
  }

  std::vector<Graph> batch;
  auto push = [&](const Graph& graph) {
    batch.push_back(graph);
    if (batch.size() >= kBatchSize) {
      RunBatch(theorem, batch, source.g, report, flagged);
    }
  };
  switch (kind) {
    case InstanceSource::Kind::kConnectedGraphs: {
      EnumerationOptions options;
      options.dedupe = source.dedupe;
      for (int n = std::max(1, min_n); n <= max_n; ++n) {
        ForEachGraph(n, options, push);
      }
      break;
    }
    case InstanceSource::Kind::kLabeledTrees:
      for (int n = std::max(2, min_n); n <= max_n; ++n) {
        ForEachLabeledTree(n, push);
      }
      break;
    case InstanceSource::Kind::kGraphs:
      for (const Graph& graph : source.graphs) {
        if (!IsConnected(graph)) {
          throw Error(ErrorCode::kNotConnected,
                      "corpus graph " + ToGraph6(graph) + " is disconnected");
        }
        push(graph);
      }
      break;
    case InstanceSource::Kind::kDefault:
      break;
  }
  if (!batch.empty()) RunBatch(theorem, batch, source.g, report, flagged);
  if (!theorem.flag_note.empty() && flagged > 0) {
    report.notes.push_back(std::to_string(flagged) + " " + theorem.flag_note);
  }
  return report;
}

}  // namespace extraconn
