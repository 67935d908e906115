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

#include "extraconn/families.h"

#include <algorithm>
#include <numeric>
#include <string>

#include "extraconn/error.h"

namespace extraconn {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void Require(bool condition, const std::string& inequality) {
  if (!condition) {
    throw Error(ErrorCode::kInvalidSpec, "requires " + inequality);
  }
}

std::vector<Vertex> Block(int first, int count) {
  std::vector<Vertex> block(static_cast<std::size_t>(std::max(count, 0)));
  std::iota(block.begin(), block.end(), first);
  return block;
}

Graph BuildKnMinusMatching(const KnMinusMatchingSpec& spec) {
  Require(spec.n >= 1, "n >= 1");
  Require(spec.matching_size >= 0 && 2 * spec.matching_size <= spec.n,
          "0 <= matching_size <= n/2");
  GraphBuilder builder(spec.n);
  builder.AddClique(Block(0, spec.n));
  for (int i = 0; i < spec.matching_size; ++i) {
    builder.RemoveEdge(2 * i, 2 * i + 1);
  }
  return builder.Build();
}

Graph BuildHk(const HkSpec& spec) {
  const auto [n, g, k] = spec;
  Require(k >= 2, "k >= 2");
  Require(g >= 1, "g >= 1");
  Require(2 * g <= n - k - 2, "g <= floor((n - k - 2) / 2)");
  auto big = Block(0, n - k - g);
  auto middle = Block(n - k - g, k - 1);
  auto small = Block(n - g - 1, g + 1);
  GraphBuilder builder(n);
  builder.AddClique(big).AddClique(middle).AddClique(small);
  builder.AddBiclique(big, middle).AddBiclique(small, middle);
  return builder.Build();
}

Graph BuildFk(const FkSpec& spec) {
  const auto [n, g] = spec;
  Require(g >= 1, "g >= 1");
  Require(n - 2 * g - 2 >= 1, "n - 2g - 2 >= 1");
  auto middle = Block(0, n - 2 * g - 2);
  auto first = Block(n - 2 * g - 2, g + 1);
  auto second = Block(n - g - 1, g + 1);
  GraphBuilder builder(n);
  builder.AddClique(middle).AddClique(first).AddClique(second);
  builder.AddBiclique(middle, first).AddBiclique(middle, second);
  return builder.Build();
}

Graph BuildCliquePairExample(const CliquePairExampleSpec& spec) {
  const int n = spec.n;
  Require(spec.index >= 1 && spec.index <= 5, "1 <= index <= 5");
  const int extra = spec.index <= 2 ? 2 : 3;
  const int a_size = (n - extra + 1) / 2;
  const int b_size = (n - extra) / 2;
  const int min_b = spec.index == 1 ? 2 : spec.index == 3 ? 3 : 1;
  Require(b_size >= min_b,
          "floor((n - " + std::to_string(extra) + ") / 2) >= " +
              std::to_string(min_b));
  auto a = Block(0, a_size);
  auto b = Block(a_size, b_size);
  std::vector<Vertex> both = a;
  both.insert(both.end(), b.begin(), b.end());
  const int first_extra = a_size + b_size;
  GraphBuilder builder(n);
  builder.AddClique(a).AddClique(b);
  switch (spec.index) {
    case 1:
    case 3: {
      const int reach = spec.index == 1 ? 2 : 3;
      std::vector<Vertex> anchors = Block(0, reach);
      auto b_anchors = Block(a_size, reach);
      anchors.insert(anchors.end(), b_anchors.begin(), b_anchors.end());
      builder.AddBiclique(Block(first_extra, extra), anchors);
      break;
    }
    case 2: {
      const Vertex u = first_extra;
      const Vertex v = first_extra + 1;
      builder.AddEdge(u, v).AddBiclique(std::vector<Vertex>{v}, both);
      break;
    }
    case 4: {
      const Vertex u = first_extra;
      const Vertex v = first_extra + 1;
      const Vertex x = first_extra + 2;
      builder.AddBiclique(std::vector<Vertex>{u, v}, both);
      builder.AddEdge(u, x).AddEdge(v, x);
      break;
    }
    case 5: {
      const Vertex v = first_extra;
      const Vertex x = first_extra + 1;
      const Vertex y = first_extra + 2;
      builder.AddBiclique(std::vector<Vertex>{v}, both);
      builder.AddEdge(v, x).AddEdge(v, y);
      break;
    }
  }
  return builder.Build();
}

}  // namespace

std::string_view ConstructionName(const ConstructionSpec& spec) {
  return std::visit(
      Overloaded{
          [](const CompleteSpec&) { return std::string_view("complete"); },
          [](const CompleteBipartiteSpec&) {
            return std::string_view("bipartite");
          },
          [](const CompleteMultipartiteSpec&) {
            return std::string_view("multipartite");
          },
          [](const PathSpec&) { return std::string_view("path"); },
          [](const CycleSpec&) { return std::string_view("cycle"); },
          [](const StarSpec&) { return std::string_view("star"); },
          [](const WheelSpec&) { return std::string_view("wheel"); },
          [](const KnMinusMatchingSpec&) {
            return std::string_view("kn-minus-matching");
          },
          [](const JoinSpec&) { return std::string_view("join"); },
          [](const CoronaSpec&) { return std::string_view("corona"); },
          [](const TStarSpec&) { return std::string_view("tstar"); },
          [](const TPrimeSpec&) { return std::string_view("tprime"); },
          [](const HkSpec&) { return std::string_view("hk"); },
          [](const FkSpec&) { return std::string_view("fk"); },
          [](const AntiMonotonePairSpec&) {
            return std::string_view("anti-monotone");
          },
          [](const CliquePairExampleSpec&) {
            return std::string_view("clique-pair");
          },
      },
      spec);
}

Graph CompleteGraph(int n) {
  Require(n >= 1, "n >= 1");
  return GraphBuilder(n).AddClique(Block(0, n)).Build();
}

Graph EmptyGraph(int n) {
  Require(n >= 0, "n >= 0");
  return Graph(n);
}

Graph PathGraph(int n) {
  Require(n >= 1, "n >= 1");
  GraphBuilder builder(n);
  for (int i = 0; i + 1 < n; ++i) builder.AddEdge(i, i + 1);
  return builder.Build();
}

Graph CycleGraph(int n) {
  Require(n >= 3, "n >= 3");
  GraphBuilder builder(n);
  for (int i = 0; i < n; ++i) builder.AddEdge(i, (i + 1) % n);
  return builder.Build();
}

Graph StarGraph(int leaves) {
  Require(leaves >= 1, "leaves >= 1");
  GraphBuilder builder(leaves + 1);
  for (int i = 1; i <= leaves; ++i) builder.AddEdge(0, i);
  return builder.Build();
}

Graph WheelGraph(int n) {
  Require(n >= 5, "n >= 5");
  GraphBuilder builder(n);
  for (int i = 1; i < n; ++i) {
    builder.AddEdge(0, i);
    builder.AddEdge(i, i + 1 < n ? i + 1 : 1);
  }
  return builder.Build();
}

Graph CompleteMultipartiteGraph(std::vector<int> parts) {
  Require(parts.size() >= 2, "at least two parts");
  for (int p : parts) Require(p >= 1, "every part size >= 1");
  std::sort(parts.begin(), parts.end());
  const int n = std::accumulate(parts.begin(), parts.end(), 0);
  GraphBuilder builder(n);
  std::vector<std::vector<Vertex>> blocks;
  int first = 0;
  for (int p : parts) {
    blocks.push_back(Block(first, p));
    first += p;
  }
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (std::size_t j = i + 1; j < blocks.size(); ++j) {
      builder.AddBiclique(blocks[i], blocks[j]);
    }
  }
  return builder.Build();
}

Graph Join(const Graph& left, const Graph& right) {
  const int n = left.order();
  const int m = right.order();
  GraphBuilder builder(n + m);
  builder.AddGraph(left, 0).AddGraph(right, n);
  builder.AddBiclique(Block(0, n), Block(n, m));
  return builder.Build();
}

Graph Corona(const Graph& base, const Graph& attached) {
  const int n = base.order();
  const int m = attached.order();
  GraphBuilder builder(n * (1 + m));
  builder.AddGraph(base, 0);
  for (int i = 0; i < n; ++i) {
    const int offset = n + i * m;
    builder.AddGraph(attached, offset);
    builder.AddBiclique(std::vector<Vertex>{i}, Block(offset, m));
  }
  return builder.Build();
}

std::vector<Graph> DefaultTStarSubtrees(int n, int g) {
  int remaining = n - 2 * g - 3;
  Require(remaining >= 0, "n >= 2g + 3");
  Require(remaining == 0 || g >= 1,
          "sum of small subtree orders = n - 2g - 3 = 0 when g = 0");
  std::vector<Graph> subtrees;
  while (remaining > 0) {
    const int size = std::min(g, remaining);
    subtrees.push_back(PathGraph(size));
    remaining -= size;
  }
  return subtrees;
}

Graph TStar(int n, int g, std::span<const Graph> small_subtrees) {
  return TStar(TStarSpec{
      n, g, std::vector<Graph>(small_subtrees.begin(), small_subtrees.end()),
      std::nullopt});
}

Graph TStar(const TStarSpec& spec) {
  const int n = spec.n;
  const int g = spec.g;
  Require(g >= 0, "g >= 0");
  auto large = spec.large_subtrees.value_or(
      std::make_pair(PathGraph(g + 1), PathGraph(g + 1)));
  Require(large.first.order() == g + 1 && large.second.order() == g + 1,
          "|V(T')| = |V(T'')| = g + 1");
  Require(IsTree(large.first) && IsTree(large.second),
          "T' and T'' are trees");
  int small_total = 0;
  for (const Graph& t : spec.small_subtrees) {
    Require(t.order() >= 1 && t.order() <= g, "1 <= |V(T_i)| <= g");
    Require(IsTree(t), "every T_i is a tree");
    small_total += t.order();
  }
  Require(small_total == n - 2 * g - 3,
          "sum |V(T_i)| = n - 2g - 3 (" + std::to_string(small_total) +
              " != " + std::to_string(n - 2 * g - 3) + ")");

  GraphBuilder builder(n);
  int offset = 1;
  auto attach = [&](const Graph& sub) {
    builder.AddGraph(sub, offset).AddEdge(0, offset);
    offset += sub.order();
  };
  attach(large.first);
  attach(large.second);
  for (const Graph& t : spec.small_subtrees) attach(t);
  return builder.Build();
}

Graph TPrime(const TPrimeSpec& spec) {
  const auto [n, g, k, x, r] = spec;
  Require(k >= 1, "k >= 1");
  Require(r >= 0, "r >= 0");
  Require(g + 1 <= x && x <= 2 * g, "g + 1 <= x <= 2g");
  Require(n - k == (g + 1) * r + x + 1, "n - k = (g + 1) r + x + 1");
  GraphBuilder builder(n);
  int next = 1;
  for (int i = 1; i < k; ++i) builder.AddEdge(0, next++);
  auto add_star = [&](int leaves) {
    const Vertex center = next++;
    builder.AddEdge(0, center);
    for (int i = 0; i < leaves; ++i) builder.AddEdge(center, next++);
  };
  for (int i = 0; i < r; ++i) add_star(g);
  add_star(x);
  return builder.Build();
}

std::optional<TPrimeSpec> FindTPrime(int n, int g, int k) {
  if (k < 1 || g < 1) return std::nullopt;
  for (int x = g + 1; x <= 2 * g; ++x) {
    const int rest = n - k - x - 1;
    if (rest >= 0 && rest % (g + 1) == 0) {
      return TPrimeSpec{n, g, k, x, rest / (g + 1)};
    }
  }
  return std::nullopt;
}

std::pair<Graph, Graph> BuildAntiMonotonePair(
    const AntiMonotonePairSpec& spec) {
  Require(spec.g >= 0, "g >= 0");
  const int s = spec.clique_size == 0 ? spec.g + 1 : spec.clique_size;
  Require(s >= spec.g + 1, "clique size >= g + 1");
  const Vertex u = 0;
  const Vertex v = 1;
  const Vertex w = 2;
  auto x1 = Block(3, s);
  auto x2 = Block(3 + s, s);
  auto y1 = Block(3 + 2 * s, s);
  auto y2 = Block(3 + 3 * s, s);
  const std::vector<Vertex> hub{u};
  const std::vector<Vertex> vw{v, w};

  GraphBuilder dense(3 + 4 * s);
  dense.AddClique(x1).AddClique(x2).AddClique(y1).AddClique(y2);
  dense.AddBiclique(hub, x1).AddBiclique(hub, x2);
  dense.AddBiclique(hub, y1).AddBiclique(hub, y2);
  dense.AddBiclique(vw, y1).AddBiclique(vw, y2);
  dense.AddEdge(u, v).AddEdge(u, w);
  Graph g_graph = dense.Build();

  GraphBuilder sparse(3 + 4 * s);
  sparse.AddGraph(g_graph, 0);
  for (std::size_t i = 0; i < x1.size(); ++i) {
    for (std::size_t j = i + 1; j < x1.size(); ++j) {
      sparse.RemoveEdge(x1[i], x1[j]).RemoveEdge(x2[i], x2[j]);
    }
  }
  for (Vertex y : y1) sparse.RemoveEdge(u, y);
  sparse.RemoveEdge(u, v).RemoveEdge(u, w);
  return {g_graph, sparse.Build()};
}

Graph Build(const ConstructionSpec& spec) {
  return std::visit(
      Overloaded{
          [](const CompleteSpec& s) { return CompleteGraph(s.n); },
          [](const CompleteBipartiteSpec& s) {
            return CompleteMultipartiteGraph({s.a, s.b});
          },
          [](const CompleteMultipartiteSpec& s) {
            return CompleteMultipartiteGraph(s.parts);
          },
          [](const PathSpec& s) { return PathGraph(s.n); },
          [](const CycleSpec& s) { return CycleGraph(s.n); },
          [](const StarSpec& s) { return StarGraph(s.leaves); },
          [](const WheelSpec& s) { return WheelGraph(s.n); },
          [](const KnMinusMatchingSpec& s) { return BuildKnMinusMatching(s); },
          [](const JoinSpec& s) { return Join(s.left, s.right); },
          [](const CoronaSpec& s) { return Corona(s.base, s.attached); },
          [](const TStarSpec& s) { return TStar(s); },
          [](const TPrimeSpec& s) { return TPrime(s); },
          [](const HkSpec& s) { return BuildHk(s); },
          [](const FkSpec& s) { return BuildFk(s); },
          [](const AntiMonotonePairSpec& s) {
            return BuildAntiMonotonePair(s).first;
          },
          [](const CliquePairExampleSpec& s) {
            return BuildCliquePairExample(s);
          },
      },
      spec);
}

}  // namespace extraconn
