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

#include "extraconn/enumeration.h"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <string>

#include "extraconn/error.h"

namespace extraconn {

namespace {

int PairCount(int n) { return n * (n - 1) / 2; }

int PairIndex(int u, int v) {
  if (u > v) std::swap(u, v);
  return v * (v - 1) / 2 + u;
}

void RequireOrder(int n, int lo, int hi, const char* what) {
  if (n < lo || n > hi) {
    throw Error(ErrorCode::kSizeGuardExceeded,
                std::string(what) + " requires " + std::to_string(lo) +
                    " <= n <= " + std::to_string(hi) + ", got " +
                    std::to_string(n));
  }
}

Graph GraphFromCode(int n, std::uint64_t code) {
  const int pairs = PairCount(n);
  GraphBuilder builder(n);
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      if ((code >> (pairs - 1 - PairIndex(u, v))) & 1U) builder.AddEdge(u, v);
    }
  }
  return builder.Build();
}

// Canonical codes of every unlabeled graph of order n, sorted. Level n is
// built by adding a vertex with every neighborhood to each class of level
// n - 1; levels are cached for the process lifetime.
const std::vector<std::uint64_t>& IsomorphismClasses(int n) {
  static std::mutex mutex;
  static std::map<int, std::vector<std::uint64_t>> cache = {{1, {0}}};
  std::lock_guard<std::mutex> lock(mutex);
  for (int level = cache.rbegin()->first + 1; level <= n; ++level) {
    std::set<std::uint64_t> codes;
    for (std::uint64_t code : cache.at(level - 1)) {
      const Graph base = GraphFromCode(level - 1, code);
      for (std::uint64_t nbrs = 0; nbrs < (std::uint64_t{1} << (level - 1));
           ++nbrs) {
        GraphBuilder builder(level);
        builder.AddGraph(base, 0);
        for (int u = 0; u < level - 1; ++u) {
          if ((nbrs >> u) & 1U) builder.AddEdge(u, level - 1);
        }
        codes.insert(CanonicalCode(builder.Build()));
      }
    }
    cache.emplace(level, std::vector<std::uint64_t>(codes.begin(), codes.end()));
  }
  return cache.at(n);
}

}  // namespace

Graph GraphFromEdgeMask(int n, std::uint64_t mask) {
  GraphBuilder builder(n);
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      if ((mask >> PairIndex(u, v)) & 1U) builder.AddEdge(u, v);
    }
  }
  return builder.Build();
}

std::uint64_t EdgeMask(const Graph& graph) {
  std::uint64_t mask = 0;
  for (const auto& [u, v] : graph.Edges()) {
    mask |= std::uint64_t{1} << PairIndex(u, v);
  }
  return mask;
}

void ForEachGraph(int n, const EnumerationOptions& options,
                  const GraphVisitor& visit) {
  RequireOrder(n, 1, kMaxEnumerationOrder, "graph enumeration");
  if (options.dedupe) {
    for (std::uint64_t code : IsomorphismClasses(n)) {
      Graph graph = GraphFromCode(n, code);
      if (!options.connected_only || IsConnected(graph)) visit(graph);
    }
    return;
  }
  const std::uint64_t limit = std::uint64_t{1} << PairCount(n);
  const std::uint64_t end = std::min(limit, options.mask_end);
  for (std::uint64_t mask = options.mask_begin; mask < end; ++mask) {
    Graph graph = GraphFromEdgeMask(n, mask);
    if (!options.connected_only || IsConnected(graph)) visit(graph);
  }
}

std::vector<Graph> EnumerateConnectedGraphs(int n, bool dedupe) {
  std::vector<Graph> graphs;
  EnumerationOptions options;
  options.dedupe = dedupe;
  ForEachGraph(n, options, [&](const Graph& g) { graphs.push_back(g); });
  return graphs;
}

Graph DecodePrufer(int n, std::span<const int> sequence) {
  if (n < 2 || static_cast<int>(sequence.size()) != n - 2) {
    throw Error(ErrorCode::kInvalidSpec,
                "a Pruefer sequence for n vertices has n - 2 entries");
  }
  std::vector<int> degree(static_cast<std::size_t>(n), 1);
  for (int a : sequence) {
    if (a < 0 || a >= n) {
      throw Error(ErrorCode::kInvalidVertex,
                  "Pruefer entry " + std::to_string(a) + " outside [0, n)");
    }
    ++degree[a];
  }
  GraphBuilder builder(n);
  for (int a : sequence) {
    int leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    builder.AddEdge(leaf, a);
    --degree[leaf];
    --degree[a];
  }
  int u = -1;
  for (int v = 0; v < n; ++v) {
    if (degree[v] != 1) continue;
    if (u < 0) {
      u = v;
    } else {
      builder.AddEdge(u, v);
      break;
    }
  }
  return builder.Build();
}

void ForEachLabeledTree(int n, const GraphVisitor& visit) {
  RequireOrder(n, 2, kMaxTreeEnumerationOrder, "labeled tree enumeration");
  std::vector<int> sequence(static_cast<std::size_t>(n - 2), 0);
  while (true) {
    visit(DecodePrufer(n, sequence));
    int pos = n - 3;
    while (pos >= 0 && sequence[pos] == n - 1) sequence[pos--] = 0;
    if (pos < 0) break;
    ++sequence[pos];
  }
}

std::vector<Graph> EnumerateLabeledTrees(int n) {
  std::vector<Graph> trees;
  ForEachLabeledTree(n, [&](const Graph& t) { trees.push_back(t); });
  return trees;
}

std::uint64_t CanonicalCode(const Graph& graph) {
  const int n = graph.order();
  RequireOrder(n, 0, kMaxCanonicalOrder, "canonical form");
  const int pairs = PairCount(n);
  const auto edges = graph.Edges();
  std::array<int, kMaxCanonicalOrder> perm{};
  std::iota(perm.begin(), perm.begin() + n, 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t code = 0;
    for (const auto& [u, v] : edges) {
      code |= std::uint64_t{1} << (pairs - 1 - PairIndex(perm[u], perm[v]));
    }
    best = std::min(best, code);
  } while (std::next_permutation(perm.begin(), perm.begin() + n));
  return best;
}

Graph CanonicalForm(const Graph& graph) {
  return GraphFromCode(graph.order(), CanonicalCode(graph));
}

bool AreIsomorphic(const Graph& a, const Graph& b) {
  return a.order() == b.order() && a.size() == b.size() &&
         CanonicalCode(a) == CanonicalCode(b);
}

}  // namespace extraconn
