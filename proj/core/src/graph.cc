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

#include "extraconn/graph.h"

#include <algorithm>
#include <string>

#include "cutset_search.h"
#include "extraconn/error.h"

namespace extraconn {

VertexSet::VertexSet(std::initializer_list<Vertex> members) {
  for (Vertex v : members) Insert(v);
}

VertexSet VertexSet::FromVector(std::span<const Vertex> members) {
  VertexSet set;
  for (Vertex v : members) set.Insert(v);
  return set;
}

VertexSet VertexSet::Range(int n) {
  if (n >= 64) return VertexSet(~std::uint64_t{0});
  return VertexSet((std::uint64_t{1} << n) - 1);
}

std::vector<Vertex> VertexSet::ToVector() const {
  return std::vector<Vertex>(begin(), end());
}

bool operator<(VertexSet a, VertexSet b) {
  // Lexicographic on sorted member lists: the first differing position
  // decides, and a proper prefix sorts first.
  std::uint64_t x = a.bits_;
  std::uint64_t y = b.bits_;
  while (x != 0 && y != 0) {
    int lx = std::countr_zero(x);
    int ly = std::countr_zero(y);
    if (lx != ly) return lx < ly;
    x &= x - 1;
    y &= y - 1;
  }
  return x == 0 && y != 0;
}

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n), 0) {
  if (n < 0 || n > kMaxOrder) {
    throw Error(ErrorCode::kSizeGuardExceeded,
                "graph order " + std::to_string(n) + " outside [0, " +
                    std::to_string(kMaxOrder) + "]");
  }
}

Graph Graph::FromEdgeList(int n, std::span<const Edge> edges) {
  GraphBuilder builder(n);
  for (const auto& [u, v] : edges) builder.AddEdge(u, v);
  return builder.Build();
}

int Graph::size() const {
  int twice = 0;
  for (std::uint64_t row : adj_) twice += std::popcount(row);
  return twice / 2;
}

int Graph::MinDegree() const {
  int best = n_ == 0 ? 0 : n_;
  for (Vertex v = 0; v < n_; ++v) best = std::min(best, Degree(v));
  return best;
}

int Graph::MaxDegree() const {
  int best = 0;
  for (Vertex v = 0; v < n_; ++v) best = std::max(best, Degree(v));
  return best;
}

std::vector<Edge> Graph::Edges() const {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n_; ++v) {
    for (Vertex u = 0; u < v; ++u) {
      if (HasEdge(u, v)) edges.emplace_back(u, v);
    }
  }
  return edges;
}

Graph Graph::Complement() const {
  Graph out(n_);
  const std::uint64_t all = Vertices().bits();
  for (Vertex v = 0; v < n_; ++v) {
    out.adj_[v] = all & ~adj_[v] & ~(std::uint64_t{1} << v);
  }
  return out;
}

Graph Graph::WithoutEdge(Vertex u, Vertex v) const {
  return GraphBuilder(n_).AddGraph(*this, 0).RemoveEdge(u, v).Build();
}

bool Graph::IsSpanningSubgraphOf(const Graph& other) const {
  if (n_ != other.n_) return false;
  for (Vertex v = 0; v < n_; ++v) {
    if ((adj_[v] & ~other.adj_[v]) != 0) return false;
  }
  return true;
}

GraphBuilder::GraphBuilder(int n) : graph_(n) {}

GraphBuilder& GraphBuilder::AddEdge(Vertex u, Vertex v) {
  const int n = graph_.n_;
  if (u < 0 || u >= n || v < 0 || v >= n) {
    throw Error(ErrorCode::kInvalidVertex,
                "edge (" + std::to_string(u) + ", " + std::to_string(v) +
                    ") has an endpoint outside [0, " + std::to_string(n) +
                    ")");
  }
  if (u == v) {
    throw Error(ErrorCode::kSelfLoopRejected,
                "self-loop at vertex " + std::to_string(u));
  }
  graph_.adj_[u] |= std::uint64_t{1} << v;
  graph_.adj_[v] |= std::uint64_t{1} << u;
  return *this;
}

GraphBuilder& GraphBuilder::AddClique(std::span<const Vertex> members) {
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      AddEdge(members[i], members[j]);
    }
  }
  return *this;
}

GraphBuilder& GraphBuilder::AddBiclique(std::span<const Vertex> left,
                                        std::span<const Vertex> right) {
  for (Vertex u : left) {
    for (Vertex v : right) AddEdge(u, v);
  }
  return *this;
}

GraphBuilder& GraphBuilder::AddGraph(const Graph& sub, int offset) {
  for (const auto& [u, v] : sub.Edges()) AddEdge(u + offset, v + offset);
  return *this;
}

GraphBuilder& GraphBuilder::RemoveEdge(Vertex u, Vertex v) {
  graph_.adj_[u] &= ~(std::uint64_t{1} << v);
  graph_.adj_[v] &= ~(std::uint64_t{1} << u);
  return *this;
}

std::vector<VertexSet> ComponentsAfterRemoval(const Graph& graph,
                                              VertexSet removed) {
  std::vector<VertexSet> components;
  std::uint64_t alive = graph.Vertices().bits() & ~removed.bits();
  while (alive != 0) {
    std::uint64_t component = alive & (~alive + 1);
    std::uint64_t frontier = component;
    while (frontier != 0) {
      std::uint64_t reach = 0;
      for (std::uint64_t f = frontier; f != 0; f &= f - 1) {
        reach |= graph.NeighborBits(std::countr_zero(f));
      }
      frontier = reach & alive & ~component;
      component |= frontier;
    }
    components.emplace_back(component);
    alive &= ~component;
  }
  return components;
}

bool IsConnected(const Graph& graph) {
  return ComponentsAfterRemoval(graph, VertexSet()).size() <= 1;
}

bool IsTree(const Graph& graph) {
  return graph.order() >= 1 && graph.size() == graph.order() - 1 &&
         IsConnected(graph);
}

int Diameter(const Graph& graph) {
  const int n = graph.order();
  const std::uint64_t all = graph.Vertices().bits();
  int diameter = 0;
  for (Vertex source = 0; source < n; ++source) {
    std::uint64_t seen = std::uint64_t{1} << source;
    std::uint64_t frontier = seen;
    int depth = 0;
    while (true) {
      std::uint64_t reach = 0;
      for (std::uint64_t f = frontier; f != 0; f &= f - 1) {
        reach |= graph.NeighborBits(std::countr_zero(f));
      }
      frontier = reach & ~seen;
      if (frontier == 0) break;
      seen |= frontier;
      ++depth;
    }
    if (seen != all) return kInfiniteDiameter;
    diameter = std::max(diameter, depth);
  }
  return diameter;
}

int VertexConnectivity(const Graph& graph) {
  const int n = graph.order();
  if (n > kVertexConnectivityMaxOrder) {
    throw Error(ErrorCode::kSizeGuardExceeded,
                "vertex connectivity is exhaustive; order " +
                    std::to_string(n) + " exceeds " +
                    std::to_string(kVertexConnectivityMaxOrder));
  }
  if (n <= 1) return 0;
  if (!IsConnected(graph)) return 0;
  auto outcome = internal::FindMinimumCutset(graph, 1, 1, n - 2);
  return outcome.cutset ? outcome.cutset->size() : n - 1;
}

bool IsCutVertex(const Graph& graph, Vertex v) {
  VertexSet removed;
  removed.Insert(v);
  return ComponentsAfterRemoval(graph, removed).size() >
         ComponentsAfterRemoval(graph, VertexSet()).size();
}

}  // namespace extraconn
