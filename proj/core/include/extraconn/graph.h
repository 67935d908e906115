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

#ifndef EXTRACONN_GRAPH_H_
#define EXTRACONN_GRAPH_H_

#include <bit>
#include <cstdint>
#include <iterator>
#include <limits>
#include <span>
#include <utility>
#include <vector>

namespace extraconn {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

// A set of vertices of some host graph, stored as a 64-bit mask. Ordering
// compares the sorted member lists lexicographically, which is the tie-break
// the cutset search uses.
class VertexSet {
 public:
  class Iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    Iterator() = default;
    explicit Iterator(std::uint64_t rest) : rest_(rest) {}

    Vertex operator*() const { return std::countr_zero(rest_); }
    Iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    Iterator operator++(int) {
      Iterator copy = *this;
      ++*this;
      return copy;
    }
    bool operator==(const Iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  VertexSet(std::initializer_list<Vertex> members);

  static VertexSet FromVector(std::span<const Vertex> members);
  // {0, ..., n-1}.
  static VertexSet Range(int n);

  std::uint64_t bits() const { return bits_; }
  int size() const { return std::popcount(bits_); }
  bool empty() const { return bits_ == 0; }
  bool Contains(Vertex v) const { return (bits_ >> v) & 1U; }
  void Insert(Vertex v) { bits_ |= std::uint64_t{1} << v; }
  void Erase(Vertex v) { bits_ &= ~(std::uint64_t{1} << v); }
  Vertex Min() const { return std::countr_zero(bits_); }
  Vertex Max() const { return 63 - std::countl_zero(bits_); }
  bool IsSubsetOf(VertexSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }

  std::vector<Vertex> ToVector() const;

  Iterator begin() const { return Iterator(bits_); }
  Iterator end() const { return Iterator(0); }

  friend VertexSet operator|(VertexSet a, VertexSet b) {
    return VertexSet(a.bits_ | b.bits_);
  }
  friend VertexSet operator&(VertexSet a, VertexSet b) {
    return VertexSet(a.bits_ & b.bits_);
  }
  friend VertexSet operator-(VertexSet a, VertexSet b) {
    return VertexSet(a.bits_ & ~b.bits_);
  }
  friend bool operator==(VertexSet a, VertexSet b) = default;
  friend bool operator<(VertexSet a, VertexSet b);

 private:
  std::uint64_t bits_ = 0;
};

// Immutable simple undirected graph on vertices {0, ..., n-1}, n <= 64.
// Adjacency is one bitset row per vertex. Build through GraphBuilder or
// Graph::FromEdgeList.
class Graph {
 public:
  static constexpr int kMaxOrder = 64;

  Graph() = default;
  // Edgeless graph on n vertices.
  explicit Graph(int n);

  // Throws kInvalidVertex for an endpoint outside [0, n) and
  // kSelfLoopRejected for a (v, v) pair. Duplicate pairs collapse.
  static Graph FromEdgeList(int n, std::span<const Edge> edges);

  int order() const { return n_; }
  int size() const;

  VertexSet Vertices() const { return VertexSet::Range(n_); }
  VertexSet Neighbors(Vertex v) const { return VertexSet(adj_[v]); }
  std::uint64_t NeighborBits(Vertex v) const { return adj_[v]; }
  bool HasEdge(Vertex u, Vertex v) const { return (adj_[u] >> v) & 1U; }
  int Degree(Vertex v) const { return std::popcount(adj_[v]); }
  int MinDegree() const;
  int MaxDegree() const;

  // Edges (u, v) with u < v, ordered by v then u (the graph6 bit order).
  std::vector<Edge> Edges() const;

  Graph Complement() const;
  Graph WithoutEdge(Vertex u, Vertex v) const;
  bool IsSpanningSubgraphOf(const Graph& other) const;
  bool IsComplete() const { return size() == n_ * (n_ - 1) / 2; }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend class GraphBuilder;

  int n_ = 0;
  std::vector<std::uint64_t> adj_;
};

class GraphBuilder {
 public:
  explicit GraphBuilder(int n);

  int order() const { return graph_.n_; }
  // Same error contract as Graph::FromEdgeList.
  GraphBuilder& AddEdge(Vertex u, Vertex v);
  GraphBuilder& AddClique(std::span<const Vertex> members);
  // Every edge between the two vertex lists.
  GraphBuilder& AddBiclique(std::span<const Vertex> left,
                            std::span<const Vertex> right);
  // Copies `sub` in with vertex i mapped to offset + i.
  GraphBuilder& AddGraph(const Graph& sub, int offset);
  GraphBuilder& RemoveEdge(Vertex u, Vertex v);

  Graph Build() const { return graph_; }

 private:
  Graph graph_;
};

inline constexpr int kInfiniteDiameter = std::numeric_limits<int>::max();

bool IsConnected(const Graph& graph);
bool IsTree(const Graph& graph);

// Connected components of G - removed, ordered by minimum vertex.
std::vector<VertexSet> ComponentsAfterRemoval(const Graph& graph,
                                              VertexSet removed);

// kInfiniteDiameter when the graph is disconnected; 0 for n <= 1.
int Diameter(const Graph& graph);

// Minimum number of vertices whose removal disconnects the graph or leaves a
// single vertex: n - 1 for complete graphs, 0 when disconnected. Exhaustive
// subset search; throws kSizeGuardExceeded above kVertexConnectivityMaxOrder.
inline constexpr int kVertexConnectivityMaxOrder = 24;
int VertexConnectivity(const Graph& graph);

// v is a cut vertex when G - v has more components than G.
bool IsCutVertex(const Graph& graph, Vertex v);

}  // namespace extraconn

#endif  // EXTRACONN_GRAPH_H_
