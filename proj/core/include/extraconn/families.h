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

#ifndef EXTRACONN_FAMILIES_H_
#define EXTRACONN_FAMILIES_H_

#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "extraconn/graph.h"

namespace extraconn {

// Vertex labelings are part of each construction's contract and never change
// between runs. They are listed next to each spec.

// K_n.
struct CompleteSpec {
  int n = 0;
};

// K_{a,b}: the smaller part first, as for the multipartite layout.
struct CompleteBipartiteSpec {
  int a = 0;
  int b = 0;
};

// K_{n_1,...,n_r}: parts are sorted ascending and laid out consecutively.
struct CompleteMultipartiteSpec {
  std::vector<int> parts;
};

// P_n: 0 - 1 - ... - (n-1).
struct PathSpec {
  int n = 0;
};

// C_n: i ~ i+1 (mod n), n >= 3.
struct CycleSpec {
  int n = 0;
};

// K_{1,leaves}: center 0.
struct StarSpec {
  int leaves = 0;
};

// W_n of order n >= 5: hub 0, rim cycle 1..n-1.
struct WheelSpec {
  int n = 0;
};

// K_n with the matching {01, 23, ...} of `matching_size` edges removed.
struct KnMinusMatchingSpec {
  int n = 0;
  int matching_size = 0;
};

// left first, right shifted by |V(left)|.
struct JoinSpec {
  Graph left;
  Graph right;
};

// base vertices first; the copy attached to base vertex i starts at
// |V(base)| + i * |V(attached)|.
struct CoronaSpec {
  Graph base;
  Graph attached;
};

// The tree with a center v adjacent to two subtrees of order g + 1 and to r
// subtrees of order <= g whose orders sum to n - 2g - 3. Labeling: v = 0,
// the two large subtrees, then the small ones in order; v attaches to vertex
// 0 of each subtree. Large subtrees default to paths.
struct TStarSpec {
  int n = 0;
  int g = 0;
  std::vector<Graph> small_subtrees;
  std::optional<std::pair<Graph, Graph>> large_subtrees;
};

// Hub w adjacent to k - 1 pendant vertices and to the centers of r stars
// K_{1,g} and one star K_{1,x}, with g+1 <= x <= 2g and
// n - k = (g+1) r + x + 1. Labeling: w = 0, pendants 1..k-1, then each star
// as center followed by its leaves, the K_{1,x} last.
struct TPrimeSpec {
  int n = 0;
  int g = 0;
  int k = 0;
  int x = 0;
  int r = 0;
};

// Cliques A = K_{n-k-g}, M = K_{k-1}, C = K_{g+1} (in that order) with M
// joined to both A and C. kappa_g = k - 1 with the most edges possible.
struct HkSpec {
  int n = 0;
  int g = 0;
  int k = 0;
};

// Cliques M = K_{n-2g-2}, C1 = K_{g+1}, C2 = K_{g+1} with M joined to both.
struct FkSpec {
  int n = 0;
  int g = 0;
};

// The pair (G, H) showing kappa_g is not monotone under spanning subgraphs
// for g >= 1. Labeling shared by both: u = 0, v = 1, w = 2, then cliques
// X1, X2, Y1, Y2 of `clique_size` vertices each (0 means g + 1).
struct AntiMonotonePairSpec {
  int g = 1;
  int clique_size = 0;
};

// Two cliques A = K_ceil((n-q)/2), B = K_floor((n-q)/2) (A first) plus q
// extra vertices appended after them, q = 2 for index 1-2 and 3 for 3-5:
//   1: u, v each adjacent to a0, a1, b0, b1.
//   2: u pendant on v; v adjacent to all of A and B.
//   3: u, v, w each adjacent to a0, a1, a2, b0, b1, b2.
//   4: u, v adjacent to all of A and B; x adjacent to u and v.
//   5: v adjacent to all of A and B and to pendants x, y.
struct CliquePairExampleSpec {
  int index = 1;
  int n = 0;
};

using ConstructionSpec =
    std::variant<CompleteSpec, CompleteBipartiteSpec, CompleteMultipartiteSpec,
                 PathSpec, CycleSpec, StarSpec, WheelSpec, KnMinusMatchingSpec,
                 JoinSpec, CoronaSpec, TStarSpec, TPrimeSpec, HkSpec, FkSpec,
                 AntiMonotonePairSpec, CliquePairExampleSpec>;

std::string_view ConstructionName(const ConstructionSpec& spec);

// Validates parameters (kInvalidSpec naming the violated inequality) and
// builds the labeled graph. For AntiMonotonePairSpec this is G, the denser
// graph of the pair.
Graph Build(const ConstructionSpec& spec);

// (G, H) with H a spanning subgraph of G.
std::pair<Graph, Graph> BuildAntiMonotonePair(const AntiMonotonePairSpec& spec);

Graph CompleteGraph(int n);
Graph EmptyGraph(int n);
Graph PathGraph(int n);
Graph CycleGraph(int n);
Graph StarGraph(int leaves);
Graph WheelGraph(int n);
Graph CompleteMultipartiteGraph(std::vector<int> parts);

Graph Join(const Graph& left, const Graph& right);
Graph Corona(const Graph& base, const Graph& attached);

Graph TStar(int n, int g, std::span<const Graph> small_subtrees);
Graph TStar(const TStarSpec& spec);
// Paths as small subtrees: as many of order g as fit, then the remainder.
std::vector<Graph> DefaultTStarSubtrees(int n, int g);

Graph TPrime(const TPrimeSpec& spec);
// Some (x, r) completing a valid TPrimeSpec for (n, g, k), if any exists.
std::optional<TPrimeSpec> FindTPrime(int n, int g, int k);

}  // namespace extraconn

#endif  // EXTRACONN_FAMILIES_H_
