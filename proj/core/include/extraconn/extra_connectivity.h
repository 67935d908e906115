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

#ifndef EXTRACONN_EXTRA_CONNECTIVITY_H_
#define EXTRACONN_EXTRA_CONNECTIVITY_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "extraconn/graph.h"

namespace extraconn {

// Outcome of the exact g-extra connectivity search. `value` is empty when the
// graph has no R_g-cutset (kappa_g undefined); `witness` is present exactly
// when `value` is.
struct ExtraConnResult {
  int n = 0;
  int g = 0;
  std::optional<int> value;
  std::optional<VertexSet> witness;
  // Subsets tested, including the vertex-connectivity pre-scan.
  std::uint64_t explored = 0;

  bool defined() const { return value.has_value(); }
};

// Necessary conditions for kappa_g to exist.
struct GFeasibility {
  int g_max_necessary = 0;     // floor((n - 3) / 2)
  long long edge_bound = 0;    // C(n, 2) - (g + 1)^2
  bool passes_edge_bound = false;
  bool g_in_range = false;     // 0 <= g <= g_max_necessary
};

inline constexpr int kDefaultSolverMaxOrder = 20;

// floor((n - 3) / 2), the largest g for which an order-n graph can have an
// R_g-cutset. Negative for n < 3.
int MaxFeasibleG(int n);

// S is an R_g-cutset: G - S has at least two components, each with at least
// g + 1 vertices. Throws kNotConnected for a disconnected G.
bool IsRgCutset(const Graph& graph, VertexSet cutset, int g);

// Minimum R_g-cutset by exhaustive search. Cardinalities are scanned upward
// from max(1, kappa(G)) to n - 2(g + 1); the lexicographically smallest
// minimizer is the witness. Throws kNotConnected for a disconnected graph and
// kSizeGuardExceeded when n > max_order.
ExtraConnResult ExtraConnectivity(const Graph& graph, int g,
                                  int max_order = kDefaultSolverMaxOrder);

GFeasibility CheckGFeasibility(const Graph& graph, int g);

// ExtraConnectivity for g = 0 .. MaxFeasibleG(n).
std::vector<ExtraConnResult> KappaProfile(
    const Graph& graph, int max_order = kDefaultSolverMaxOrder);

// "kappa_g(G) >= k": no R_g-cutset with fewer than k vertices exists, so an
// undefined kappa_g satisfies it for every k.
bool KappaAtLeast(const ExtraConnResult& result, int k);

}  // namespace extraconn

#endif  // EXTRACONN_EXTRA_CONNECTIVITY_H_
