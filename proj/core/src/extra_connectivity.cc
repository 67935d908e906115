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

#include "extraconn/extra_connectivity.h"

#include <algorithm>
#include <string>

#include "cutset_search.h"
#include "extraconn/error.h"

namespace extraconn {

namespace {

void RequireConnected(const Graph& graph) {
  if (!IsConnected(graph)) {
    throw Error(ErrorCode::kNotConnected,
                "g-extra connectivity is defined for connected graphs only");
  }
}

void RequireNonNegative(int g) {
  if (g < 0) {
    throw Error(ErrorCode::kInvalidSpec,
                "g must be non-negative, got " + std::to_string(g));
  }
}

}  // namespace

int MaxFeasibleG(int n) {
  int twice = n - 3;
  return twice >= 0 ? twice / 2 : -((-twice + 1) / 2);
}

bool IsRgCutset(const Graph& graph, VertexSet cutset, int g) {
  RequireNonNegative(g);
  RequireConnected(graph);
  return internal::SplitsIntoLargeComponents(
      graph, cutset.bits() & graph.Vertices().bits(), g + 1);
}

ExtraConnResult ExtraConnectivity(const Graph& graph, int g, int max_order) {
  RequireNonNegative(g);
  const int n = graph.order();
  if (n > max_order) {
    throw Error(ErrorCode::kSizeGuardExceeded,
                "order " + std::to_string(n) + " exceeds the solver guard " +
                    std::to_string(max_order) +
                    "; raise the guard explicitly to search 2^n subsets");
  }
  RequireConnected(graph);

  ExtraConnResult result;
  result.n = n;
  result.g = g;
  const int upper = n - 2 * (g + 1);
  if (upper < 1) return result;

  // Sizes below kappa(G) never disconnect, so the R_g scan starts at kappa.
  auto kappa_scan = internal::FindMinimumCutset(graph, 1, 1, upper);
  result.explored += kappa_scan.explored;
  if (!kappa_scan.cutset) return result;
  const int kappa = kappa_scan.cutset->size();
  if (g == 0) {
    result.value = kappa;
    result.witness = kappa_scan.cutset;
    return result;
  }

  auto scan = internal::FindMinimumCutset(graph, g + 1, std::max(1, kappa),
                                          upper);
  result.explored += scan.explored;
  if (scan.cutset) {
    result.value = scan.cutset->size();
    result.witness = scan.cutset;
  }
  return result;
}

GFeasibility CheckGFeasibility(const Graph& graph, int g) {
  const long long n = graph.order();
  GFeasibility out;
  out.g_max_necessary = MaxFeasibleG(graph.order());
  out.edge_bound = n * (n - 1) / 2 - static_cast<long long>(g + 1) * (g + 1);
  out.passes_edge_bound = graph.size() <= out.edge_bound;
  out.g_in_range = g >= 0 && g <= out.g_max_necessary;
  return out;
}

std::vector<ExtraConnResult> KappaProfile(const Graph& graph, int max_order) {
  std::vector<ExtraConnResult> profile;
  for (int g = 0; g <= MaxFeasibleG(graph.order()); ++g) {
    profile.push_back(ExtraConnectivity(graph, g, max_order));
  }
  return profile;
}

bool KappaAtLeast(const ExtraConnResult& result, int k) {
  return !result.value || *result.value >= k;
}

}  // namespace extraconn
