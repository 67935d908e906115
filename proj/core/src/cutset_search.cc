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

#include "cutset_search.h"

#include <algorithm>
#include <array>
#include <bit>

namespace extraconn::internal {

namespace {

std::uint64_t GrowComponent(const Graph& graph, std::uint64_t seed,
                            std::uint64_t alive) {
  std::uint64_t component = seed;
  std::uint64_t frontier = seed;
  while (frontier != 0) {
    std::uint64_t reach = 0;
    for (std::uint64_t f = frontier; f != 0; f &= f - 1) {
      reach |= graph.NeighborBits(std::countr_zero(f));
    }
    frontier = reach & alive & ~component;
    component |= frontier;
  }
  return component;
}

}  // namespace

bool SplitsIntoLargeComponents(const Graph& graph, std::uint64_t removed,
                               int min_component) {
  std::uint64_t alive = graph.Vertices().bits() & ~removed;
  if (alive == 0) return false;
  int components = 0;
  while (alive != 0) {
    std::uint64_t component =
        GrowComponent(graph, alive & (~alive + 1), alive);
    if (components == 0 && component == alive) return false;
    if (std::popcount(component) < min_component) return false;
    alive &= ~component;
    ++components;
  }
  return components >= 2;
}

CutsetSearchOutcome FindMinimumCutset(const Graph& graph, int min_component,
                                      int min_size, int max_size) {
  CutsetSearchOutcome outcome;
  const int n = graph.order();
  min_size = std::max(min_size, 0);
  max_size = std::min(max_size, n);
  std::array<int, Graph::kMaxOrder> index{};
  for (int size = min_size; size <= max_size; ++size) {
    for (int i = 0; i < size; ++i) index[i] = i;
    while (true) {
      std::uint64_t mask = 0;
      for (int i = 0; i < size; ++i) mask |= std::uint64_t{1} << index[i];
      ++outcome.explored;
      if (SplitsIntoLargeComponents(graph, mask, min_component)) {
        outcome.cutset = VertexSet(mask);
        return outcome;
      }
      int pos = size - 1;
      while (pos >= 0 && index[pos] == n - size + pos) --pos;
      if (pos < 0) break;
      ++index[pos];
      for (int i = pos + 1; i < size; ++i) index[i] = index[i - 1] + 1;
    }
  }
  return outcome;
}

}  // namespace extraconn::internal
