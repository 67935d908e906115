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

#ifndef EXTRACONN_SRC_CUTSET_SEARCH_H_
#define EXTRACONN_SRC_CUTSET_SEARCH_H_

#include <cstdint>
#include <optional>

#include "extraconn/graph.h"

namespace extraconn::internal {

// True iff G - removed has at least two components and each has at least
// `min_component` vertices. Bails out as soon as a finished component is too
// small, or the first component swallows everything.
bool SplitsIntoLargeComponents(const Graph& graph, std::uint64_t removed,
                               int min_component);

struct CutsetSearchOutcome {
  std::optional<VertexSet> cutset;
  std::uint64_t explored = 0;
};

// Scans subsets by ascending cardinality in [min_size, max_size], and within
// a cardinality in lexicographic order of the sorted member lists. Returns the
// first subset that splits G into components of size >= min_component.
CutsetSearchOutcome FindMinimumCutset(const Graph& graph, int min_component,
                                      int min_size, int max_size);

}  // namespace extraconn::internal

#endif  // EXTRACONN_SRC_CUTSET_SEARCH_H_
