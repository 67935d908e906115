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

#ifndef EXTRACONN_TESTS_ORACLE_ORACLE_H_
#define EXTRACONN_TESTS_ORACLE_ORACLE_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "extraconn/graph.h"

// Reference implementations kept deliberately naive and independent of the
// library: adjacency lists, recursive DFS, every subset of V.
namespace extraconn::oracle {

struct AdjacencyList {
  int n = 0;
  std::vector<std::vector<int>> adj;
};

AdjacencyList FromGraph(const Graph& graph);
Graph ToGraph(const AdjacencyList& list);

// Short-form graph6 only (n <= 62).
AdjacencyList DecodeGraph6(std::string_view text);

// Sizes of the components left after deleting `removed`, ascending.
std::vector<int> ComponentSizes(const AdjacencyList& g,
                                const std::vector<bool>& removed);

bool Connected(const AdjacencyList& g);

// At least two components, each of order >= g + 1.
bool IsRgCutset(const AdjacencyList& g, const std::vector<int>& cutset,
                int g_value);

struct KappaAnswer {
  std::optional<int> value;
  std::vector<int> witness;  // lexicographically smallest minimizer
};

// Filters all 2^n subsets by IsRgCutset.
KappaAnswer KappaG(const AdjacencyList& g, int g_value);

// Smallest set whose removal disconnects, n - 1 for complete graphs.
int VertexConnectivity(const AdjacencyList& g);

int Diameter(const AdjacencyList& g);

}  // namespace extraconn::oracle

#endif  // EXTRACONN_TESTS_ORACLE_ORACLE_H_
