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

#ifndef EXTRACONN_ENUMERATION_H_
#define EXTRACONN_ENUMERATION_H_

#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <vector>

#include "extraconn/graph.h"

namespace extraconn {

using GraphVisitor = std::function<void(const Graph&)>;

inline constexpr int kMaxEnumerationOrder = 7;
inline constexpr int kMaxTreeEnumerationOrder = 9;
inline constexpr int kMaxCanonicalOrder = 8;

struct EnumerationOptions {
  bool connected_only = true;
  // One representative (the canonical form) per isomorphism class, emitted
  // in increasing canonical-code order.
  bool dedupe = false;
  // Labeled mode only: visit edge masks in [mask_begin, mask_end). Bit i of
  // a mask is the i-th vertex pair in graph6 order. Shards visit masks in
  // increasing order.
  std::uint64_t mask_begin = 0;
  std::uint64_t mask_end = std::numeric_limits<std::uint64_t>::max();
};

// All labeled (or, with dedupe, all unlabeled) graphs of order n, 1 <= n <= 7.
// Throws kSizeGuardExceeded outside that range.
void ForEachGraph(int n, const EnumerationOptions& options,
                  const GraphVisitor& visit);

std::vector<Graph> EnumerateConnectedGraphs(int n, bool dedupe = false);

// Graph whose edges are the set bits of `mask` (graph6 pair order).
Graph GraphFromEdgeMask(int n, std::uint64_t mask);
std::uint64_t EdgeMask(const Graph& graph);

// Decodes a Pruefer sequence of length n - 2 over {0..n-1}.
Graph DecodePrufer(int n, std::span<const int> sequence);

// Every labeled tree on n vertices (n^(n-2) of them), in lexicographic order
// of their Pruefer sequences, 2 <= n <= 9.
void ForEachLabeledTree(int n, const GraphVisitor& visit);
std::vector<Graph> EnumerateLabeledTrees(int n);

// Minimum over all vertex permutations of the adjacency bitstring read in
// graph6 pair order (first pair most significant). n <= 8.
std::uint64_t CanonicalCode(const Graph& graph);
Graph CanonicalForm(const Graph& graph);
bool AreIsomorphic(const Graph& a, const Graph& b);

}  // namespace extraconn

#endif  // EXTRACONN_ENUMERATION_H_
