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

#ifndef EXTRACONN_EXTREMAL_H_
#define EXTRACONN_EXTREMAL_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "extraconn/graph.h"

namespace extraconn {

enum class ExtremalQuantity {
  kS,  // fewest edges of a graph with kappa_g = k
  kF,  // fewest edges forcing kappa_g >= k
  kG,  // most edges forcing kappa_g <= k
};

std::string_view ExtremalQuantityName(ExtremalQuantity quantity);  // "s"|"f"|"g"
// Throws kInvalidSpec for anything but s, f or g.
ExtremalQuantity ParseExtremalQuantity(std::string_view name);

struct ExtremalResult {
  ExtremalQuantity quantity = ExtremalQuantity::kS;
  int n = 0;
  int g = 0;
  int k = 0;
  std::optional<int> value;            // empty: does not exist
  std::optional<std::string> witness;  // graph6
  std::optional<int> closed_form;
  bool agrees = false;
  std::string note;
  std::uint64_t graphs_scanned = 0;
  std::uint64_t skipped_disconnected = 0;
};

struct ClosedFormValues {
  std::optional<int> s;
  std::optional<int> f;
  std::optional<int> g;
};

// s = n - 1 and f = C(n,2) - (n-k-g)(g+1) + 1 for 1 <= g and
// 1 <= k <= n - 2g - 2; g = C(n,2) - (g+1)^2 only at k = n - 2g - 2.
ClosedFormValues ClosedForms(int n, int g, int k);

struct ExtremalOptions {
  // Scan one graph per isomorphism class instead of every labeled graph.
  bool dedupe = false;
  // Scan these graphs (all of order n) instead of enumerating; lifts the
  // order guard.
  std::optional<std::vector<Graph>> corpus;
};

inline constexpr int kMaxExtremalOrder = 7;

// Exhaustive searches over connected graphs of order n. Ties between
// witnesses go to the lexicographically smallest graph6 string.
//
// s: minimum edge count among graphs with kappa_g = k.
// f: one more than the maximum edge count among graphs with a defined
//    kappa_g < k; value 0 with a note when there are none.
// g: among graphs with kappa_g defined, a violator has kappa_g > k. With
//    violators the value is (fewest violator edges) - 1, reported as
//    nonexistent when that is below n - 1; otherwise the most edges of any
//    graph with kappa_g defined.
//
// Throws kSizeGuardExceeded for n > 7 without a corpus and kInvalidSpec for
// negative parameters or corpus graphs of another order.
ExtremalResult SearchS(int n, int g, int k, const ExtremalOptions& options = {});
ExtremalResult SearchF(int n, int g, int k, const ExtremalOptions& options = {});
ExtremalResult SearchG(int n, int g, int k, const ExtremalOptions& options = {});
ExtremalResult SearchExtremal(ExtremalQuantity quantity, int n, int g, int k,
                              const ExtremalOptions& options = {});

}  // namespace extraconn

#endif  // EXTRACONN_EXTREMAL_H_
