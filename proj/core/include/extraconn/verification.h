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

#ifndef EXTRACONN_VERIFICATION_H_
#define EXTRACONN_VERIFICATION_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "extraconn/graph.h"

namespace extraconn {

// A claimed or observed value: null (kappa_g undefined), an integer, or a
// truth value.
using ClaimValue = std::variant<std::monostate, int, bool>;

std::string ClaimValueToString(const ClaimValue& value);

// One mismatch. `expected` is what the statement under test asserts and
// `got` is what the exact solver observed.
struct Certificate {
  std::string graph6;
  int g = 0;
  ClaimValue expected;
  ClaimValue got;
  std::string params;  // operands or construction parameters, if any
};

struct VerificationReport {
  std::string theorem;
  std::uint64_t checked = 0;
  // Instances skipped because they fall outside the statement's hypotheses.
  std::uint64_t excluded = 0;
  std::vector<Certificate> failures;
  std::vector<std::string> notes;

  bool passed() const { return failures.empty(); }
};

// Where the instances come from. Graph streams feed (graph, g) pairs into the
// statement; built-in theorems (products, families, examples) generate their
// own instances and ignore the graph fields except `g`.
struct InstanceSource {
  enum class Kind {
    kDefault,          // whatever the theorem declares
    kConnectedGraphs,  // every connected graph with min_n <= n <= max_n
    kLabeledTrees,     // every labeled tree with min_n <= n <= max_n
    kGraphs,           // the graphs listed in `graphs`
  };
  Kind kind = Kind::kDefault;
  int min_n = 1;
  int max_n = 6;
  bool dedupe = false;
  std::vector<Graph> graphs;
  std::optional<int> g;  // restrict to one g

  static InstanceSource ConnectedGraphs(int min_n, int max_n,
                                        bool dedupe = false);
  static InstanceSource LabeledTrees(int min_n, int max_n);
  static InstanceSource Graphs(std::vector<Graph> graphs);
  InstanceSource& WithG(int value);
};

struct TheoremInfo {
  std::string id;
  std::string summary;
  std::string source;  // "connected-graphs", "labeled-trees" or "built-in"
};

// Registered theorem ids in a fixed order.
std::vector<TheoremInfo> ListTheorems();
bool IsKnownTheorem(std::string_view id);

// Evaluates the statement on every instance against the exact solver and
// records mismatches; never stops early. Instances are processed in parallel
// and merged by index, so the report equals a sequential run. Throws
// kUnknownTheorem for an unregistered id.
VerificationReport VerifyTheorem(std::string_view theorem_id,
                                 const InstanceSource& source = {});

}  // namespace extraconn

#endif  // EXTRACONN_VERIFICATION_H_
