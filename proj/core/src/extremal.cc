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

#include "extraconn/extremal.h"

#include <string>
#include <utility>

#include "extraconn/enumeration.h"
#include "extraconn/error.h"
#include "extraconn/extra_connectivity.h"
#include "extraconn/graph_io.h"
#include "extraconn/parallel.h"

namespace extraconn {

namespace {

struct Sample {
  int edges = 0;
  std::optional<int> kappa;
  std::string graph6;
};

// Best graph under a strict edge-count preference, ties broken by graph6.
class Extreme {
 public:
  explicit Extreme(bool prefer_max) : prefer_max_(prefer_max) {}

  void Offer(const Sample& s) {
    if (!best_ || Better(s)) best_ = s;
  }
  const std::optional<Sample>& best() const { return best_; }

 private:
  bool Better(const Sample& s) const {
    if (s.edges != best_->edges) {
      return prefer_max_ ? s.edges > best_->edges : s.edges < best_->edges;
    }
    return s.graph6 < best_->graph6;
  }

  bool prefer_max_;
  std::optional<Sample> best_;
};

int Choose2(int n) { return n * (n - 1) / 2; }

struct Scan {
  std::vector<Sample> samples;
  std::uint64_t skipped_disconnected = 0;
};

constexpr std::size_t kBatchSize = 4096;

void Evaluate(std::vector<Graph>& batch, int g, Scan& scan) {
  auto results = ParallelMap<Sample>(batch.size(), [&](std::size_t i) {
    const Graph& graph = batch[i];
    ++ProgressCounter();
    return Sample{graph.size(), ExtraConnectivity(graph, g, Graph::kMaxOrder).value,
                  ToGraph6(graph)};
  });
  for (auto& r : results) scan.samples.push_back(std::move(r));
  batch.clear();
}

Scan RunScan(int n, int g, const ExtremalOptions& options) {
  if (n < 1 || g < 0) {
    throw Error(ErrorCode::kInvalidSpec, "requires n >= 1 and g >= 0");
  }
  Scan scan;
  std::vector<Graph> batch;
  auto consider = [&](const Graph& graph) {
    if (!IsConnected(graph)) {
      ++scan.skipped_disconnected;
      return;
    }
    batch.push_back(graph);
    if (batch.size() >= kBatchSize) Evaluate(batch, g, scan);
  };
  if (options.corpus) {
    for (const Graph& graph : *options.corpus) {
      if (graph.order() != n) {
        throw Error(ErrorCode::kInvalidSpec,
                    "corpus graph " + ToGraph6(graph) + " has order " +
                        std::to_string(graph.order()) + ", expected " +
                        std::to_string(n));
      }
      consider(graph);
    }
  } else {
    if (n > kMaxExtremalOrder) {
      throw Error(ErrorCode::kSizeGuardExceeded,
                  "exhaustive extremal search needs n <= " +
                      std::to_string(kMaxExtremalOrder) +
                      "; supply a graph6 corpus for larger n");
    }
    EnumerationOptions enumeration;
    enumeration.connected_only = false;
    enumeration.dedupe = options.dedupe;
    ForEachGraph(n, enumeration, consider);
  }
  if (!batch.empty()) Evaluate(batch, g, scan);
  return scan;
}

ExtremalResult Start(ExtremalQuantity quantity, int n, int g, int k,
                     const Scan& scan) {
  ExtremalResult result;
  result.quantity = quantity;
  result.n = n;
  result.g = g;
  result.k = k;
  result.graphs_scanned = scan.samples.size();
  result.skipped_disconnected = scan.skipped_disconnected;
  auto forms = ClosedForms(n, g, k);
  switch (quantity) {
    case ExtremalQuantity::kS:
      result.closed_form = forms.s;
      break;
    case ExtremalQuantity::kF:
      result.closed_form = forms.f;
      break;
    case ExtremalQuantity::kG:
      result.closed_form = forms.g;
      break;
  }
  return result;
}

void Finish(ExtremalResult& result, const std::optional<Sample>& witness) {
  if (witness) result.witness = witness->graph6;
  result.agrees = result.value == result.closed_form;
}

}  // namespace

std::string_view ExtremalQuantityName(ExtremalQuantity quantity) {
  switch (quantity) {
    case ExtremalQuantity::kS:
      return "s";
    case ExtremalQuantity::kF:
      return "f";
    case ExtremalQuantity::kG:
      return "g";
  }
  return "?";
}

ExtremalQuantity ParseExtremalQuantity(std::string_view name) {
  if (name == "s" || name == "S") return ExtremalQuantity::kS;
  if (name == "f" || name == "F") return ExtremalQuantity::kF;
  if (name == "g" || name == "G") return ExtremalQuantity::kG;
  throw Error(ErrorCode::kInvalidSpec,
              "extremal quantity must be s, f or g, got '" + std::string(name) +
                  "'");
}

ClosedFormValues ClosedForms(int n, int g, int k) {
  ClosedFormValues values;
  if (g >= 1 && k >= 1 && k <= n - 2 * g - 2) {
    values.s = n - 1;
    values.f = Choose2(n) - (n - k - g) * (g + 1) + 1;
  }
  if (g >= 1 && k == n - 2 * g - 2 && k >= 1) {
    values.g = Choose2(n) - (g + 1) * (g + 1);
  }
  return values;
}

ExtremalResult SearchS(int n, int g, int k, const ExtremalOptions& options) {
  const Scan scan = RunScan(n, g, options);
  ExtremalResult result = Start(ExtremalQuantity::kS, n, g, k, scan);
  Extreme fewest(false);
  for (const Sample& s : scan.samples) {
    if (s.kappa && *s.kappa == k) fewest.Offer(s);
  }
  if (fewest.best()) {
    result.value = fewest.best()->edges;
  } else {
    result.note = "no connected graph of this order has kappa_g = k";
  }
  Finish(result, fewest.best());
  return result;
}

ExtremalResult SearchF(int n, int g, int k, const ExtremalOptions& options) {
  const Scan scan = RunScan(n, g, options);
  ExtremalResult result = Start(ExtremalQuantity::kF, n, g, k, scan);
  Extreme most(true);
  for (const Sample& s : scan.samples) {
    if (s.kappa && *s.kappa < k) most.Offer(s);
  }
  if (most.best()) {
    result.value = most.best()->edges + 1;
  } else {
    result.value = 0;
    result.note = "vacuous: every connected graph satisfies kappa_g >= k";
  }
  Finish(result, most.best());
  return result;
}

ExtremalResult SearchG(int n, int g, int k, const ExtremalOptions& options) {
  const Scan scan = RunScan(n, g, options);
  ExtremalResult result = Start(ExtremalQuantity::kG, n, g, k, scan);
  Extreme fewest_violator(false);
  Extreme most_defined(true);
  for (const Sample& s : scan.samples) {
    if (!s.kappa) continue;
    most_defined.Offer(s);
    if (*s.kappa > k) fewest_violator.Offer(s);
  }
  if (const auto& violator = fewest_violator.best()) {
    const int bound = violator->edges - 1;
    if (bound < n - 1) {
      result.note = "does not exist: a graph with n - 1 edges has kappa_g > k";
    } else {
      result.value = bound;
    }
    Finish(result, violator);
  } else if (most_defined.best()) {
    result.value = most_defined.best()->edges;
    Finish(result, most_defined.best());
  } else {
    result.note = "no connected graph of this order has kappa_g defined";
    Finish(result, std::nullopt);
  }
  return result;
}

ExtremalResult SearchExtremal(ExtremalQuantity quantity, int n, int g, int k,
                              const ExtremalOptions& options) {
  switch (quantity) {
    case ExtremalQuantity::kS:
      return SearchS(n, g, k, options);
    case ExtremalQuantity::kF:
      return SearchF(n, g, k, options);
    case ExtremalQuantity::kG:
      return SearchG(n, g, k, options);
  }
  return {};
}

}  // namespace extraconn
