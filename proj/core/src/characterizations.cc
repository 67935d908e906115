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

#include "extraconn/characterizations.h"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "extraconn/error.h"
#include "extraconn/extra_connectivity.h"

namespace extraconn {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::vector<int> SplitSizes(const Graph& graph, VertexSet removed) {
  std::vector<int> sizes;
  for (VertexSet c : ComponentsAfterRemoval(graph, removed)) {
    sizes.push_back(c.size());
  }
  return sizes;
}

bool AllAtLeast(const std::vector<int>& sizes, int bound) {
  return std::all_of(sizes.begin(), sizes.end(),
                     [bound](int s) { return s >= bound; });
}

bool AnyAtMost(const std::vector<int>& sizes, int bound) {
  return std::any_of(sizes.begin(), sizes.end(),
                     [bound](int s) { return s <= bound; });
}

// G - removed is disconnected and every component has >= g + 1 vertices.
bool LargeSplit(const std::vector<int>& sizes, int g) {
  return sizes.size() >= 2 && AllAtLeast(sizes, g + 1);
}

// At least `min_parts` components, exactly `count` of them of order `size`,
// all others of order >= g + 1.
bool SplitWithSmallParts(const std::vector<int>& sizes, int min_parts,
                         int size, int count, int g) {
  if (static_cast<int>(sizes.size()) < min_parts) return false;
  int matched = 0;
  for (int s : sizes) {
    if (s == size && matched < count) {
      ++matched;
    } else if (s < g + 1) {
      return false;
    }
  }
  return matched == count;
}

std::optional<int> Kappa(const Graph& graph, int g) {
  return ExtraConnectivity(graph, g).value;
}

std::optional<int> Plus(std::optional<int> value, int shift) {
  if (!value) return std::nullopt;
  return *value + shift;
}

std::optional<int> MinDefined(std::optional<int> a, std::optional<int> b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

[[noreturn]] void OutOfRange(const std::string& why) {
  throw Error(ErrorCode::kOutOfTheoremRange, why);
}

// Every pair and triple is visited as a VertexSet.
template <class Fn>
bool AnyPair(int n, Fn&& fn) {
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (fn(u, v)) return true;
    }
  }
  return false;
}

template <class Fn>
bool AnyTriple(int n, Fn&& fn) {
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = x + 1; y < n; ++y) {
      for (Vertex z = y + 1; z < n; ++z) {
        if (fn(x, y, z)) return true;
      }
    }
  }
  return false;
}

// Three vertices whose pairwise removals keep G connected while removing all
// three splits G into components of order >= g + 1.
bool HasIndependentTripleCut(const Graph& graph, int g) {
  return AnyTriple(graph.order(), [&](Vertex x, Vertex y, Vertex z) {
    if (!LargeSplit(SplitSizes(graph, VertexSet{x, y, z}), g)) return false;
    return SplitSizes(graph, VertexSet{x, y}).size() == 1 &&
           SplitSizes(graph, VertexSet{x, z}).size() == 1 &&
           SplitSizes(graph, VertexSet{y, z}).size() == 1;
  });
}

}  // namespace

std::string_view PredictionRuleName(PredictionRule rule) {
  switch (rule) {
    case PredictionRule::kJoinBothSides:
      return "join-both-sides";
    case PredictionRule::kJoinLeftOnly:
      return "join-left-only";
    case PredictionRule::kJoinRightOnly:
      return "join-right-only";
    case PredictionRule::kJoinNoCutset:
      return "join-no-cutset";
    case PredictionRule::kCoronaSingleVertex:
      return "corona-single-vertex";
    case PredictionRule::kCoronaScaledCutset:
      return "corona-scaled-cutset";
    case PredictionRule::kCompleteMultipartite:
      return "complete-multipartite";
    case PredictionRule::kMultipartiteNoCutset:
      return "multipartite-no-cutset";
    case PredictionRule::kWheel:
      return "wheel";
    case PredictionRule::kWheelNoCutset:
      return "wheel-no-cutset";
    case PredictionRule::kPath:
      return "path";
    case PredictionRule::kPathNoCutset:
      return "path-no-cutset";
    case PredictionRule::kTStar:
      return "tstar";
    case PredictionRule::kTPrime:
      return "tprime";
    case PredictionRule::kHk:
      return "hk";
    case PredictionRule::kCliquePairExample:
      return "clique-pair-example";
    case PredictionRule::kKnMinusMatching:
      return "kn-minus-matching";
  }
  return "unknown";
}

Prediction PredictJoin(const Graph& left, const Graph& right, int g) {
  const int n = left.order();
  const int m = right.order();
  const bool left_fits = g <= MaxFeasibleG(n);
  const bool right_fits = g <= MaxFeasibleG(m);
  if (left_fits && right_fits) {
    return {MinDefined(Plus(Kappa(left, g), m), Plus(Kappa(right, g), n)),
            PredictionRule::kJoinBothSides};
  }
  if (left_fits) {
    return {Plus(Kappa(left, g), m), PredictionRule::kJoinLeftOnly};
  }
  if (right_fits) {
    return {Plus(Kappa(right, g), n), PredictionRule::kJoinRightOnly};
  }
  // Still validate the operands the way the solver would.
  if (!IsConnected(left) || !IsConnected(right)) {
    throw Error(ErrorCode::kNotConnected, "join operands must be connected");
  }
  return {std::nullopt, PredictionRule::kJoinNoCutset};
}

Prediction PredictCorona(const Graph& base, const Graph& attached, int g) {
  const int n = base.order();
  const int m = attached.order();
  if (n < 2) {
    throw Error(ErrorCode::kInvalidSpec, "corona base needs order >= 2");
  }
  if (m < 1) {
    throw Error(ErrorCode::kInvalidSpec, "corona attachment needs order >= 1");
  }
  if (!IsConnected(base) || !IsConnected(attached)) {
    throw Error(ErrorCode::kNotConnected, "corona operands must be connected");
  }
  if (g <= m - 1) return {1, PredictionRule::kCoronaSingleVertex};
  // k (m + 1) < g + 1 <= (k + 1)(m + 1)
  const int k = (g + 1 + m) / (m + 1) - 1;
  if (k > MaxFeasibleG(n)) {
    return {std::nullopt, PredictionRule::kCoronaScaledCutset};
  }
  auto base_kappa = Kappa(base, k);
  if (!base_kappa) return {std::nullopt, PredictionRule::kCoronaScaledCutset};
  return {*base_kappa * (m + 1), PredictionRule::kCoronaScaledCutset};
}

Prediction PredictFamily(const ConstructionSpec& spec, int g) {
  auto multipartite = [g](std::vector<int> parts) -> Prediction {
    std::sort(parts.begin(), parts.end());
    if (parts.size() == 2 && parts.front() < 2) {
      OutOfRange("complete bipartite formula needs both parts >= 2");
    }
    if (parts.size() < 2) OutOfRange("needs at least two parts");
    if (g >= 1 || parts.back() == 1) {
      return {std::nullopt, PredictionRule::kMultipartiteNoCutset};
    }
    return {std::accumulate(parts.begin(), parts.end() - 1, 0),
            PredictionRule::kCompleteMultipartite};
  };
  auto require_g = [g](int built_for) {
    if (g != built_for) {
      OutOfRange("closed form holds for the construction's own g = " +
                 std::to_string(built_for));
    }
  };
  auto no_formula = [](std::string_view kind) -> Prediction {
    throw Error(ErrorCode::kNoFormula,
                "no closed form for " + std::string(kind));
  };

  return std::visit(
      Overloaded{
          [&](const CompleteBipartiteSpec& s) {
            return multipartite({s.a, s.b});
          },
          [&](const CompleteMultipartiteSpec& s) {
            return multipartite(s.parts);
          },
          [&](const WheelSpec& s) -> Prediction {
            if (s.n < 5) OutOfRange("wheel formula needs n >= 5");
            if (2 * g <= s.n - 5) return {3, PredictionRule::kWheel};
            return {std::nullopt, PredictionRule::kWheelNoCutset};
          },
          [&](const PathSpec& s) -> Prediction {
            if (s.n < 3) OutOfRange("path formula needs n >= 3");
            if (g <= MaxFeasibleG(s.n)) return {1, PredictionRule::kPath};
            return {std::nullopt, PredictionRule::kPathNoCutset};
          },
          [&](const TStarSpec& s) -> Prediction {
            require_g(s.g);
            return {s.n - 2 * s.g - 2, PredictionRule::kTStar};
          },
          [&](const TPrimeSpec& s) -> Prediction {
            require_g(s.g);
            if (s.g < 1 || 2 * s.g > s.n - s.k - 2) {
              OutOfRange("needs 1 <= g <= floor((n - k - 2) / 2)");
            }
            return {s.k, PredictionRule::kTPrime};
          },
          [&](const HkSpec& s) -> Prediction {
            require_g(s.g);
            return {s.k - 1, PredictionRule::kHk};
          },
          [&](const CliquePairExampleSpec& s) -> Prediction {
            const int extra = s.index <= 2 ? 2 : 3;
            const int smaller_clique = (s.n - extra) / 2;
            const int min_g = (s.index == 1 || s.index == 3) ? 0 : 1;
            if (g < min_g || g > smaller_clique - 1) {
              OutOfRange("needs " + std::to_string(min_g) +
                         " <= g <= |smaller clique| - 1");
            }
            return {s.index <= 2 ? 2 : 3, PredictionRule::kCliquePairExample};
          },
          [&](const KnMinusMatchingSpec& s) -> Prediction {
            if (g != 0 || s.matching_size < 1 || s.n < 3) {
              OutOfRange("needs g = 0, n >= 3 and a nonempty matching");
            }
            return {s.n - 2, PredictionRule::kKnMinusMatching};
          },
          [&](const JoinSpec& s) { return PredictJoin(s.left, s.right, g); },
          [&](const CoronaSpec& s) {
            return PredictCorona(s.base, s.attached, g);
          },
          [&](const CompleteSpec&) { return no_formula("complete graphs"); },
          [&](const CycleSpec&) { return no_formula("cycles"); },
          [&](const StarSpec&) { return no_formula("stars"); },
          [&](const FkSpec&) { return no_formula("the F_k construction"); },
          [&](const AntiMonotonePairSpec&) {
            return no_formula("the anti-monotone pair");
          },
      },
      spec);
}

bool CharacterizeKappa1(const Graph& graph, int g) {
  for (Vertex v = 0; v < graph.order(); ++v) {
    if (LargeSplit(SplitSizes(graph, VertexSet{v}), g)) return true;
  }
  return false;
}

Kappa2Clause MatchKappa2(const Graph& graph, int g) {
  const int n = graph.order();
  const int kappa = VertexConnectivity(graph);
  if (kappa == 2) {
    bool split = AnyPair(n, [&](Vertex u, Vertex v) {
      return LargeSplit(SplitSizes(graph, VertexSet{u, v}), g);
    });
    return split ? Kappa2Clause::kTwoConnectedWithLargeSplit
                 : Kappa2Clause::kNone;
  }
  if (kappa != 1 || g < 1) return Kappa2Clause::kNone;

  std::vector<bool> cut(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) cut[v] = IsCutVertex(graph, v);

  // (a) every cut vertex leaves a small component.
  for (Vertex u = 0; u < n; ++u) {
    if (cut[u] && !AnyAtMost(SplitSizes(graph, VertexSet{u}), g)) {
      return Kappa2Clause::kNone;
    }
  }
  // (b) a cut vertex with an isolated neighbor and large remainder, or two
  // non-cut vertices forming a large split.
  for (Vertex v = 0; v < n; ++v) {
    if (cut[v] &&
        SplitWithSmallParts(SplitSizes(graph, VertexSet{v}), 3, 1, 1, g)) {
      return Kappa2Clause::kCutVertexCase;
    }
  }
  bool pair = AnyPair(n, [&](Vertex x, Vertex y) {
    return !cut[x] && !cut[y] &&
           LargeSplit(SplitSizes(graph, VertexSet{x, y}), g);
  });
  return pair ? Kappa2Clause::kCutVertexCase : Kappa2Clause::kNone;
}

bool CharacterizeKappa2(const Graph& graph, int g) {
  return MatchKappa2(graph, g) != Kappa2Clause::kNone;
}

Kappa3Clause MatchKappa3(const Graph& graph, int g, Kappa3Reading reading) {
  const int n = graph.order();
  if (g < 1 || 2 * g > n - 5) {
    OutOfRange("kappa_g = 3 characterization needs 1 <= g <= floor((n-5)/2)");
  }
  const int kappa = VertexConnectivity(graph);

  if (kappa == 3) {
    bool split = AnyTriple(n, [&](Vertex x, Vertex y, Vertex z) {
      return LargeSplit(SplitSizes(graph, VertexSet{x, y, z}), g);
    });
    return split ? Kappa3Clause::kThreeConnectedWithLargeSplit
                 : Kappa3Clause::kNone;
  }

  if (kappa == 2) {
    // (a) every 2-cut leaves a small component.
    bool large_two_cut = AnyPair(n, [&](Vertex u, Vertex v) {
      auto sizes = SplitSizes(graph, VertexSet{u, v});
      return sizes.size() >= 2 && !AnyAtMost(sizes, g);
    });
    if (large_two_cut) return Kappa3Clause::kNone;
    // (b) a 2-cut {u, v} isolating a common neighbor x, or an independent
    // triple cut.
    bool isolated_common = AnyPair(n, [&](Vertex u, Vertex v) {
      const VertexSet removed{u, v};
      auto components = ComponentsAfterRemoval(graph, removed);
      if (components.size() < 3) return false;
      auto sizes = SplitSizes(graph, removed);
      if (!SplitWithSmallParts(sizes, 3, 1, 1, g)) return false;
      for (VertexSet c : components) {
        if (c.size() != 1) continue;
        const Vertex x = c.Min();
        return graph.HasEdge(x, u) && graph.HasEdge(x, v);
      }
      return false;
    });
    if (isolated_common || HasIndependentTripleCut(graph, g)) {
      return Kappa3Clause::kTwoConnectedCase;
    }
    return Kappa3Clause::kNone;
  }

  if (kappa != 1) return Kappa3Clause::kNone;
  if (!reading.cut_vertex_case_for_all_g && g < 2) return Kappa3Clause::kNone;

  std::vector<bool> cut(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) cut[v] = IsCutVertex(graph, v);

  // (c) every cut vertex leaves a small component.
  for (Vertex v = 0; v < n; ++v) {
    if (cut[v] && !AnyAtMost(SplitSizes(graph, VertexSet{v}), g)) {
      return Kappa3Clause::kNone;
    }
  }
  const bool triple = HasIndependentTripleCut(graph, g);
  if (triple && !reading.triple_needs_pair_condition) {
    return Kappa3Clause::kCutVertexCase;
  }

  // (d) every disconnecting pair leaves a small component.
  bool large_pair = AnyPair(n, [&](Vertex x, Vertex y) {
    auto sizes = SplitSizes(graph, VertexSet{x, y});
    return sizes.size() >= 2 && !AnyAtMost(sizes, g);
  });
  if (large_pair) return Kappa3Clause::kNone;
  if (triple) return Kappa3Clause::kCutVertexCase;

  for (Vertex v = 0; v < n; ++v) {
    if (!cut[v]) continue;
    auto sizes = SplitSizes(graph, VertexSet{v});
    // (e) two isolated vertices; (f) one component of exactly two vertices.
    if (SplitWithSmallParts(sizes, 4, 1, 2, g) ||
        SplitWithSmallParts(sizes, 3, 2, 1, g)) {
      return Kappa3Clause::kCutVertexCase;
    }
  }
  // (g) two vertices (non-cut unless relaxed) isolating a third.
  bool pair = AnyPair(n, [&](Vertex x, Vertex y) {
    return (reading.pair_may_contain_cut_vertices || (!cut[x] && !cut[y])) &&
           SplitWithSmallParts(SplitSizes(graph, VertexSet{x, y}), 3, 1, 1,
                               g);
  });
  return pair ? Kappa3Clause::kCutVertexCase : Kappa3Clause::kNone;
}

bool CharacterizeKappa3(const Graph& graph, int g, Kappa3Reading reading) {
  return MatchKappa3(graph, g, reading) != Kappa3Clause::kNone;
}

bool IsTStar(const Graph& tree, int g) {
  if (!IsTree(tree)) {
    throw Error(ErrorCode::kNotATree, "input is not a tree");
  }
  for (Vertex v = 0; v < tree.order(); ++v) {
    auto sizes = SplitSizes(tree, VertexSet{v});
    int large = 0;
    bool ok = true;
    for (int s : sizes) {
      if (s == g + 1) {
        ++large;
      } else if (s > g) {
        ok = false;
      }
    }
    if (ok && large == 2) return true;
  }
  return false;
}

bool IsKnMinusMatching(const Graph& graph) {
  return graph.Complement().MaxDegree() <= 1;
}

}  // namespace extraconn
