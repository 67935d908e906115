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

#ifndef EXTRACONN_CHARACTERIZATIONS_H_
#define EXTRACONN_CHARACTERIZATIONS_H_

#include <optional>
#include <string_view>

#include "extraconn/families.h"
#include "extraconn/graph.h"

namespace extraconn {

// Which closed-form case produced a prediction.
enum class PredictionRule {
  kJoinBothSides,         // min{kappa_g(G) + |H|, kappa_g(H) + |G|}
  kJoinLeftOnly,          // only G is large enough: kappa_g(G) + |H|
  kJoinRightOnly,         // only H is large enough: kappa_g(H) + |G|
  kJoinNoCutset,          // g exceeds both feasibility ranges
  kCoronaSingleVertex,    // g <= m - 1: one base vertex suffices
  kCoronaScaledCutset,    // kappa_k(G) * (m + 1)
  kCompleteMultipartite,  // sum of all parts but the largest, g = 0
  kMultipartiteNoCutset,  // g >= 1, or every part a singleton
  kWheel,
  kWheelNoCutset,
  kPath,
  kPathNoCutset,
  kTStar,
  kTPrime,
  kHk,
  kCliquePairExample,
  kKnMinusMatching,
};

std::string_view PredictionRuleName(PredictionRule rule);

struct Prediction {
  std::optional<int> value;  // empty: kappa_g does not exist
  PredictionRule rule;
};

// Operand kappa values are recomputed with the exact solver.
Prediction PredictJoin(const Graph& left, const Graph& right, int g);
// Throws kInvalidSpec when |V(base)| < 2.
Prediction PredictCorona(const Graph& base, const Graph& attached, int g);
// Throws kNoFormula for kinds without a closed form and kOutOfTheoremRange
// when the parameters fall outside the statement's hypotheses.
Prediction PredictFamily(const ConstructionSpec& spec, int g);

// There is a cut vertex v with every component of G - v of order >= g + 1.
bool CharacterizeKappa1(const Graph& graph, int g);

enum class Kappa2Clause {
  kNone,
  kTwoConnectedWithLargeSplit,  // kappa = 2 and a 2-cut leaves large parts
  kCutVertexCase,               // kappa = 1, g >= 1, (a) and (b)
};
Kappa2Clause MatchKappa2(const Graph& graph, int g);
bool CharacterizeKappa2(const Graph& graph, int g);

enum class Kappa3Clause {
  kNone,
  kThreeConnectedWithLargeSplit,  // kappa = 3
  kTwoConnectedCase,              // kappa = 2, (a) and (b)
  kCutVertexCase,                 // kappa = 1, (c)-(h) combinations
};

// How the cut-vertex case (kappa = 1) is read. Each switch departs from the
// literal statement; all three are needed for the equivalence to hold.
struct Kappa3Reading {
  // Apply the case for every g >= 1 rather than only g >= 2. The fifth
  // clique-pair example has kappa = 1 and kappa_1 = 3.
  bool cut_vertex_case_for_all_g = true;
  // Let the isolating pair of (g) contain cut vertices. A pendant vertex,
  // its neighbor and one more vertex can be the only minimum R_g-cutset.
  bool pair_may_contain_cut_vertices = true;
  // Require (d) alongside (h). Without it a graph with a 2-vertex
  // R_g-cutset can satisfy (c) and (h).
  bool triple_needs_pair_condition = true;

  static constexpr Kappa3Reading AsStated() { return {false, false, false}; }
  static constexpr Kappa3Reading Corrected() { return {true, true, true}; }
};

// Throws kOutOfTheoremRange unless 1 <= g <= floor((n - 5) / 2).
Kappa3Clause MatchKappa3(const Graph& graph, int g,
                         Kappa3Reading reading = Kappa3Reading::Corrected());
bool CharacterizeKappa3(const Graph& graph, int g,
                        Kappa3Reading reading = Kappa3Reading::Corrected());

// Some vertex v leaves exactly two components of order g + 1 and every other
// component of order <= g. Throws kNotATree for non-tree input.
bool IsTStar(const Graph& tree, int g);

// The complement has maximum degree <= 1 (K_n itself included).
bool IsKnMinusMatching(const Graph& graph);

}  // namespace extraconn

#endif  // EXTRACONN_CHARACTERIZATIONS_H_
