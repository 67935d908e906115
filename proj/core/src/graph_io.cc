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

#include "extraconn/graph_io.h"

#include <algorithm>
#include <istream>
#include <sstream>

#include "extraconn/error.h"

namespace extraconn {

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";
constexpr int kBias = 63;

bool IsGraph6Byte(char c) {
  auto u = static_cast<unsigned char>(c);
  return u >= 63 && u <= 126;
}

}  // namespace

Graph ParseGraph6(std::string_view text) {
  std::size_t base = 0;
  if (text.starts_with(kGraph6Header)) {
    text.remove_prefix(kGraph6Header.size());
    base = kGraph6Header.size();
  }
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) {
    text.remove_suffix(1);
  }
  if (text.empty()) throw ParseError(base, "empty graph6 line");
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (!IsGraph6Byte(text[i])) {
      throw ParseError(base + i, "byte outside the graph6 range [63, 126]");
    }
  }

  std::size_t pos = 0;
  long long n = 0;
  if (text[0] != 126) {
    n = text[0] - kBias;
    pos = 1;
  } else if (text.size() >= 2 && text[1] == 126) {
    if (text.size() < 8) throw ParseError(base, "truncated 8-byte length");
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | (text[i] - kBias);
    pos = 8;
  } else {
    if (text.size() < 4) throw ParseError(base, "truncated 4-byte length");
    for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | (text[i] - kBias);
    pos = 4;
  }
  if (n > Graph::kMaxOrder) {
    throw Error(ErrorCode::kSizeGuardExceeded,
                "graph6 order " + std::to_string(n) + " exceeds " +
                    std::to_string(Graph::kMaxOrder));
  }

  const long long bits = n * (n - 1) / 2;
  const std::size_t body = static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() - pos != body) {
    throw ParseError(base + std::min(text.size(), pos + body),
                     "expected " + std::to_string(body) +
                         " adjacency bytes for order " + std::to_string(n) +
                         ", found " + std::to_string(text.size() - pos));
  }

  GraphBuilder builder(static_cast<int>(n));
  long long k = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++k) {
      int byte = text[pos + k / 6] - kBias;
      if ((byte >> (5 - k % 6)) & 1) builder.AddEdge(u, v);
    }
  }
  if (bits % 6 != 0) {
    int last = text[pos + body - 1] - kBias;
    int pad = 6 - static_cast<int>(bits % 6);
    if ((last & ((1 << pad) - 1)) != 0) {
      throw ParseError(base + pos + body - 1, "nonzero padding bits");
    }
  }
  return builder.Build();
}

std::string ToGraph6(const Graph& graph) {
  const int n = graph.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back(static_cast<char>(126));
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    }
  }
  int acc = 0;
  int filled = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (graph.HasEdge(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) {
    out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  }
  return out;
}

std::vector<Graph> ReadGraph6Stream(std::istream& in) {
  std::vector<Graph> graphs;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line == kGraph6Header) continue;
    graphs.push_back(ParseGraph6(line));
  }
  return graphs;
}

Graph ParseEdgeList(std::istream& in) {
  int n = 0;
  int m = 0;
  if (!(in >> n >> m) || n < 0 || m < 0) {
    throw Error(ErrorCode::kParseError, "edge list must start with \"n m\"");
  }
  GraphBuilder builder(n);
  for (int i = 0; i < m; ++i) {
    int u = 0;
    int v = 0;
    if (!(in >> u >> v)) {
      throw Error(ErrorCode::kParseError,
                  "edge line " + std::to_string(i + 1) + " of " +
                      std::to_string(m) + " is missing or malformed");
    }
    builder.AddEdge(u, v);
  }
  return builder.Build();
}

std::string ToEdgeList(const Graph& graph) {
  std::ostringstream out;
  auto edges = graph.Edges();
  out << graph.order() << ' ' << edges.size() << '\n';
  for (const auto& [u, v] : edges) out << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace extraconn
