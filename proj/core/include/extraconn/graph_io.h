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

#ifndef EXTRACONN_GRAPH_IO_H_
#define EXTRACONN_GRAPH_IO_H_

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "extraconn/graph.h"

namespace extraconn {

// Decodes one graph6 line. A leading ">>graph6<<" header and a trailing
// newline are tolerated. Throws ParseError (with the offending byte offset)
// on bad characters, wrong length, or nonzero padding bits.
Graph ParseGraph6(std::string_view text);

// Labeled (not isomorphism-canonical) graph6 encoding, no header, no newline.
// n <= 62 uses the one-byte length; larger orders use the 4-byte form.
std::string ToGraph6(const Graph& graph);

// One graph per non-empty line.
std::vector<Graph> ReadGraph6Stream(std::istream& in);

// Edge-list text: first line "n m", then m lines "u v" with 0-based vertices.
Graph ParseEdgeList(std::istream& in);
std::string ToEdgeList(const Graph& graph);

}  // namespace extraconn

#endif  // EXTRACONN_GRAPH_IO_H_
