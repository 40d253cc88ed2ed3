// Copyright 2026 The tspan Authors.
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

// Text formats for graphs and trees.
//
// Edge list: one item per line, '#' starts a comment.
//   n <label>      a vertex (needed only for isolated vertices)
//   root <label>   tree files only; defaults to the smallest label
//   <a> <b>        an edge
// Labels may not contain whitespace or '#', and may not be "n" or "root".
//
// JSON: {"vertices": [...], "edges": [[a, b], ...]} plus "root" for trees.
// Output is canonical: sorted labels, sorted edges, sorted keys.
//
// DOT is write-only.

#ifndef TSPAN_GRAPH_IO_H_
#define TSPAN_GRAPH_IO_H_

#include <filesystem>
#include <string>
#include <string_view>

#include "tspan/graph.h"

namespace tspan {

enum class Format { kEdgeList, kJson, kDot };

// Accepts "el", "json" and "dot".
Format ParseFormat(std::string_view name);

// Input starting with '{' is read as JSON, anything else as an edge list.
// Throws InvalidInput on malformed text.
Graph ParseGraph(std::string_view text);

// Reads a tree over the vertices of host. Throws InvalidInput for unknown
// labels and NotSpanningTree when the edges are not a spanning tree of host.
SpanningTree ParseTree(std::string_view text, const Graph& host);

// "a" or "a,b"; a pair must be adjacent in g. Throws InvalidInput.
Center ParseCenter(std::string_view list, const Graph& g);

std::string EmitGraph(const Graph& g, Format format);
std::string EmitTree(const SpanningTree& tree, Format format);

// Throws InvalidInput when the file cannot be read.
std::string ReadFile(const std::filesystem::path& path);

}  // namespace tspan

#endif  // TSPAN_GRAPH_IO_H_
