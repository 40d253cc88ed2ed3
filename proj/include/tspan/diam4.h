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

// Polynomial decision for tree 3-spanners of diameter at most 4, and the
// trivial stretch 0 and 1 cases.
//
// A graph has such a tree iff some hub u has every component Q of G - N[u]
// inside the neighborhood of a single neighbor v_Q of u. The witness tree
// joins u to all its neighbors and every vertex of Q to v_Q.

#ifndef TSPAN_DIAM4_H_
#define TSPAN_DIAM4_H_

#include <optional>
#include <vector>

#include "tspan/graph.h"
#include "tspan/kernels.h"

namespace tspan {

struct ComponentCover {
  std::vector<VertexId> component;  // sorted
  VertexId cover = kNoVertex;       // least neighbor of the hub covering it
};

struct Diam4Witness {
  VertexId hub = kNoVertex;
  std::vector<ComponentCover> assignment;
  SpanningTree tree;
};

// Covers for every component of g - N[hub], or nullopt if some component has
// no covering neighbor.
std::optional<std::vector<ComponentCover>> CoverComponents(const Graph& g,
                                                           VertexId hub);

// Witness for the least feasible hub. Both execution paths report the same
// hub. Throws InvalidInput for an empty or disconnected graph.
std::optional<Diam4Witness> DecideTree3Diam4(
    const Graph& g, Execution exec = Execution::kSerial);

// Stretch 0 or 1: the graph must itself be a tree t-spanner of diameter at
// most t+1. Throws InvalidInput for other stretch values.
std::optional<SpanningTree> DecideSmallT(const Graph& g, int stretch);

}  // namespace tspan

#endif  // TSPAN_DIAM4_H_
