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

// Rewrites a tree t-spanner with a (t+1)-center K into a tree t-spanner in
// which every vertex is as close to K as it is in the host graph.
//
// Each round picks the violating vertex u closest to K (least label on ties)
// and its least neighbor v that is one step closer to K and not violating,
// then replaces u's parent edge with uv. The subtree below u moves strictly
// closer to K, so the violating set shrinks by at least one per swap and K
// stays a (t+1)-center throughout.

#ifndef TSPAN_NORMALIZE_H_
#define TSPAN_NORMALIZE_H_

#include <vector>

#include "tspan/graph.h"

namespace tspan {

struct EdgeSwap {
  Edge removed;
  Edge added;
  friend bool operator==(const EdgeSwap&, const EdgeSwap&) = default;
};

struct ViolationReport {
  // Vertices of the input tree with d_G(K, x) < d_T(K, x), ascending.
  std::vector<VertexId> violating;
  std::vector<EdgeSwap> swaps_performed;
};

struct NormalizeResult {
  SpanningTree tree;
  ViolationReport report;
};

// Vertices whose tree distance to k exceeds their graph distance, ascending.
std::vector<VertexId> ViolatingSet(const Graph& g, const SpanningTree& tree,
                                   const Center& k);

// Throws PreconditionFailed unless `tree` is a tree stretch-spanner of g and
// k is a (stretch+1)-center of the tree.
NormalizeResult NormalizeShortestPaths(const Graph& g,
                                       const SpanningTree& tree, int stretch,
                                       const Center& k);

}  // namespace tspan

#endif  // TSPAN_NORMALIZE_H_
