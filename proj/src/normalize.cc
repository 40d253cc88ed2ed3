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

#include "tspan/normalize.h"

#include <stdexcept>

#include "tspan/errors.h"
#include "tspan/spanner.h"

namespace tspan {
namespace {

// d_T(K, .) for a parent array rooted inside K.
std::vector<int> DepthsToCenter(const std::vector<VertexId>& parent,
                                const Center& k) {
  const std::size_t n = parent.size();
  std::vector<int> depth(n, -1);
  for (VertexId c : k.vertices()) depth[c] = 0;
  for (VertexId v = 0; v < static_cast<VertexId>(n); ++v) {
    // Walk up to the first vertex with a known depth, then unwind.
    std::vector<VertexId> chain;
    VertexId x = v;
    while (depth[x] < 0) {
      chain.push_back(x);
      x = parent[x];
    }
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
      depth[*it] = depth[parent[*it]] + 1;
    }
  }
  return depth;
}

}  // namespace

std::vector<VertexId> ViolatingSet(const Graph& g, const SpanningTree& tree,
                                   const Center& k) {
  if (!(tree.host() == g)) {
    throw InvalidInput("tree belongs to a different host graph");
  }
  const auto graph_dist = DistancesFrom(g, k);
  const auto tree_dist = TreeDistancesFrom(tree, k.vertices());
  std::vector<VertexId> out;
  for (VertexId x = 0; x < static_cast<VertexId>(g.num_vertices()); ++x) {
    if (graph_dist[x] < tree_dist[x]) out.push_back(x);
  }
  return out;
}

NormalizeResult NormalizeShortestPaths(const Graph& g,
                                       const SpanningTree& tree, int stretch,
                                       const Center& k) {
  if (!(tree.host() == g)) {
    throw PreconditionFailed("tree belongs to a different host graph");
  }
  if (!IsTreeSpanner(g, tree, stretch)) {
    throw PreconditionFailed("input is not a tree " + std::to_string(stretch) +
                             "-spanner");
  }
  if (!IsCenter(tree.AsGraph(), k, stretch + 1)) {
    throw PreconditionFailed("center is not a (" +
                             std::to_string(stretch + 1) +
                             ")-center of the tree");
  }

  NormalizeResult result{tree.Rerooted(k.front()), {}};
  result.report.violating = ViolatingSet(g, tree, k);
  if (result.report.violating.empty()) return result;

  const auto graph_dist = DistancesFrom(g, k);
  std::vector<VertexId> parent(result.tree.parents().begin(),
                               result.tree.parents().end());
  const std::size_t limit = g.num_vertices();
  for (std::size_t round = 0;; ++round) {
    if (round > limit) {
      throw std::logic_error("normalization failed to converge");
    }
    const auto depth = DepthsToCenter(parent, k);
    VertexId u = kNoVertex;
    for (VertexId x = 0; x < static_cast<VertexId>(parent.size()); ++x) {
      if (graph_dist[x] < depth[x] &&
          (u == kNoVertex || graph_dist[x] < graph_dist[u])) {
        u = x;
      }
    }
    if (u == kNoVertex) break;
    VertexId v = kNoVertex;
    for (VertexId y : g.neighbors(u)) {
      if (graph_dist[y] == graph_dist[u] - 1 && depth[y] == graph_dist[y]) {
        v = y;
        break;
      }
    }
    if (v == kNoVertex) {
      throw std::logic_error("no non-violating neighbor toward the center");
    }
    result.report.swaps_performed.push_back(
        {Edge::Of(u, parent[u]), Edge::Of(u, v)});
    parent[u] = v;
  }
  result.tree = SpanningTree::FromParents(g, std::move(parent));
  return result;
}

}  // namespace tspan
