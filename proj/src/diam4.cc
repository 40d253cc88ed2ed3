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

#include "tspan/diam4.h"

#include <algorithm>

#include <numeric>

#include "tspan/errors.h"
#include "tspan/spanner.h"

namespace tspan {

std::optional<std::vector<ComponentCover>> CoverComponents(const Graph& g,
                                                           VertexId hub) {
  std::vector<VertexId> closed(g.neighbors(hub).begin(),
                               g.neighbors(hub).end());
  closed.push_back(hub);
  std::vector<ComponentCover> covers;
  for (auto& comp : ComponentsWithout(g, closed)) {
    VertexId cover = kNoVertex;
    for (VertexId v : g.neighbors(hub)) {
      auto nv = g.neighbors(v);
      if (std::includes(nv.begin(), nv.end(), comp.begin(), comp.end())) {
        cover = v;
        break;
      }
    }
    if (cover == kNoVertex) return std::nullopt;
    covers.push_back({std::move(comp), cover});
  }
  return covers;
}

std::optional<Diam4Witness> DecideTree3Diam4(const Graph& g, Execution exec) {
  if (g.empty()) throw InvalidInput("graph is empty");
  if (!IsConnected(g)) throw InvalidInput("graph is disconnected");

  std::vector<VertexId> hubs(g.num_vertices());
  std::iota(hubs.begin(), hubs.end(), 0);
  auto feasible = [&](VertexId u) { return CoverComponents(g, u).has_value(); };
  auto first = FirstMatch(std::span<const VertexId>(hubs), feasible, exec);
  if (!first) return std::nullopt;

  const VertexId hub = hubs[*first];
  auto covers = *CoverComponents(g, hub);
  std::vector<VertexId> parent(g.num_vertices(), kNoVertex);
  for (VertexId x : g.neighbors(hub)) parent[x] = hub;
  for (const auto& c : covers) {
    for (VertexId x : c.component) parent[x] = c.cover;
  }
  auto tree = SpanningTree::FromParents(g, std::move(parent));
  return Diam4Witness{hub, std::move(covers), std::move(tree)};
}

std::optional<SpanningTree> DecideSmallT(const Graph& g, int stretch) {
  if (stretch != 0 && stretch != 1) {
    throw InvalidInput("DecideSmallT handles stretch 0 and 1 only");
  }
  if (g.empty()) throw InvalidInput("graph is empty");
  if (!IsConnected(g)) throw InvalidInput("graph is disconnected");
  if (g.num_edges() != g.num_vertices() - 1) return std::nullopt;
  auto edges = g.edges();
  auto tree = SpanningTree::FromEdges(g, edges, 0);
  if (!IsTreeSpanner(g, tree, stretch) || TreeDiameter(tree) > stretch + 1) {
    return std::nullopt;
  }
  return tree;
}

}  // namespace tspan
