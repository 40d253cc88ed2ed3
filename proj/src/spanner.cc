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

#include "tspan/spanner.h"

#include <algorithm>
#include <set>

#include "tspan/errors.h"
#include "tspan/kernels.h"

namespace tspan {
namespace {

// Above this size the pair-center scan uses per-candidate BFS instead of an
// all-pairs matrix.
constexpr std::size_t kMatrixLimit = 4096;
constexpr std::size_t kParallelEdgeThreshold = 4096;

void RequireConnected(const Graph& g) {
  if (g.empty()) throw InvalidInput("graph is empty");
  if (!IsConnected(g)) throw InvalidInput("graph is disconnected");
}

int Eccentricity(const std::vector<int>& dist) {
  int ecc = 0;
  for (int d : dist) {
    if (d == kUnreachable) return kUnreachable;
    ecc = std::max(ecc, d);
  }
  return ecc;
}

}  // namespace

bool IsTreeSpanner(const Graph& g, const SpanningTree& tree, int stretch) {
  RequireConnected(g);
  if (!(tree.host() == g)) {
    throw NotSpanningTree("tree belongs to a different host graph");
  }
  const Execution exec = g.num_edges() >= kParallelEdgeThreshold
                             ? Execution::kParallel
                             : Execution::kSerial;
  return CountStretchViolations(g, tree, stretch, exec) == 0;
}

bool IsTreeSpanner(const Graph& g, std::span<const Edge> candidate,
                   int stretch) {
  RequireConnected(g);
  auto tree = SpanningTree::FromEdges(g, candidate, 0);
  return IsTreeSpanner(g, tree, stretch);
}

bool IsCenter(const Graph& g, const Center& k, int t) {
  if (t < 0) return false;
  for (VertexId v : k.vertices()) {
    if (!g.contains(v)) return false;
  }
  if (k.is_pair() != (t % 2 == 1)) return false;
  if (k.is_pair() && !g.adjacent(k.vertices()[0], k.vertices()[1])) {
    return false;
  }
  int ecc = Eccentricity(DistancesFrom(g, k));
  return ecc != kUnreachable && ecc <= t / 2;
}

std::vector<Center> FindCenters(const Graph& g, int t) {
  RequireConnected(g);
  std::vector<Center> out;
  if (t < 0) return out;
  const std::size_t n = g.num_vertices();
  const int radius = t / 2;
  if (n <= kMatrixLimit) {
    const auto dist = AllPairsDistances(g, Execution::kParallel);
    auto row = [&](VertexId v) { return dist.data() + v * n; };
    if (t % 2 == 0) {
      for (VertexId v = 0; v < static_cast<VertexId>(n); ++v) {
        const int* r = row(v);
        if (*std::max_element(r, r + n) <= radius) {
          out.push_back(Center::Single(v));
        }
      }
    } else {
      for (const Edge& e : g.edges()) {
        const int* a = row(e.u);
        const int* b = row(e.v);
        bool ok = true;
        for (std::size_t x = 0; x < n && ok; ++x) {
          ok = std::min(a[x], b[x]) <= radius;
        }
        if (ok) out.push_back(Center::Pair(e.u, e.v));
      }
    }
    return out;
  }
  if (t % 2 == 0) {
    for (VertexId v = 0; v < static_cast<VertexId>(n); ++v) {
      if (IsCenter(g, Center::Single(v), t)) out.push_back(Center::Single(v));
    }
  } else {
    for (const Edge& e : g.edges()) {
      auto k = Center::Pair(e.u, e.v);
      if (IsCenter(g, k, t)) out.push_back(k);
    }
  }
  return out;
}

bool IsTStar(const Graph& g, int t) {
  RequireConnected(g);
  if (g.num_vertices() == 1) return t >= 0;
  return !FindCenters(g, t).empty();
}

SpanningTree BfsTreeFromCenter(const Graph& g, const Center& k) {
  for (VertexId v : k.vertices()) {
    if (!g.contains(v)) throw InvalidInput("center vertex not in graph");
  }
  if (k.is_pair() && !g.adjacent(k.vertices()[0], k.vertices()[1])) {
    throw InvalidInput("center pair is not adjacent");
  }
  const auto dist = DistancesFrom(g, k);
  const std::size_t n = g.num_vertices();
  std::vector<VertexId> parent(n, kNoVertex);
  for (VertexId x = 0; x < static_cast<VertexId>(n); ++x) {
    if (dist[x] == kUnreachable) throw InvalidInput("graph is disconnected");
    if (dist[x] == 0) continue;
    for (VertexId y : g.neighbors(x)) {
      if (dist[y] == dist[x] - 1) {
        parent[x] = y;
        break;
      }
    }
  }
  if (k.is_pair()) parent[k.vertices()[1]] = k.vertices()[0];
  return SpanningTree::FromParents(g, std::move(parent));
}

std::vector<Midst> TMidsts(std::span<const VertexId> path, int t) {
  std::set<VertexId> seen(path.begin(), path.end());
  if (seen.size() != path.size()) {
    throw InvalidInput("midst requested for a path that repeats a vertex");
  }
  std::vector<Midst> out;
  if (path.empty() || t < 0) return out;
  const int length = static_cast<int>(path.size()) - 1;
  const int reach = FloorHalf(t - 1);
  const int width = (t % 2 == 0) ? 1 : 0;  // edges inside the midst
  for (int i = 0; i + width <= length; ++i) {
    if (i > reach && length - (i + width) > reach) {
      Midst m;
      m.position = static_cast<std::size_t>(i);
      m.vertices.assign(path.begin() + i, path.begin() + i + width + 1);
      m.path.assign(path.begin(), path.end());
      out.push_back(std::move(m));
    }
  }
  return out;
}

bool CheckMidstSeparation(const Graph& g, const SpanningTree& tree,
                          std::span<const VertexId> path, const Midst& m,
                          int stretch) {
  if (!(tree.host() == g)) {
    throw PreconditionFailed("tree belongs to a different host graph");
  }
  for (std::size_t i = 1; i < path.size(); ++i) {
    if (!tree.has_edge(path[i - 1], path[i])) {
      throw PreconditionFailed("path is not a path of the tree");
    }
  }
  const auto midsts = TMidsts(path, stretch);
  const bool is_midst =
      std::any_of(midsts.begin(), midsts.end(), [&](const Midst& c) {
        return c.vertices == m.vertices && c.position == m.position;
      });
  if (!is_midst) {
    throw PreconditionFailed("not a midst of the given path");
  }
  const auto near = TreeDistancesFrom(tree, m.vertices);
  const int reach = FloorHalf(stretch - 1);
  std::vector<VertexId> removed;
  for (VertexId v = 0; v < static_cast<VertexId>(near.size()); ++v) {
    if (near[v] <= reach) removed.push_back(v);
  }
  const auto components = ComponentsWithout(g, removed);
  for (const auto& comp : components) {
    const bool has_front =
        std::binary_search(comp.begin(), comp.end(), path.front());
    const bool has_back =
        std::binary_search(comp.begin(), comp.end(), path.back());
    if (has_front || has_back) return !(has_front && has_back);
  }
  return true;
}

bool HasNoAdjacentFarPair(const Graph& g, const SpanningTree& tree, int t) {
  if (!(tree.host() == g)) {
    throw NotSpanningTree("tree belongs to a different host graph");
  }
  for (const Edge& e : g.edges()) {
    if (TreeDistance(tree, e.u, e.v) == t + 1) return false;
  }
  return true;
}

bool IsBoundedDiameterSpanner(const Graph& g, const SpanningTree& tree,
                              int t) {
  return TreeDiameter(tree) <= t + 1 && HasNoAdjacentFarPair(g, tree, t);
}

}  // namespace tspan
