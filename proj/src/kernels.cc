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

#include "tspan/kernels.h"

#include <algorithm>
#include <deque>

#include "tspan/errors.h"

namespace tspan {
namespace {

void BfsRow(const Graph& g, VertexId s, int* row, std::vector<VertexId>& queue) {
  const std::size_t n = g.num_vertices();
  std::fill(row, row + n, kUnreachable);
  queue.clear();
  queue.push_back(s);
  row[s] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    VertexId x = queue[head];
    for (VertexId y : g.neighbors(x)) {
      if (row[y] == kUnreachable) {
        row[y] = row[x] + 1;
        queue.push_back(y);
      }
    }
  }
}

void CheckHost(const Graph& g, const SpanningTree& tree) {
  if (!(tree.host() == g)) {
    throw InvalidInput("tree is not a spanning tree of this graph");
  }
}

}  // namespace

std::vector<int> AllPairsDistances(const Graph& g, Execution exec) {
  const std::size_t n = g.num_vertices();
  std::vector<int> dist(n * n, kUnreachable);
  if (exec == Execution::kSerial) {
    std::vector<VertexId> queue;
    for (std::size_t s = 0; s < n; ++s) {
      BfsRow(g, static_cast<VertexId>(s), dist.data() + s * n, queue);
    }
    return dist;
  }
#pragma omp parallel
  {
    std::vector<VertexId> queue;
#pragma omp for schedule(dynamic, 16)
    for (std::size_t s = 0; s < n; ++s) {
      BfsRow(g, static_cast<VertexId>(s), dist.data() + s * n, queue);
    }
  }
  return dist;
}

std::size_t CountStretchViolations(const Graph& g, const SpanningTree& tree,
                                   int stretch, Execution exec) {
  CheckHost(g, tree);
  const auto edges = g.edges();
  const std::size_t m = edges.size();
  std::size_t bad = 0;
  if (exec == Execution::kSerial) {
    for (const Edge& e : edges) {
      if (!TreeDistanceAtMost(tree, e.u, e.v, stretch)) ++bad;
    }
    return bad;
  }
#pragma omp parallel for schedule(static) reduction(+ : bad)
  for (std::size_t i = 0; i < m; ++i) {
    if (!TreeDistanceAtMost(tree, edges[i].u, edges[i].v, stretch)) ++bad;
  }
  return bad;
}

int MaxEdgeStretch(const Graph& g, const SpanningTree& tree, Execution exec) {
  CheckHost(g, tree);
  const auto edges = g.edges();
  const std::size_t m = edges.size();
  int worst = 0;
  if (exec == Execution::kSerial) {
    for (const Edge& e : edges) {
      worst = std::max(worst, TreeDistance(tree, e.u, e.v));
    }
    return worst;
  }
#pragma omp parallel for schedule(static) reduction(max : worst)
  for (std::size_t i = 0; i < m; ++i) {
    worst = std::max(worst, TreeDistance(tree, edges[i].u, edges[i].v));
  }
  return worst;
}

}  // namespace tspan
