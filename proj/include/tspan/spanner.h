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

// Tree t-spanners, t-centers, t-stars and t-midsts.
//
// A spanning tree T of G is a tree t-spanner when every pair of vertices at
// distance d in G is at distance at most t*d in T; checking the edges of G is
// enough. A t-center is one vertex (t even) or an adjacent pair (t odd) that
// is within floor(t/2) of every vertex. A graph has a t-center, or is the
// one-vertex graph, exactly when it has a spanning tree of diameter <= t.

#ifndef TSPAN_SPANNER_H_
#define TSPAN_SPANNER_H_

#include <cstddef>
#include <span>
#include <vector>

#include "tspan/graph.h"

namespace tspan {

// floor(a / 2) for possibly negative a.
constexpr int FloorHalf(int a) { return a >= 0 ? a / 2 : -((1 - a) / 2); }

// True iff every edge of g has tree distance <= stretch.
// Throws InvalidInput when g is disconnected or the tree has another host.
bool IsTreeSpanner(const Graph& g, const SpanningTree& tree, int stretch);
// Same, for a raw candidate edge set. Throws NotSpanningTree when the
// candidate is not a spanning tree of g; returns false only for a genuine
// stretch violation.
bool IsTreeSpanner(const Graph& g, std::span<const Edge> candidate,
                   int stretch);

// Whether k is a t-center of g: parity of |k| matches t, a pair is adjacent,
// and every vertex is within floor(t/2) of k.
bool IsCenter(const Graph& g, const Center& k, int t);

// All t-centers of a connected non-empty graph, sorted.
std::vector<Center> FindCenters(const Graph& g, int t);

// Throws InvalidInput on an empty or disconnected graph.
bool IsTStar(const Graph& g, int t);

// BFS tree grown from k; each vertex hangs from its least neighbor one step
// closer to k and a pair center keeps its edge. d_T(k, x) = d_G(k, x).
SpanningTree BfsTreeFromCenter(const Graph& g, const Center& k);

// A t-midst of a path: one vertex (t odd) or a pair of consecutive vertices
// (t even) lying strictly more than floor((t-1)/2) from both endpoints.
struct Midst {
  std::vector<VertexId> vertices;  // in path order
  std::size_t position = 0;        // index of vertices.front() in path
  std::vector<VertexId> path;
};

// All t-midsts in path order. Throws InvalidInput if the path repeats a
// vertex.
std::vector<Midst> TMidsts(std::span<const VertexId> path, int t);

// Deletes every vertex within tree distance floor((stretch-1)/2) of the midst
// and reports whether the endpoints of `path` end up disconnected in g.
// Throws PreconditionFailed unless `path` is a tree path and m one of its
// stretch-midsts.
bool CheckMidstSeparation(const Graph& g, const SpanningTree& tree,
                          std::span<const VertexId> path, const Midst& m,
                          int stretch);

// True iff no edge of g joins two vertices at tree distance exactly t+1.
// For trees of diameter <= t+1 this is equivalent to IsTreeSpanner.
bool HasNoAdjacentFarPair(const Graph& g, const SpanningTree& tree, int t);

// Membership certificate check: diameter <= t+1 and no adjacent far pair.
bool IsBoundedDiameterSpanner(const Graph& g, const SpanningTree& tree, int t);

}  // namespace tspan

#endif  // TSPAN_SPANNER_H_
