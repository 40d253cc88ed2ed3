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

// Immutable labelled graphs, spanning trees and centers.
//
// Vertices carry string labels. Vertex ids are assigned in lexicographic
// label order, so iterating ids in increasing order is the same as iterating
// labels lexicographically, and every tie-break in the library that says
// "least vertex" means "least label".

#ifndef TSPAN_GRAPH_H_
#define TSPAN_GRAPH_H_

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tspan {

using VertexId = std::int32_t;
inline constexpr VertexId kNoVertex = -1;
inline constexpr int kUnreachable = -1;

// Undirected edge with u < v.
struct Edge {
  VertexId u = kNoVertex;
  VertexId v = kNoVertex;

  static Edge Of(VertexId a, VertexId b) {
    return a < b ? Edge{a, b} : Edge{b, a};
  }
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Undirected simple graph. Cheap to copy: the data is shared and never
// mutated after construction.
class Graph {
 public:
  Graph();

  std::size_t num_vertices() const { return data_->labels.size(); }
  std::size_t num_edges() const { return data_->num_edges; }
  bool empty() const { return data_->labels.empty(); }
  bool contains(VertexId v) const {
    return v >= 0 && static_cast<std::size_t>(v) < num_vertices();
  }

  const std::string& label(VertexId v) const;
  std::span<const std::string> labels() const { return data_->labels; }
  std::optional<VertexId> find(std::string_view label) const;
  // Throws InvalidInput for an unknown label.
  VertexId id(std::string_view label) const;

  // Sorted ascending.
  std::span<const VertexId> neighbors(VertexId v) const;
  std::size_t degree(VertexId v) const { return neighbors(v).size(); }
  bool adjacent(VertexId a, VertexId b) const;
  // All edges, sorted.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  friend class GraphBuilder;
  struct Data {
    std::vector<std::string> labels;
    std::vector<std::vector<VertexId>> adjacency;
    std::size_t num_edges = 0;
  };
  explicit Graph(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

  std::shared_ptr<const Data> data_;
};

// Accumulates labelled vertices and edges; duplicate edges collapse.
class GraphBuilder {
 public:
  GraphBuilder& AddVertex(std::string label);
  // Adds both endpoints. Throws InvalidInput on a self-loop.
  GraphBuilder& AddEdge(std::string a, std::string b);
  GraphBuilder& AddPath(std::initializer_list<std::string> labels);
  GraphBuilder& AddPath(std::span<const std::string> labels);
  // Adds every vertex and edge of g.
  GraphBuilder& AddGraph(const Graph& g);

  Graph Build() const;

 private:
  std::set<std::string> vertices_;
  std::set<std::pair<std::string, std::string>> edges_;
};

// One vertex, or an unordered pair of distinct vertices (stored ascending).
class Center {
 public:
  static Center Single(VertexId v);
  // Throws InvalidInput when a == b.
  static Center Pair(VertexId a, VertexId b);

  std::span<const VertexId> vertices() const { return {ids_.data(), size_}; }
  std::size_t size() const { return size_; }
  bool is_pair() const { return size_ == 2; }
  VertexId front() const { return ids_[0]; }
  bool contains(VertexId v) const {
    return ids_[0] == v || (size_ == 2 && ids_[1] == v);
  }

  friend bool operator==(const Center&, const Center&) = default;
  friend auto operator<=>(const Center& a, const Center& b) {
    if (auto c = a.ids_[0] <=> b.ids_[0]; c != 0) return c;
    if (auto c = a.size_ <=> b.size_; c != 0) return c;
    return a.ids_[1] <=> b.ids_[1];
  }

 private:
  Center(std::array<VertexId, 2> ids, std::size_t size)
      : ids_(ids), size_(size) {}
  std::array<VertexId, 2> ids_;
  std::size_t size_;
};

// A spanning tree of a host graph stored as a parent array. Construction
// validates the tree; instances are immutable.
class SpanningTree {
 public:
  // parent[root] == kNoVertex for exactly one vertex. Throws NotSpanningTree.
  static SpanningTree FromParents(Graph host, std::vector<VertexId> parent);
  // Throws NotSpanningTree unless edges form a spanning tree of host.
  static SpanningTree FromEdges(Graph host, std::span<const Edge> edges,
                                VertexId root);

  const Graph& host() const { return host_; }
  VertexId root() const { return root_; }
  std::size_t num_vertices() const { return parent_.size(); }
  VertexId parent(VertexId v) const { return parent_[v]; }
  std::span<const VertexId> parents() const { return parent_; }
  int depth(VertexId v) const { return depth_[v]; }
  // Tree neighbors, sorted ascending.
  std::span<const VertexId> neighbors(VertexId v) const;
  bool has_edge(VertexId a, VertexId b) const;
  std::vector<Edge> edges() const;

  SpanningTree Rerooted(VertexId root) const;
  // The tree as a standalone graph over the host's labels.
  Graph AsGraph() const;

  // Same host graph and same edge set; the root is irrelevant.
  friend bool operator==(const SpanningTree& a, const SpanningTree& b);

 private:
  SpanningTree(Graph host, std::vector<VertexId> parent, VertexId root);

  Graph host_;
  std::vector<VertexId> parent_;
  std::vector<int> depth_;
  std::vector<std::vector<VertexId>> adjacency_;
  VertexId root_ = kNoVertex;
};

// Multi-source BFS distances; kUnreachable where no path exists.
// Throws InvalidInput on an empty or foreign source set.
std::vector<int> DistancesFrom(const Graph& g, std::span<const VertexId> sources);
std::vector<int> DistancesFrom(const Graph& g, const Center& sources);

// Connected components of g minus `removed`, each sorted, ordered by their
// least member.
std::vector<std::vector<VertexId>> ComponentsWithout(
    const Graph& g, std::span<const VertexId> removed);

bool IsConnected(const Graph& g);

// Exact length of the tree path between x and y.
int TreeDistance(const SpanningTree& tree, VertexId x, VertexId y);
// True iff TreeDistance(tree, x, y) <= limit; stops climbing after `limit`
// steps.
bool TreeDistanceAtMost(const SpanningTree& tree, VertexId x, VertexId y,
                        int limit);
// Distances inside the tree from a vertex set.
std::vector<int> TreeDistancesFrom(const SpanningTree& tree,
                                   std::span<const VertexId> sources);
int TreeDiameter(const SpanningTree& tree);

}  // namespace tspan

#endif  // TSPAN_GRAPH_H_
