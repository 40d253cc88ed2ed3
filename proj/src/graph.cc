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

#include "tspan/graph.h"

#include <algorithm>
#include <deque>

#include "tspan/errors.h"

namespace tspan {

Graph::Graph() : data_(std::make_shared<const Data>()) {}

const std::string& Graph::label(VertexId v) const {
  if (!contains(v)) throw InvalidInput("vertex id out of range");
  return data_->labels[v];
}

std::optional<VertexId> Graph::find(std::string_view label) const {
  const auto& labels = data_->labels;
  auto it = std::lower_bound(labels.begin(), labels.end(), label);
  if (it == labels.end() || *it != label) return std::nullopt;
  return static_cast<VertexId>(it - labels.begin());
}

VertexId Graph::id(std::string_view label) const {
  if (auto v = find(label)) return *v;
  throw InvalidInput("unknown vertex '" + std::string(label) + "'");
}

std::span<const VertexId> Graph::neighbors(VertexId v) const {
  if (!contains(v)) throw InvalidInput("vertex id out of range");
  return data_->adjacency[v];
}

bool Graph::adjacent(VertexId a, VertexId b) const {
  auto n = neighbors(a);
  return std::binary_search(n.begin(), n.end(), b);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges());
  for (VertexId u = 0; u < static_cast<VertexId>(num_vertices()); ++u) {
    for (VertexId v : data_->adjacency[u]) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

bool operator==(const Graph& a, const Graph& b) {
  if (a.data_ == b.data_) return true;
  return a.data_->labels == b.data_->labels &&
         a.data_->adjacency == b.data_->adjacency;
}

GraphBuilder& GraphBuilder::AddVertex(std::string label) {
  if (label.empty()) throw InvalidInput("empty vertex label");
  vertices_.insert(std::move(label));
  return *this;
}

GraphBuilder& GraphBuilder::AddEdge(std::string a, std::string b) {
  if (a == b) throw InvalidInput("self-loop at '" + a + "'");
  if (a.empty() || b.empty()) throw InvalidInput("empty vertex label");
  vertices_.insert(a);
  vertices_.insert(b);
  if (b < a) std::swap(a, b);
  edges_.emplace(std::move(a), std::move(b));
  return *this;
}

GraphBuilder& GraphBuilder::AddPath(std::initializer_list<std::string> labels) {
  return AddPath(std::span<const std::string>(labels.begin(), labels.size()));
}

GraphBuilder& GraphBuilder::AddPath(std::span<const std::string> labels) {
  if (labels.size() == 1) AddVertex(labels[0]);
  for (std::size_t i = 1; i < labels.size(); ++i) {
    AddEdge(labels[i - 1], labels[i]);
  }
  return *this;
}

GraphBuilder& GraphBuilder::AddGraph(const Graph& g) {
  for (const auto& l : g.labels()) AddVertex(l);
  for (const Edge& e : g.edges()) AddEdge(g.label(e.u), g.label(e.v));
  return *this;
}

Graph GraphBuilder::Build() const {
  auto data = std::make_shared<Graph::Data>();
  data->labels.assign(vertices_.begin(), vertices_.end());
  data->adjacency.resize(data->labels.size());
  auto index = [&](const std::string& l) {
    auto it = std::lower_bound(data->labels.begin(), data->labels.end(), l);
    return static_cast<VertexId>(it - data->labels.begin());
  };
  for (const auto& [a, b] : edges_) {
    VertexId u = index(a);
    VertexId v = index(b);
    data->adjacency[u].push_back(v);
    data->adjacency[v].push_back(u);
  }
  for (auto& adj : data->adjacency) std::sort(adj.begin(), adj.end());
  data->num_edges = edges_.size();
  return Graph(std::move(data));
}

Center Center::Single(VertexId v) { return Center({v, kNoVertex}, 1); }

Center Center::Pair(VertexId a, VertexId b) {
  if (a == b) throw InvalidInput("center pair needs two distinct vertices");
  if (b < a) std::swap(a, b);
  return Center({a, b}, 2);
}

SpanningTree::SpanningTree(Graph host, std::vector<VertexId> parent,
                           VertexId root)
    : host_(std::move(host)),
      parent_(std::move(parent)),
      depth_(parent_.size(), -1),
      adjacency_(parent_.size()),
      root_(root) {
  for (VertexId v = 0; v < static_cast<VertexId>(parent_.size()); ++v) {
    if (parent_[v] == kNoVertex) continue;
    adjacency_[v].push_back(parent_[v]);
    adjacency_[parent_[v]].push_back(v);
  }
  for (auto& adj : adjacency_) std::sort(adj.begin(), adj.end());
  std::deque<VertexId> queue{root_};
  depth_[root_] = 0;
  while (!queue.empty()) {
    VertexId x = queue.front();
    queue.pop_front();
    for (VertexId y : adjacency_[x]) {
      if (depth_[y] < 0) {
        depth_[y] = depth_[x] + 1;
        queue.push_back(y);
      }
    }
  }
}

SpanningTree SpanningTree::FromParents(Graph host,
                                       std::vector<VertexId> parent) {
  const std::size_t n = host.num_vertices();
  if (n == 0) throw NotSpanningTree("the empty graph has no spanning tree");
  if (parent.size() != n) {
    throw NotSpanningTree("parent array size does not match host graph");
  }
  VertexId root = kNoVertex;
  for (VertexId v = 0; v < static_cast<VertexId>(n); ++v) {
    VertexId p = parent[v];
    if (p == kNoVertex) {
      if (root != kNoVertex) throw NotSpanningTree("more than one root");
      root = v;
    } else if (!host.contains(p) || !host.adjacent(v, p)) {
      throw NotSpanningTree("tree edge " + host.label(v) +
                            " is not an edge of the host graph");
    }
  }
  if (root == kNoVertex) throw NotSpanningTree("no root");
  SpanningTree tree(std::move(host), std::move(parent), root);
  for (int d : tree.depth_) {
    if (d < 0) throw NotSpanningTree("parent pointers contain a cycle");
  }
  return tree;
}

SpanningTree SpanningTree::FromEdges(Graph host, std::span<const Edge> edges,
                                     VertexId root) {
  const std::size_t n = host.num_vertices();
  if (n == 0) throw NotSpanningTree("the empty graph has no spanning tree");
  if (!host.contains(root)) throw NotSpanningTree("root not in host graph");
  if (edges.size() != n - 1) {
    throw NotSpanningTree("expected " + std::to_string(n - 1) +
                          " tree edges, got " + std::to_string(edges.size()));
  }
  std::vector<std::vector<VertexId>> adj(n);
  for (const Edge& e : edges) {
    if (!host.contains(e.u) || !host.contains(e.v) ||
        !host.adjacent(e.u, e.v)) {
      throw NotSpanningTree("candidate edge is not an edge of the host graph");
    }
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<VertexId> parent(n, kNoVertex);
  std::vector<char> seen(n, 0);
  std::deque<VertexId> queue{root};
  seen[root] = 1;
  std::size_t reached = 1;
  while (!queue.empty()) {
    VertexId x = queue.front();
    queue.pop_front();
    for (VertexId y : adj[x]) {
      if (seen[y]) continue;
      seen[y] = 1;
      parent[y] = x;
      ++reached;
      queue.push_back(y);
    }
  }
  if (reached != n) throw NotSpanningTree("candidate edges do not span");
  return SpanningTree(std::move(host), std::move(parent), root);
}

std::span<const VertexId> SpanningTree::neighbors(VertexId v) const {
  return adjacency_.at(v);
}

bool SpanningTree::has_edge(VertexId a, VertexId b) const {
  if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= parent_.size() ||
      static_cast<std::size_t>(b) >= parent_.size()) {
    return false;
  }
  return parent_[a] == b || parent_[b] == a;
}

std::vector<Edge> SpanningTree::edges() const {
  std::vector<Edge> out;
  out.reserve(parent_.size());
  for (VertexId v = 0; v < static_cast<VertexId>(parent_.size()); ++v) {
    if (parent_[v] != kNoVertex) out.push_back(Edge::Of(v, parent_[v]));
  }
  std::sort(out.begin(), out.end());
  return out;
}

SpanningTree SpanningTree::Rerooted(VertexId root) const {
  if (root == root_) return *this;
  auto e = edges();
  return FromEdges(host_, e, root);
}

Graph SpanningTree::AsGraph() const {
  GraphBuilder b;
  for (const auto& l : host_.labels()) b.AddVertex(l);
  for (const Edge& e : edges()) b.AddEdge(host_.label(e.u), host_.label(e.v));
  return b.Build();
}

bool operator==(const SpanningTree& a, const SpanningTree& b) {
  return a.host_ == b.host_ && a.edges() == b.edges();
}

std::vector<int> DistancesFrom(const Graph& g,
                               std::span<const VertexId> sources) {
  if (sources.empty()) throw InvalidInput("empty source set");
  std::vector<int> dist(g.num_vertices(), kUnreachable);
  std::deque<VertexId> queue;
  for (VertexId s : sources) {
    if (!g.contains(s)) throw InvalidInput("source vertex not in graph");
    if (dist[s] != 0) {
      dist[s] = 0;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    VertexId x = queue.front();
    queue.pop_front();
    for (VertexId y : g.neighbors(x)) {
      if (dist[y] == kUnreachable) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

std::vector<int> DistancesFrom(const Graph& g, const Center& sources) {
  return DistancesFrom(g, sources.vertices());
}

std::vector<std::vector<VertexId>> ComponentsWithout(
    const Graph& g, std::span<const VertexId> removed) {
  const std::size_t n = g.num_vertices();
  std::vector<char> gone(n, 0);
  for (VertexId r : removed) {
    if (!g.contains(r)) throw InvalidInput("removed vertex not in graph");
    gone[r] = 1;
  }
  std::vector<std::vector<VertexId>> components;
  std::vector<char> seen(n, 0);
  for (VertexId s = 0; s < static_cast<VertexId>(n); ++s) {
    if (gone[s] || seen[s]) continue;
    std::vector<VertexId> comp{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (VertexId y : g.neighbors(comp[i])) {
        if (!gone[y] && !seen[y]) {
          seen[y] = 1;
          comp.push_back(y);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    components.push_back(std::move(comp));
  }
  return components;
}

bool IsConnected(const Graph& g) {
  if (g.num_vertices() <= 1) return true;
  VertexId s = 0;
  auto dist = DistancesFrom(g, std::span<const VertexId>(&s, 1));
  return std::none_of(dist.begin(), dist.end(),
                      [](int d) { return d == kUnreachable; });
}

int TreeDistance(const SpanningTree& tree, VertexId x, VertexId y) {
  const auto n = static_cast<VertexId>(tree.num_vertices());
  if (x < 0 || y < 0 || x >= n || y >= n) {
    throw InvalidInput("vertex not in tree");
  }
  int steps = 0;
  while (x != y) {
    if (tree.depth(x) >= tree.depth(y)) {
      x = tree.parent(x);
    } else {
      y = tree.parent(y);
    }
    ++steps;
  }
  return steps;
}

bool TreeDistanceAtMost(const SpanningTree& tree, VertexId x, VertexId y,
                        int limit) {
  int steps = 0;
  while (x != y) {
    if (++steps > limit) return false;
    if (tree.depth(x) >= tree.depth(y)) {
      x = tree.parent(x);
    } else {
      y = tree.parent(y);
    }
  }
  return true;
}

std::vector<int> TreeDistancesFrom(const SpanningTree& tree,
                                   std::span<const VertexId> sources) {
  if (sources.empty()) throw InvalidInput("empty source set");
  std::vector<int> dist(tree.num_vertices(), kUnreachable);
  std::deque<VertexId> queue;
  for (VertexId s : sources) {
    if (s < 0 || static_cast<std::size_t>(s) >= dist.size()) {
      throw InvalidInput("source vertex not in tree");
    }
    dist[s] = 0;
    queue.push_back(s);
  }
  while (!queue.empty()) {
    VertexId x = queue.front();
    queue.pop_front();
    for (VertexId y : tree.neighbors(x)) {
      if (dist[y] == kUnreachable) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

int TreeDiameter(const SpanningTree& tree) {
  VertexId start = tree.root();
  auto first = TreeDistancesFrom(tree, std::span<const VertexId>(&start, 1));
  VertexId far = static_cast<VertexId>(
      std::max_element(first.begin(), first.end()) - first.begin());
  auto second = TreeDistancesFrom(tree, std::span<const VertexId>(&far, 1));
  return *std::max_element(second.begin(), second.end());
}

}  // namespace tspan
