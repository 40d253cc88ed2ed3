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

#include "tspan/gadgets.h"

#include <algorithm>
#include <set>
#include <utility>

#include "tspan/errors.h"
#include "tspan/normalize.h"
#include "tspan/spanner.h"

namespace tspan {
namespace {

constexpr MatrixM kClauseMatrix = {{
    {1, 1, 1, 1, 0, 0, 0, 0},
    {0, 0, 0, 0, 1, 1, 1, 1},
    {1, 1, 0, 0, 1, 1, 0, 0},
    {0, 0, 1, 1, 0, 0, 1, 1},
    {1, 0, 1, 0, 1, 0, 1, 0},
    {0, 1, 0, 1, 0, 1, 0, 1},
}};

const char* const kReserved[] = {"u", "v", "hu", "hu'", "hv", "hv'"};

std::string Indexed(const char* prefix, int i) {
  return prefix + std::to_string(i);
}

std::string TailName(const char* prefix, int i) {
  return prefix + std::to_string(i) + "@tail";
}

using LabelEdge = std::pair<std::string, std::string>;

LabelEdge Sorted(std::string a, std::string b) {
  if (b < a) std::swap(a, b);
  return {std::move(a), std::move(b)};
}

// Builds the graph from labelled edges and the tree from the same edges
// minus `removed`.
Counterexample Assemble(int t, const std::vector<LabelEdge>& edges,
                        const std::set<LabelEdge>& removed,
                        const std::vector<std::string>& center,
                        const std::string& violator) {
  GraphBuilder b;
  for (const auto& [a, c] : edges) b.AddEdge(a, c);
  Graph g = b.Build();
  std::vector<Edge> tree_edges;
  for (const auto& [a, c] : edges) {
    if (!removed.count(Sorted(a, c))) {
      tree_edges.push_back(Edge::Of(g.id(a), g.id(c)));
    }
  }
  std::sort(tree_edges.begin(), tree_edges.end());
  tree_edges.erase(std::unique(tree_edges.begin(), tree_edges.end()),
                   tree_edges.end());
  Center k = center.size() == 1
                 ? Center::Single(g.id(center[0]))
                 : Center::Pair(g.id(center[0]), g.id(center[1]));
  auto tree = SpanningTree::FromEdges(g, tree_edges, k.front());
  return Counterexample{t, g, std::move(tree), k, g.id(violator)};
}

void RequireUvTreeCenter(const ReductionGraph& f, const SpanningTree& tree) {
  if (!IsTreeSpanner(f.graph, tree, 4)) {
    throw PreconditionFailed("tree is not a tree 4-spanner of f(I)");
  }
  if (!IsCenter(tree.AsGraph(), f.center(), 5)) {
    throw PreconditionFailed("{u, v} is not a 5-center of the tree");
  }
}

}  // namespace

const MatrixM& ClauseMatrix() { return kClauseMatrix; }

std::string ClauseVertexName(const std::string& variable, std::size_t clause) {
  return variable + "@c" + std::to_string(clause);
}

std::string QVertexName(int k, std::size_t clause) {
  return "q" + std::to_string(k) + "@c" + std::to_string(clause);
}

ReductionGraph BuildF(const CnfInstance& instance) {
  for (const auto& var : instance.variables()) {
    for (const char* r : kReserved) {
      if (var == r) {
        throw InvalidInput("variable name '" + var + "' is reserved");
      }
    }
  }
  GraphBuilder b;
  b.AddPath({"hu", "hu'", "u", "v", "hv'", "hv"});
  for (const auto& x : instance.variables()) {
    b.AddEdge(x, "u");
    b.AddEdge(x, "v");
  }
  const auto& m = ClauseMatrix();
  std::vector<std::size_t> retained;
  std::vector<std::size_t> filtered;
  for (std::size_t j = 0; j < instance.clauses().size(); ++j) {
    if (instance.IsTautology(j)) {
      filtered.push_back(j);
      continue;
    }
    retained.push_back(j);
    const Clause& c = instance.clauses()[j];
    std::array<std::string, 6> order;
    for (std::size_t i = 0; i < 3; ++i) {
      order[2 * i] = c[i].variable;
      order[2 * i + 1] = ClauseVertexName(c[i].variable, j + 1);
      b.AddEdge(order[2 * i + 1], c[i].positive ? "u" : "v");
    }
    for (int k = 1; k <= 8; ++k) {
      for (std::size_t i = 0; i < 6; ++i) {
        if (m[i][k - 1]) b.AddEdge(order[i], QVertexName(k, j + 1));
      }
      if (k < 8) b.AddEdge(QVertexName(k, j + 1), QVertexName(k + 1, j + 1));
    }
  }

  ReductionGraph f{
      .graph = b.Build(), .instance = instance, .gadgets = {}, .filtered = {}};
  const Graph& g = f.graph;
  f.u = g.id("u");
  f.v = g.id("v");
  f.hu = g.id("hu");
  f.hu_prime = g.id("hu'");
  f.hv = g.id("hv");
  f.hv_prime = g.id("hv'");
  f.filtered = std::move(filtered);
  for (std::size_t j : retained) {
    const Clause& c = instance.clauses()[j];
    ClauseGadget gadget;
    gadget.clause = j;
    for (std::size_t i = 0; i < 3; ++i) {
      gadget.variables[i] = g.id(c[i].variable);
      gadget.literal_sides[i] = g.id(ClauseVertexName(c[i].variable, j + 1));
      gadget.positive[i] = c[i].positive;
    }
    for (int k = 1; k <= 8; ++k) gadget.q[k - 1] = g.id(QVertexName(k, j + 1));
    f.gadgets.push_back(gadget);
  }
  return f;
}

TailGraph BuildH(const ReductionGraph& f, int t) {
  if (t < 5) throw InvalidInput("tail gadget needs t >= 5");
  std::vector<std::string> path{"u"};
  for (int i = 2; i <= t - 3; ++i) path.push_back(TailName("r", i));
  path.push_back("v");
  const int lo = (t - 1) / 2;  // 1-based index into path
  const int hi = t / 2;        // ceil((t - 1) / 2)
  const int pendant = (t + 1) / 2;
  std::vector<std::string> p1{path[lo - 1]};
  std::vector<std::string> p2{path[hi - 1]};
  for (int i = 1; i <= pendant; ++i) {
    p1.push_back(TailName("p1_", i));
    p2.push_back(TailName("p2_", i));
  }

  GraphBuilder b;
  b.AddGraph(f.graph);
  b.AddPath(path);
  b.AddPath(p1);
  b.AddPath(p2);
  TailGraph h{b.Build(), {}};
  auto ids = [&](const std::vector<std::string>& labels) {
    std::vector<VertexId> out;
    for (const auto& l : labels) out.push_back(h.graph.id(l));
    return out;
  };
  h.tail.t = t;
  h.tail.path = ids(path);
  h.tail.p1 = ids(p1);
  h.tail.p2 = ids(p2);
  h.tail.center = lo == hi ? Center::Single(h.tail.path[lo - 1])
                           : Center::Pair(h.tail.path[lo - 1],
                                          h.tail.path[hi - 1]);
  return h;
}

SpanningTree TreeFromAssignment(const ReductionGraph& f,
                                const TruthAssignment& a) {
  const Graph& g = f.graph;
  for (const auto& x : f.instance.variables()) {
    if (!a.values.count(x)) {
      throw InvalidInput("assignment leaves variable " + x + " unset");
    }
  }
  if (!a.Satisfies(f.instance)) {
    throw InvalidInput("assignment does not satisfy the instance");
  }
  std::vector<Edge> edges;
  for (const auto& x : f.instance.variables()) {
    edges.push_back(Edge::Of(g.id(x), a.values.at(x) ? f.u : f.v));
  }
  edges.push_back(Edge::Of(f.hu, f.hu_prime));
  edges.push_back(Edge::Of(f.hu_prime, f.u));
  edges.push_back(Edge::Of(f.u, f.v));
  edges.push_back(Edge::Of(f.v, f.hv_prime));
  edges.push_back(Edge::Of(f.hv_prime, f.hv));

  const auto& m = ClauseMatrix();
  for (const ClauseGadget& gadget : f.gadgets) {
    const Clause& c = f.instance.clauses()[gadget.clause];
    std::size_t pick = 3;
    if (auto it = a.witness.find(gadget.clause); it != a.witness.end()) {
      for (std::size_t i = 0; i < 3; ++i) {
        if (c[i].variable == it->second &&
            a.values.at(c[i].variable) == c[i].positive) {
          pick = i;
        }
      }
      if (pick == 3) {
        throw InvalidInput("witness " + it->second +
                           " does not satisfy its clause");
      }
    } else {
      for (std::size_t i = 0; i < 3 && pick == 3; ++i) {
        if (a.values.at(c[i].variable) == c[i].positive) pick = i;
      }
    }
    for (std::size_t i = 0; i < 3; ++i) {
      edges.push_back(
          Edge::Of(gadget.literal_sides[i], gadget.positive[i] ? f.u : f.v));
    }
    const auto order = gadget.order();
    for (std::size_t row = 2 * pick; row <= 2 * pick + 1; ++row) {
      for (std::size_t k = 0; k < 8; ++k) {
        if (m[row][k]) edges.push_back(Edge::Of(order[row], gadget.q[k]));
      }
    }
  }
  return SpanningTree::FromEdges(g, edges, f.u);
}

TruthAssignment AssignmentFromTree(const ReductionGraph& f,
                                   const SpanningTree& tree) {
  if (!(tree.host() == f.graph)) {
    throw PreconditionFailed("tree is not a spanning tree of f(I)");
  }
  RequireUvTreeCenter(f, tree);
  if (!ViolatingSet(f.graph, tree, f.center()).empty()) {
    throw PreconditionFailed(
        "tree is not a shortest-paths tree to {u, v}; normalize it first");
  }
  const Graph& g = f.graph;
  TruthAssignment a;
  for (const auto& x : f.instance.variables()) {
    a.values[x] = tree.has_edge(g.id(x), f.u);
  }
  for (const ClauseGadget& gadget : f.gadgets) {
    auto touches_q = [&](VertexId x) {
      return std::any_of(gadget.q.begin(), gadget.q.end(),
                         [&](VertexId q) { return tree.has_edge(x, q); });
    };
    for (std::size_t i = 0; i < 3; ++i) {
      const VertexId x = gadget.variables[i];
      const VertexId side = gadget.literal_sides[i];
      const VertexId x_anchor = tree.has_edge(x, f.u) ? f.u : f.v;
      const VertexId side_anchor = gadget.positive[i] ? f.u : f.v;
      if (touches_q(x) && touches_q(side) && x_anchor == side_anchor) {
        a.witness[gadget.clause] = g.label(x);
        break;
      }
    }
    if (!a.witness.count(gadget.clause)) {
      throw PreconditionFailed("clause " + std::to_string(gadget.clause + 1) +
                               " has no covering variable in the tree");
    }
  }
  for (std::size_t j : f.filtered) {
    for (const Literal& l : f.instance.clauses()[j]) {
      if (a.values.at(l.variable) == l.positive) {
        a.witness[j] = l.variable;
        break;
      }
    }
  }
  return a;
}

SpanningTree LiftTree(const ReductionGraph& f, const TailGraph& h,
                      const SpanningTree& tree) {
  if (!(tree.host() == f.graph)) {
    throw InvalidInput("tree is not a spanning tree of f(I)");
  }
  if (!tree.has_edge(f.u, f.v)) throw InvalidInput("edge uv is not in the tree");
  RequireUvTreeCenter(f, tree);
  std::vector<Edge> edges;
  auto lift = [&](VertexId x) { return h.graph.id(f.graph.label(x)); };
  for (const Edge& e : tree.edges()) {
    if (e == Edge::Of(f.u, f.v)) continue;
    edges.push_back(Edge::Of(lift(e.u), lift(e.v)));
  }
  for (const auto* seq : {&h.tail.path, &h.tail.p1, &h.tail.p2}) {
    for (std::size_t i = 1; i < seq->size(); ++i) {
      edges.push_back(Edge::Of((*seq)[i - 1], (*seq)[i]));
    }
  }
  return SpanningTree::FromEdges(h.graph, edges, h.tail.center.front());
}

SpanningTree ProjectTree(const ReductionGraph& f, const TailGraph& h,
                         const SpanningTree& tree) {
  if (!(tree.host() == h.graph)) {
    throw PreconditionFailed("tree is not a spanning tree of h(f(I), t)");
  }
  const auto& path = h.tail.path;
  for (std::size_t i = 1; i < path.size(); ++i) {
    if (!tree.has_edge(path[i - 1], path[i])) {
      throw PreconditionFailed(
          "tail path is not a subpath of the tree; normalize it first");
    }
  }
  const int t = h.tail.t;
  if (!IsTreeSpanner(h.graph, tree, t) || TreeDiameter(tree) > t + 1) {
    throw PreconditionFailed("tree is not a tree " + std::to_string(t) +
                             "-spanner of diameter <= " +
                             std::to_string(t + 1));
  }
  std::vector<Edge> edges{Edge::Of(f.u, f.v)};
  for (const Edge& e : tree.edges()) {
    auto a = f.graph.find(h.graph.label(e.u));
    auto b = f.graph.find(h.graph.label(e.v));
    if (a && b) edges.push_back(Edge::Of(*a, *b));
  }
  return SpanningTree::FromEdges(f.graph, edges, f.u);
}

Counterexample CounterexampleOdd(int t) {
  if (t < 3 || t % 2 == 0) {
    throw InvalidInput("odd counterexample family needs odd t >= 3");
  }
  auto x = [](int i) { return Indexed("x", i); };
  auto y = [](int i) { return Indexed("y", i); };
  auto w = [&](int i) { return i == t - 1 ? x(1) : Indexed("w", i); };
  auto z = [&](int i) { return i == t - 1 ? y(1) : Indexed("z", i); };

  std::vector<LabelEdge> edges;
  // C1 = v, u, x1, ..., xt and C2 = u, v, y1, ..., yt.
  edges.emplace_back("u", "v");
  edges.emplace_back("u", x(1));
  edges.emplace_back("v", y(1));
  for (int i = 1; i < t; ++i) {
    edges.emplace_back(x(i), x(i + 1));
    edges.emplace_back(y(i), y(i + 1));
  }
  edges.emplace_back(x(t), "v");
  edges.emplace_back(y(t), "u");
  edges.emplace_back(x(1), x(t));
  edges.emplace_back(y(1), y(t));
  edges.emplace_back("u", w(1));
  edges.emplace_back("v", z(1));
  for (int i = 1; i < t - 1; ++i) {
    edges.emplace_back(w(i), w(i + 1));
    edges.emplace_back(z(i), z(i + 1));
  }

  const int up = (t + 1) / 2;
  const int down = t / 2;
  const std::set<LabelEdge> removed{
      Sorted("v", x(t)),        Sorted("u", y(t)),
      Sorted(x(up), x(up + 1)), Sorted(y(up), y(up + 1)),
      Sorted(w(down), w(up)),   Sorted(z(down), z(up)),
  };
  return Assemble(t, edges, removed, {"u", "v"}, x(t));
}

Counterexample CounterexampleEven(int t) {
  if (t < 2 || t % 2 == 1) {
    throw InvalidInput("even counterexample family needs even t >= 2");
  }
  auto x = [](int i) { return Indexed("x", i); };
  auto y = [](int i) { return Indexed("y", i); };
  auto w = [&](int i) {
    if (i == 1) return x(1);
    if (i == t) return y(1);
    return Indexed("w", i);
  };

  std::vector<LabelEdge> edges;
  edges.emplace_back("u", x(1));
  edges.emplace_back("u", y(1));
  for (int i = 1; i <= t; ++i) {
    edges.emplace_back(x(i), x(i + 1));
    edges.emplace_back(y(i), y(i + 1));
  }
  edges.emplace_back(x(t + 1), "u");
  edges.emplace_back(y(t + 1), "u");
  edges.emplace_back(x(1), x(t + 1));
  edges.emplace_back(y(1), y(t + 1));
  for (int i = 1; i < t; ++i) edges.emplace_back(w(i), w(i + 1));

  const int half = t / 2;
  const std::set<LabelEdge> removed{
      Sorted("u", x(t + 1)),
      Sorted("u", y(t + 1)),
      Sorted(x(half + 1), x(half + 2)),
      Sorted(y(half + 1), y(half + 2)),
      Sorted(w(half), w(half + 1)),
  };
  return Assemble(t, edges, removed, {"u"}, x(t + 1));
}

Counterexample MakeCounterexample(int t) {
  return t % 2 == 0 ? CounterexampleEven(t) : CounterexampleOdd(t);
}

}  // namespace tspan
