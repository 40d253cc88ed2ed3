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

// Explicit graph constructions:
//
//  * counterexample families: graphs with a tree t-spanner centered at a
//    (t+2)-center but no shortest-paths tree t-spanner;
//  * the 3-SAT reduction graph f(I), which has a tree 4-spanner of diameter
//    at most 5 iff I is satisfiable;
//  * the tail extension h(f(I), t) that carries the same equivalence to
//    stretch t >= 5 and diameter t+1;
//  * the conversions between satisfying assignments and spanner trees.
//
// Vertex names: "u", "v", "hu", "hu'", "hv", "hv'"; variables keep their
// names; clause j (1-based, counted over all clauses of the instance) owns
// "<var>@c<j>" and "q1@c<j>" .. "q8@c<j>"; tail vertices are "r<i>@tail",
// "p1_<i>@tail" and "p2_<i>@tail".

#ifndef TSPAN_GADGETS_H_
#define TSPAN_GADGETS_H_

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "tspan/cnf.h"
#include "tspan/graph.h"

namespace tspan {

using MatrixM = std::array<std::array<int, 8>, 6>;

// Adjacency between the clause vector [x1, x1^c, x2, x2^c, x3, x3^c] and
// q1..q8. Rows 2i-1 and 2i are complementary; any set of rows that covers
// every column contains such a pair.
const MatrixM& ClauseMatrix();

// Vertices of one retained clause.
struct ClauseGadget {
  std::size_t clause = 0;                   // index into instance.clauses()
  std::array<VertexId, 3> variables{};      // x1, x2, x3 in clause order
  std::array<VertexId, 3> literal_sides{};  // x1^c, x2^c, x3^c
  std::array<bool, 3> positive{};
  std::array<VertexId, 8> q{};

  // The clause vector g^c.
  std::array<VertexId, 6> order() const {
    return {variables[0], literal_sides[0], variables[1],
            literal_sides[1], variables[2], literal_sides[2]};
  }
};

struct ReductionGraph {
  Graph graph;
  CnfInstance instance;
  VertexId u = kNoVertex;
  VertexId v = kNoVertex;
  VertexId hu = kNoVertex;
  VertexId hu_prime = kNoVertex;
  VertexId hv = kNoVertex;
  VertexId hv_prime = kNoVertex;
  std::vector<ClauseGadget> gadgets;  // retained clauses in order
  std::vector<std::size_t> filtered;  // tautological clauses, skipped

  Center center() const { return Center::Pair(u, v); }
};

// The tail R(t) attached to u and v.
struct TailGadget {
  int t = 0;
  std::vector<VertexId> path;  // u = r1, ..., r_{t-2} = v
  std::vector<VertexId> p1;    // starts at its attachment vertex on path
  std::vector<VertexId> p2;
  Center center = Center::Single(0);  // K', the middle of path
};

struct TailGraph {
  Graph graph;
  TailGadget tail;
};

struct Counterexample {
  int t = 0;
  Graph graph;
  SpanningTree tree;   // designated tree t-spanner
  Center center;       // its (t+2)-center
  VertexId violator;   // x_t (odd t) or x_{t+1} (even t)
};

std::string ClauseVertexName(const std::string& variable, std::size_t clause);
std::string QVertexName(int k, std::size_t clause);

ReductionGraph BuildF(const CnfInstance& instance);

// Throws InvalidInput when t < 5.
TailGraph BuildH(const ReductionGraph& f, int t);

// The tree built from a satisfying assignment: every variable hangs from u
// (true) or v (false), the H path is kept, every x_j^c keeps its single edge
// to {u, v}, and for the witness variable x(c) of each clause all edges from
// {x(c), x(c)^c} to the clause's q vertices are taken. Missing witnesses are
// filled with the first true literal. Throws InvalidInput if the assignment
// falsifies a clause or a given witness is not a true literal.
SpanningTree TreeFromAssignment(const ReductionGraph& f,
                                const TruthAssignment& a);

// Reads A(x) = [xu in tree] off a shortest-paths-to-{u,v} tree 4-spanner of
// diameter <= 5 and records, per clause, the variable whose two vertices
// cover the q vertices. Throws PreconditionFailed when the tree is not of
// that form.
TruthAssignment AssignmentFromTree(const ReductionGraph& f,
                                   const SpanningTree& tree);

// (T - uv) + R(t). Throws InvalidInput if uv is not a tree edge and
// PreconditionFailed if T is not a tree 4-spanner with 5-center {u, v}.
SpanningTree LiftTree(const ReductionGraph& f, const TailGraph& h,
                      const SpanningTree& tree);

// T'[f] + uv. Throws PreconditionFailed unless the tail path is inside the
// tree and the tree is a tree t-spanner of h of diameter <= t+1.
SpanningTree ProjectTree(const ReductionGraph& f, const TailGraph& h,
                         const SpanningTree& tree);

// Odd t >= 3: two (t+2)-cycles sharing the edge uv, chords x1xt and y1yt,
// and paths u..x1, v..y1 of length t-1.
Counterexample CounterexampleOdd(int t);
// Even t >= 2: two (t+2)-cycles sharing u, chords x1x_{t+1} and
// y1y_{t+1}, and a path x1..y1 of length t-1.
Counterexample CounterexampleEven(int t);
// Dispatches on the parity of t.
Counterexample MakeCounterexample(int t);

}  // namespace tspan

#endif  // TSPAN_GADGETS_H_
