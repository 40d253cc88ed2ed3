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

// Test-only graph generators and reference implementations. The reference
// code here shares nothing with the library beyond the Graph and
// SpanningTree containers.

#ifndef TSPAN_TESTS_SUPPORT_SUPPORT_H_
#define TSPAN_TESTS_SUPPORT_SUPPORT_H_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "tspan/cnf.h"
#include "tspan/graph.h"

namespace tspan::test {

using Rng = std::mt19937_64;

// Bit index of edge {i, j} in a graph mask; independent of the vertex count.
int EdgeBit(int i, int j);

// Vertices "v0" .. "v<n-1>" (n <= 10), edges from the mask.
Graph GraphFromMask(int n, std::uint64_t mask);

// One mask per isomorphism class of connected graphs on n <= 7 vertices.
const std::vector<std::uint64_t>& ConnectedGraphsUpToIso(int n);

// Random connected graph: a random tree plus every other pair with
// probability p. Labels are shuffled.
Graph RandomConnectedGraph(int n, double p, Rng& rng);

// Uniformly shuffled Kruskal tree.
SpanningTree RandomSpanningTree(const Graph& g, Rng& rng);

// Edge list of a random tree on n vertices with diameter exactly d, over
// vertices 0..n-1. Requires n >= d+1 and (d >= 2 or n == d+1).
std::vector<std::pair<int, int>> RandomTreeWithDiameter(int n, int d,
                                                        Rng& rng);

// Random 3-CNF; each clause is tautological with probability taut_p.
CnfInstance RandomCnf(int variables, int clauses, double taut_p, Rng& rng);

// Floyd-Warshall distances; unreachable pairs hold kInf.
inline constexpr int kInf = 1 << 28;
std::vector<std::vector<int>> RefDistances(const Graph& g);
std::vector<std::vector<int>> RefTreeDistances(const SpanningTree& tree);

// Checks d_T(x, y) <= t * d_G(x, y) over all pairs.
bool RefIsTreeSpanner(const Graph& g, const SpanningTree& tree, int t);
int RefTreeDiameter(const SpanningTree& tree);

// Matrix-tree theorem.
std::uint64_t KirchhoffCount(const Graph& g);

}  // namespace tspan::test

#endif  // TSPAN_TESTS_SUPPORT_SUPPORT_H_
