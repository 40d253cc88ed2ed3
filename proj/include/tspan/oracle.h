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

// Exhaustive ground truth for desk-scale instances.
//
// Every search takes a SearchBudget and reports kBudgetExhausted when a cap
// is hit, so "nothing found" is only ever reported after a complete search.

#ifndef TSPAN_ORACLE_H_
#define TSPAN_ORACLE_H_

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>

#include "tspan/cnf.h"
#include "tspan/graph.h"
#include "tspan/kernels.h"

namespace tspan {

struct SearchBudget {
  std::uint64_t max_trees = 1'000'000;
  std::uint64_t max_nodes = 10'000'000;
  std::chrono::milliseconds timeout{60'000};
};

enum class SearchStatus { kFound, kAbsent, kBudgetExhausted };
std::string_view ToString(SearchStatus status);

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t trees = 0;
};

struct SearchResult {
  SearchStatus status = SearchStatus::kAbsent;
  std::optional<SpanningTree> tree;
  std::optional<Center> center;  // set by the center-constrained searches
  SearchStats stats;
};

enum class EnumerationStatus { kComplete, kStopped, kBudgetExhausted };

// Visits every spanning tree exactly once. Edges are considered in sorted
// order and the branch that includes an edge is explored before the branch
// that excludes it; an edge is only excluded while the remaining edges still
// connect the graph, so every leaf is a spanning tree. The visitor returns
// false to stop. Throws InvalidInput for an empty or disconnected graph.
EnumerationStatus EnumerateSpanningTrees(
    const Graph& g, const SearchBudget& budget,
    const std::function<bool(const SpanningTree&)>& visit,
    SearchStats* stats = nullptr);

// First enumerated tree that is a tree stretch-spanner with diameter at most
// max_diam (when given). The parallel path screens enumerated trees in
// batches and returns the same tree as the serial path.
SearchResult BruteForceSpanner(const Graph& g, int stretch,
                               std::optional<int> max_diam,
                               const SearchBudget& budget,
                               Execution exec = Execution::kSerial);

// Backtracking over shortest-paths-to-k spanning trees: vertices are taken
// by increasing distance from k, then label, and each picks a parent among
// its neighbors one step closer to k. A pair center keeps its edge. After
// every parent choice, each edge to an already placed vertex must have tree
// distance <= stretch. Dead ends backjump to the most recent choice that
// took part in a conflict, which skips only subtrees without solutions, so
// the first tree found is the one plain chronological backtracking finds.
//
// Trees found have diameter <= stretch + 1 around k. Absence means no tree
// stretch-spanner of diameter <= stretch + 1 is centered at k.
SearchResult SpsTreeSearch(const Graph& g, const Center& k, int stretch,
                           const SearchBudget& budget);

// SpsTreeSearch over every vertex and then every edge as the center; the
// first success wins. The budget applies to each center separately.
SearchResult SpsTreeSearchAnyCenter(const Graph& g, int stretch,
                                    const SearchBudget& budget);

// Exhaustive assignment search; assignment i sets variable j (sorted order)
// to bit j of i. Witnesses are the first true literal of every clause.
// Throws InvalidInput above max_variables.
std::optional<TruthAssignment> BruteForceSat(const CnfInstance& instance,
                                             std::size_t max_variables = 20);

}  // namespace tspan

#endif  // TSPAN_ORACLE_H_
