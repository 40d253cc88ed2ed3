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

#include "tspan/oracle.h"

#include <algorithm>
#include <bit>
#include <numeric>

#include "tspan/errors.h"
#include "tspan/spanner.h"

namespace tspan {
namespace {

using Clock = std::chrono::steady_clock;

void RequireConnected(const Graph& g) {
  if (g.empty()) throw InvalidInput("graph is empty");
  if (!IsConnected(g)) throw InvalidInput("graph is disconnected");
}

class Deadline {
 public:
  explicit Deadline(std::chrono::milliseconds timeout)
      : end_(Clock::now() + timeout) {}
  // Reads the clock only every 1024 calls.
  bool Expired() {
    if ((++calls_ & 1023) != 0) return false;
    return Clock::now() > end_;
  }

 private:
  Clock::time_point end_;
  std::uint64_t calls_ = 0;
};

// Union-find with undo, no path compression.
class RollbackDsu {
 public:
  explicit RollbackDsu(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  VertexId Find(VertexId x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }
  bool Unite(VertexId a, VertexId b) {
    a = Find(a);
    b = Find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    history_.push_back(b);
    return true;
  }
  void Undo() {
    VertexId b = history_.back();
    history_.pop_back();
    size_[parent_[b]] -= size_[b];
    parent_[b] = b;
  }

 private:
  std::vector<VertexId> parent_;
  std::vector<std::size_t> size_;
  std::vector<VertexId> history_;
};

class TreeEnumerator {
 public:
  enum class Step { kContinue, kStop, kExhausted };

  TreeEnumerator(const Graph& g, const SearchBudget& budget,
                 const std::function<bool(const SpanningTree&)>& visit,
                 SearchStats& stats)
      : g_(g),
        edges_(g.edges()),
        budget_(budget),
        visit_(visit),
        stats_(stats),
        deadline_(budget.timeout),
        dsu_(g.num_vertices()) {}

  Step Run() { return Recurse(0); }

 private:
  Step Recurse(std::size_t i) {
    if (++stats_.nodes > budget_.max_nodes || deadline_.Expired()) {
      return Step::kExhausted;
    }
    if (chosen_.size() + 1 == g_.num_vertices()) {
      if (stats_.trees + 1 > budget_.max_trees) return Step::kExhausted;
      ++stats_.trees;
      auto tree = SpanningTree::FromEdges(g_, chosen_, 0);
      return visit_(tree) ? Step::kContinue : Step::kStop;
    }
    if (i == edges_.size()) return Step::kContinue;
    const Edge e = edges_[i];
    if (!dsu_.Unite(e.u, e.v)) return Recurse(i + 1);
    chosen_.push_back(e);
    Step s = Recurse(i + 1);
    chosen_.pop_back();
    dsu_.Undo();
    if (s != Step::kContinue) return s;
    if (!ConnectedWithout(i)) return Step::kContinue;
    return Recurse(i + 1);
  }

  // Whether the chosen edges plus edges after i still span the graph.
  bool ConnectedWithout(std::size_t i) const {
    RollbackDsu d(g_.num_vertices());
    std::size_t parts = g_.num_vertices();
    for (const Edge& e : chosen_) parts -= d.Unite(e.u, e.v);
    for (std::size_t j = i + 1; j < edges_.size() && parts > 1; ++j) {
      parts -= d.Unite(edges_[j].u, edges_[j].v);
    }
    return parts == 1;
  }

  const Graph& g_;
  const std::vector<Edge> edges_;
  const SearchBudget& budget_;
  const std::function<bool(const SpanningTree&)>& visit_;
  SearchStats& stats_;
  Deadline deadline_;
  RollbackDsu dsu_;
  std::vector<Edge> chosen_;
};

using Bits = std::vector<std::uint64_t>;

void SetBit(Bits& b, std::size_t i) { b[i / 64] |= std::uint64_t{1} << (i % 64); }

std::ptrdiff_t HighestBit(const Bits& b) {
  for (std::size_t w = b.size(); w-- > 0;) {
    if (b[w]) return static_cast<std::ptrdiff_t>(w * 64 + 63 - std::countl_zero(b[w]));
  }
  return -1;
}

}  // namespace

std::string_view ToString(SearchStatus status) {
  switch (status) {
    case SearchStatus::kFound:
      return "found";
    case SearchStatus::kAbsent:
      return "not-found";
    case SearchStatus::kBudgetExhausted:
      return "budget-exhausted";
  }
  return "unknown";
}

EnumerationStatus EnumerateSpanningTrees(
    const Graph& g, const SearchBudget& budget,
    const std::function<bool(const SpanningTree&)>& visit,
    SearchStats* stats) {
  RequireConnected(g);
  SearchStats local;
  TreeEnumerator e(g, budget, visit, stats ? *stats : local);
  switch (e.Run()) {
    case TreeEnumerator::Step::kContinue:
      return EnumerationStatus::kComplete;
    case TreeEnumerator::Step::kStop:
      return EnumerationStatus::kStopped;
    case TreeEnumerator::Step::kExhausted:
      break;
  }
  return EnumerationStatus::kBudgetExhausted;
}

SearchResult BruteForceSpanner(const Graph& g, int stretch,
                               std::optional<int> max_diam,
                               const SearchBudget& budget, Execution exec) {
  RequireConnected(g);
  auto accept = [&](const SpanningTree& t) {
    if (max_diam && TreeDiameter(t) > *max_diam) return false;
    return CountStretchViolations(g, t, stretch, Execution::kSerial) == 0;
  };
  SearchResult result;
  constexpr std::size_t kBatch = 256;
  std::vector<SpanningTree> batch;
  auto flush = [&] {
    auto hit = FirstMatch(std::span<const SpanningTree>(batch), accept, exec);
    if (hit) result.tree = batch[*hit];
    batch.clear();
    return hit.has_value();
  };
  auto visit = [&](const SpanningTree& t) {
    if (exec == Execution::kSerial) {
      if (!accept(t)) return true;
      result.tree = t;
      return false;
    }
    batch.push_back(t);
    return batch.size() < kBatch || !flush();
  };
  EnumerationStatus status =
      EnumerateSpanningTrees(g, budget, visit, &result.stats);
  if (!result.tree && !batch.empty()) flush();
  if (result.tree) {
    result.status = SearchStatus::kFound;
  } else if (status == EnumerationStatus::kBudgetExhausted) {
    result.status = SearchStatus::kBudgetExhausted;
  } else {
    result.status = SearchStatus::kAbsent;
  }
  return result;
}

SearchResult SpsTreeSearch(const Graph& g, const Center& k, int stretch,
                           const SearchBudget& budget) {
  if (g.empty()) throw InvalidInput("graph is empty");
  for (VertexId c : k.vertices()) {
    if (!g.contains(c)) throw InvalidInput("center vertex not in graph");
  }
  if (k.is_pair() && !g.adjacent(k.vertices()[0], k.vertices()[1])) {
    throw InvalidInput("center pair is not adjacent");
  }
  RequireConnected(g);

  SearchResult result;
  result.center = k;
  const auto dist = DistancesFrom(g, k);
  const int slack = stretch + 1 - (k.is_pair() ? 1 : 0);
  if (slack < 0) return result;
  if (*std::max_element(dist.begin(), dist.end()) > slack / 2) return result;

  const std::size_t n = g.num_vertices();
  std::vector<VertexId> order;
  for (VertexId x = 0; x < static_cast<VertexId>(n); ++x) {
    if (dist[x] > 0) order.push_back(x);
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](VertexId a, VertexId b) { return dist[a] < dist[b]; });
  const std::size_t levels = order.size();
  std::vector<std::ptrdiff_t> level(n, -1);
  for (std::size_t i = 0; i < levels; ++i) level[order[i]] = static_cast<std::ptrdiff_t>(i);

  std::vector<std::vector<VertexId>> candidates(n);
  for (VertexId x : order) {
    for (VertexId y : g.neighbors(x)) {
      if (dist[y] == dist[x] - 1) candidates[x].push_back(y);
    }
  }

  std::vector<VertexId> parent(n, kNoVertex);
  std::vector<char> placed(n, 0);
  for (VertexId c : k.vertices()) placed[c] = 1;
  if (k.is_pair()) parent[k.vertices()[1]] = k.vertices()[0];

  const std::size_t words = (levels + 63) / 64;
  std::vector<Bits> conflicts(levels, Bits(words, 0));
  std::vector<std::size_t> cursor(levels, 0);
  Deadline deadline(budget.timeout);

  // Climbs from x and y toward k, always moving the endpoint farther from k.
  // Returns false once the path is known to exceed `stretch`; the vertices
  // whose parent choices produced the path so far land in `conflict`.
  auto within = [&](VertexId x, VertexId y, Bits& conflict) {
    std::vector<std::ptrdiff_t> seen;
    int steps = 0;
    const VertexId origin = x;
    while (x != y) {
      if (dist[x] == 0 && dist[y] == 0) {
        ++steps;  // the center edge
        break;
      }
      VertexId& mover = dist[x] >= dist[y] ? x : y;
      if (mover != origin) seen.push_back(level[mover]);
      mover = parent[mover];
      if (++steps > stretch) break;
    }
    if (steps <= stretch) return true;
    for (auto l : seen) SetBit(conflict, static_cast<std::size_t>(l));
    return false;
  };

  std::size_t i = 0;
  while (i < levels) {
    const VertexId x = order[i];
    Bits& conflict = conflicts[i];
    bool ok = false;
    while (!ok && cursor[i] < candidates[x].size()) {
      const VertexId p = candidates[x][cursor[i]++];
      if (++result.stats.nodes > budget.max_nodes || deadline.Expired()) {
        result.status = SearchStatus::kBudgetExhausted;
        return result;
      }
      parent[x] = p;
      placed[x] = 1;
      ok = true;
      for (VertexId y : g.neighbors(x)) {
        if (y == p || !placed[y]) continue;
        if (!within(x, y, conflict)) {
          ok = false;
          break;
        }
      }
      if (!ok) {
        placed[x] = 0;
        parent[x] = kNoVertex;
      }
    }
    if (ok) {
      if (++i < levels) {
        cursor[i] = 0;
        std::fill(conflicts[i].begin(), conflicts[i].end(), 0);
      }
      continue;
    }
    const std::ptrdiff_t back = HighestBit(conflict);
    if (back < 0) return result;  // no earlier choice can help
    const auto h = static_cast<std::size_t>(back);
    Bits& target = conflicts[h];
    for (std::size_t w = 0; w < words; ++w) target[w] |= conflict[w];
    target[h / 64] &= ~(std::uint64_t{1} << (h % 64));
    for (std::size_t l = h; l < i; ++l) {
      placed[order[l]] = 0;
      parent[order[l]] = kNoVertex;
    }
    i = h;
  }
  result.tree = SpanningTree::FromParents(g, std::move(parent));
  result.status = SearchStatus::kFound;
  return result;
}

SearchResult SpsTreeSearchAnyCenter(const Graph& g, int stretch,
                                    const SearchBudget& budget) {
  RequireConnected(g);
  std::vector<Center> centers;
  for (VertexId x = 0; x < static_cast<VertexId>(g.num_vertices()); ++x) {
    centers.push_back(Center::Single(x));
  }
  for (const Edge& e : g.edges()) centers.push_back(Center::Pair(e.u, e.v));
  SearchResult total;
  bool exhausted = false;
  for (const Center& k : centers) {
    SearchResult r = SpsTreeSearch(g, k, stretch, budget);
    total.stats.nodes += r.stats.nodes;
    if (r.status == SearchStatus::kFound) {
      r.stats = total.stats;
      return r;
    }
    exhausted |= r.status == SearchStatus::kBudgetExhausted;
  }
  total.status =
      exhausted ? SearchStatus::kBudgetExhausted : SearchStatus::kAbsent;
  return total;
}

std::optional<TruthAssignment> BruteForceSat(const CnfInstance& instance,
                                             std::size_t max_variables) {
  const auto& vars = instance.variables();
  if (vars.size() > max_variables) {
    throw InvalidInput("brute-force SAT is capped at " +
                       std::to_string(max_variables) + " variables");
  }
  const std::uint64_t total = std::uint64_t{1} << vars.size();
  TruthAssignment a;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    for (std::size_t j = 0; j < vars.size(); ++j) {
      a.values[vars[j]] = (mask >> j) & 1;
    }
    if (!a.Satisfies(instance)) continue;
    for (std::size_t c = 0; c < instance.clauses().size(); ++c) {
      for (const Literal& l : instance.clauses()[c]) {
        if (a.values[l.variable] == l.positive) {
          a.witness[c] = l.variable;
          break;
        }
      }
    }
    return a;
  }
  return std::nullopt;
}

}  // namespace tspan
