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

#include "support/support.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace tspan::test {
namespace {

std::string PaddedLabel(int i) {
  return (i < 10 ? "v0" : "v") + std::to_string(i);
}

std::uint64_t Permute(std::uint64_t mask, int n, const std::array<int, 8>& p) {
  std::uint64_t out = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (mask >> EdgeBit(i, j) & 1) {
        out |= std::uint64_t{1} << EdgeBit(p[i], p[j]);
      }
    }
  }
  return out;
}

std::uint64_t Canonical(std::uint64_t mask, int n) {
  std::array<int, 8> p{};
  std::iota(p.begin(), p.begin() + n, 0);
  std::uint64_t best = mask;
  do {
    best = std::min(best, Permute(mask, n, p));
  } while (std::next_permutation(p.begin(), p.begin() + n));
  return best;
}

bool MaskConnected(std::uint64_t mask, int n) {
  unsigned seen = 1, frontier = 1;
  while (frontier) {
    unsigned next = 0;
    for (int x = 0; x < n; ++x) {
      if (!(frontier >> x & 1)) continue;
      for (int y = 0; y < n; ++y) {
        if (x != y && (mask >> EdgeBit(std::min(x, y), std::max(x, y)) & 1)) {
          next |= 1u << y;
        }
      }
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == (1u << n) - 1;
}

}  // namespace

int EdgeBit(int i, int j) {
  if (i > j) std::swap(i, j);
  return j * (j - 1) / 2 + i;
}

Graph GraphFromMask(int n, std::uint64_t mask) {
  GraphBuilder b;
  for (int i = 0; i < n; ++i) b.AddVertex("v" + std::to_string(i));
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (mask >> EdgeBit(i, j) & 1) {
        b.AddEdge("v" + std::to_string(i), "v" + std::to_string(j));
      }
    }
  }
  return b.Build();
}

const std::vector<std::uint64_t>& ConnectedGraphsUpToIso(int n) {
  if (n < 1 || n > 7) throw std::out_of_range("n must be in 1..7");
  static std::map<int, std::vector<std::uint64_t>> cache;
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  // All graphs up to isomorphism, grown one vertex at a time.
  std::set<std::uint64_t> level = {0};
  for (int k = 1; k < n; ++k) {
    std::set<std::uint64_t> next;
    for (std::uint64_t g : level) {
      for (std::uint64_t s = 0; s < (std::uint64_t{1} << k); ++s) {
        std::uint64_t mask = g;
        for (int i = 0; i < k; ++i) {
          if (s >> i & 1) mask |= std::uint64_t{1} << EdgeBit(i, k);
        }
        next.insert(Canonical(mask, k + 1));
      }
    }
    level = std::move(next);
  }
  std::vector<std::uint64_t> out;
  for (std::uint64_t g : level) {
    if (MaskConnected(g, n)) out.push_back(g);
  }
  return cache[n] = std::move(out);
}

Graph RandomConnectedGraph(int n, double p, Rng& rng) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::set<std::pair<int, int>> edges;
  for (int i = 1; i < n; ++i) {
    int j = std::uniform_int_distribution<int>(0, i - 1)(rng);
    edges.insert({std::min(perm[i], perm[j]), std::max(perm[i], perm[j])});
  }
  std::bernoulli_distribution coin(p);
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (coin(rng)) edges.insert({i, j});
    }
  }
  GraphBuilder b;
  for (int i = 0; i < n; ++i) b.AddVertex(PaddedLabel(i));
  for (auto [i, j] : edges) b.AddEdge(PaddedLabel(i), PaddedLabel(j));
  return b.Build();
}

SpanningTree RandomSpanningTree(const Graph& g, Rng& rng) {
  auto edges = g.edges();
  std::shuffle(edges.begin(), edges.end(), rng);
  std::vector<int> parent(g.num_vertices());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<Edge> chosen;
  for (const Edge& e : edges) {
    int a = find(e.u), b = find(e.v);
    if (a == b) continue;
    parent[a] = b;
    chosen.push_back(e);
  }
  return SpanningTree::FromEdges(g, chosen, 0);
}

std::vector<std::pair<int, int>> RandomTreeWithDiameter(int n, int d,
                                                        Rng& rng) {
  if (n < d + 1 || (d < 2 && n != d + 1)) {
    throw std::invalid_argument("no tree with that diameter");
  }
  std::vector<std::vector<int>> adj(n);
  std::vector<std::pair<int, int>> edges;
  auto link = [&](int a, int b) {
    adj[a].push_back(b);
    adj[b].push_back(a);
    edges.emplace_back(a, b);
  };
  for (int i = 0; i < d; ++i) link(i, i + 1);
  auto ecc = [&](int s, int size) {
    std::vector<int> dist(size, -1);
    std::vector<int> queue = {s};
    dist[s] = 0;
    int best = 0;
    for (std::size_t h = 0; h < queue.size(); ++h) {
      int x = queue[h];
      best = std::max(best, dist[x]);
      for (int y : adj[x]) {
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          queue.push_back(y);
        }
      }
    }
    return best;
  };
  for (int x = d + 1; x < n; ++x) {
    std::vector<int> ok;
    for (int y = 0; y < x; ++y) {
      if (ecc(y, x) <= d - 1) ok.push_back(y);
    }
    link(ok[std::uniform_int_distribution<std::size_t>(0, ok.size() - 1)(rng)],
         x);
  }
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  for (auto& [a, b] : edges) {
    a = perm[a];
    b = perm[b];
  }
  return edges;
}

CnfInstance RandomCnf(int variables, int clauses, double taut_p, Rng& rng) {
  std::uniform_int_distribution<int> var(1, variables);
  std::bernoulli_distribution sign(0.5), taut(taut_p);
  std::vector<Clause> out;
  for (int c = 0; c < clauses; ++c) {
    Clause clause;
    if (taut(rng) && variables >= 2) {
      int a = var(rng), b = var(rng);
      while (b == a) b = var(rng);
      bool s = sign(rng);
      clause = {Literal{"x" + std::to_string(a), s},
                Literal{"x" + std::to_string(a), !s},
                Literal{"x" + std::to_string(b), sign(rng)}};
      std::shuffle(clause.begin(), clause.end(), rng);
    } else {
      if (variables < 3) throw std::invalid_argument("need 3 variables");
      std::vector<int> vs(variables);
      std::iota(vs.begin(), vs.end(), 1);
      std::shuffle(vs.begin(), vs.end(), rng);
      for (int i = 0; i < 3; ++i) {
        clause[i] = {"x" + std::to_string(vs[i]), sign(rng)};
      }
    }
    out.push_back(std::move(clause));
  }
  return CnfInstance(std::move(out));
}

namespace {

std::vector<std::vector<int>> FloydWarshall(
    std::size_t n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<int>> d(n, std::vector<int>(n, kInf));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
  for (auto [a, b] : edges) d[a][b] = d[b][a] = 1;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
      }
    }
  }
  return d;
}

std::vector<std::pair<int, int>> Pairs(const std::vector<Edge>& edges) {
  std::vector<std::pair<int, int>> out;
  for (const Edge& e : edges) out.emplace_back(e.u, e.v);
  return out;
}

}  // namespace

std::vector<std::vector<int>> RefDistances(const Graph& g) {
  return FloydWarshall(g.num_vertices(), Pairs(g.edges()));
}

std::vector<std::vector<int>> RefTreeDistances(const SpanningTree& tree) {
  return FloydWarshall(tree.num_vertices(), Pairs(tree.edges()));
}

bool RefIsTreeSpanner(const Graph& g, const SpanningTree& tree, int t) {
  const auto dg = RefDistances(g);
  const auto dt = RefTreeDistances(tree);
  for (std::size_t i = 0; i < dg.size(); ++i) {
    for (std::size_t j = 0; j < dg.size(); ++j) {
      if (dt[i][j] > static_cast<long>(t) * dg[i][j]) return false;
    }
  }
  return true;
}

int RefTreeDiameter(const SpanningTree& tree) {
  int best = 0;
  for (const auto& row : RefTreeDistances(tree)) {
    best = std::max(best, *std::max_element(row.begin(), row.end()));
  }
  return best;
}

std::uint64_t KirchhoffCount(const Graph& g) {
  const std::size_t n = g.num_vertices();
  if (n <= 1) return 1;
  const std::size_t m = n - 1;
  std::vector<std::vector<long double>> a(m, std::vector<long double>(m, 0));
  for (const Edge& e : g.edges()) {
    for (VertexId x : {e.u, e.v}) {
      if (x > 0) a[x - 1][x - 1] += 1;
    }
    if (e.u > 0 && e.v > 0) {
      a[e.u - 1][e.v - 1] -= 1;
      a[e.v - 1][e.u - 1] -= 1;
    }
  }
  long double det = 1;
  for (std::size_t c = 0; c < m; ++c) {
    std::size_t pivot = c;
    for (std::size_t r = c + 1; r < m; ++r) {
      if (std::fabs(a[r][c]) > std::fabs(a[pivot][c])) pivot = r;
    }
    if (std::fabs(a[pivot][c]) < 1e-12L) return 0;
    if (pivot != c) {
      std::swap(a[pivot], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < m; ++r) {
      const long double f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < m; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return static_cast<std::uint64_t>(std::llround(det));
}

}  // namespace tspan::test
