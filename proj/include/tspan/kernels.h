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

// Data-parallel inner loops. Every kernel has a serial reference path
// selected by Execution::kSerial; both paths return identical results, which
// the kernel tests check and the benchmarks compare.

#ifndef TSPAN_KERNELS_H_
#define TSPAN_KERNELS_H_

#include <omp.h>

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "tspan/graph.h"

namespace tspan {

enum class Execution { kSerial, kParallel };

// Row-major n x n hop distances; kUnreachable across components.
std::vector<int> AllPairsDistances(const Graph& g, Execution exec);

// Number of host edges xy whose tree distance exceeds `stretch`.
std::size_t CountStretchViolations(const Graph& g, const SpanningTree& tree,
                                   int stretch, Execution exec);

// Largest tree distance over host edges (0 for an edgeless graph).
int MaxEdgeStretch(const Graph& g, const SpanningTree& tree, Execution exec);

// Index of the first item satisfying pred. The parallel path evaluates items
// out of order but always reports the least matching index.
template <typename T, typename Pred>
std::optional<std::size_t> FirstMatch(std::span<const T> items,
                                      const Pred& pred, Execution exec) {
  const std::size_t n = items.size();
  if (exec == Execution::kSerial) {
    for (std::size_t i = 0; i < n; ++i) {
      if (pred(items[i])) return i;
    }
    return std::nullopt;
  }
  std::size_t best = n;
#pragma omp parallel for schedule(dynamic, 8) reduction(min : best)
  for (std::size_t i = 0; i < n; ++i) {
    if (i < best && pred(items[i])) best = i;
  }
  if (best == n) return std::nullopt;
  return best;
}

}  // namespace tspan

#endif  // TSPAN_KERNELS_H_
