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

#ifndef TSPAN_ERRORS_H_
#define TSPAN_ERRORS_H_

#include <stdexcept>
#include <string>

namespace tspan {

// Malformed input: unknown labels, bad files, illegal parameters.
class InvalidInput : public std::invalid_argument {
 public:
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

// A candidate edge set that is not a spanning tree of its host graph.
class NotSpanningTree : public InvalidInput {
 public:
  explicit NotSpanningTree(const std::string& what) : InvalidInput(what) {}
};

// The input is well formed but violates the hypothesis an operation relies on
// (e.g. normalizing toward a center that is not a center of the tree).
class PreconditionFailed : public std::runtime_error {
 public:
  explicit PreconditionFailed(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace tspan

#endif  // TSPAN_ERRORS_H_
