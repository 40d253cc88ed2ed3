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

// 3-SAT instances, truth assignments and DIMACS I/O.

#ifndef TSPAN_CNF_H_
#define TSPAN_CNF_H_

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace tspan {

struct Literal {
  std::string variable;
  bool positive = true;
  friend bool operator==(const Literal&, const Literal&) = default;
};

using Clause = std::array<Literal, 3>;

// A list of clauses with exactly three distinct literals each. A clause that
// holds a variable together with its negation is legal (a tautology).
class CnfInstance {
 public:
  CnfInstance() = default;
  // Throws InvalidInput on a repeated literal or a malformed variable name.
  explicit CnfInstance(std::vector<Clause> clauses);

  const std::vector<Clause>& clauses() const { return clauses_; }
  // Every variable mentioned, sorted.
  const std::vector<std::string>& variables() const { return variables_; }
  // True when the clause mentions some variable in both polarities.
  bool IsTautology(std::size_t clause) const;

 private:
  std::vector<Clause> clauses_;
  std::vector<std::string> variables_;
};

struct TruthAssignment {
  std::map<std::string, bool> values;
  // clause index -> a variable whose literal in that clause is true.
  std::map<std::size_t, std::string> witness;

  bool Satisfies(const CnfInstance& instance) const;
  bool Satisfies(const Clause& clause) const;
};

// "p cnf <vars> <clauses>" then 0-terminated clauses of exactly three
// literals. Variable k becomes "x<k>". Throws InvalidInput.
CnfInstance ParseDimacs(std::string_view text);
std::string EmitDimacs(const CnfInstance& instance);

}  // namespace tspan

#endif  // TSPAN_CNF_H_
