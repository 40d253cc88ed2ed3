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

#include "tspan/cnf.h"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>

#include "tspan/errors.h"

namespace tspan {
namespace {

void CheckVariableName(const std::string& name) {
  if (name.empty()) throw InvalidInput("empty variable name");
  for (char c : name) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == '@' || c == '#') {
      throw InvalidInput("variable name '" + name +
                         "' contains a reserved character");
    }
  }
}

}  // namespace

CnfInstance::CnfInstance(std::vector<Clause> clauses)
    : clauses_(std::move(clauses)) {
  std::set<std::string> vars;
  for (const Clause& c : clauses_) {
    for (std::size_t i = 0; i < 3; ++i) {
      CheckVariableName(c[i].variable);
      for (std::size_t j = 0; j < i; ++j) {
        if (c[i] == c[j]) {
          throw InvalidInput("clause repeats literal " +
                             std::string(c[i].positive ? "" : "-") +
                             c[i].variable);
        }
      }
      vars.insert(c[i].variable);
    }
  }
  variables_.assign(vars.begin(), vars.end());
}

bool CnfInstance::IsTautology(std::size_t clause) const {
  const Clause& c = clauses_.at(clause);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (c[i].variable == c[j].variable) return true;
    }
  }
  return false;
}

bool TruthAssignment::Satisfies(const Clause& clause) const {
  return std::any_of(clause.begin(), clause.end(), [&](const Literal& l) {
    auto it = values.find(l.variable);
    return it != values.end() && it->second == l.positive;
  });
}

bool TruthAssignment::Satisfies(const CnfInstance& instance) const {
  return std::all_of(instance.clauses().begin(), instance.clauses().end(),
                     [&](const Clause& c) { return Satisfies(c); });
}

CnfInstance ParseDimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  long declared_vars = -1;
  long declared_clauses = -1;
  std::vector<Clause> clauses;
  std::vector<long> pending;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first == "c" || first[0] == 'c' || first[0] == '%') continue;
    if (first == "p") {
      std::string kind;
      if (declared_vars >= 0) throw InvalidInput("duplicate problem line");
      if (!(ls >> kind >> declared_vars >> declared_clauses) || kind != "cnf" ||
          declared_vars < 0 || declared_clauses < 0) {
        throw InvalidInput("malformed problem line at line " +
                           std::to_string(line_no));
      }
      continue;
    }
    if (declared_vars < 0) {
      throw InvalidInput("clause before 'p cnf' header at line " +
                         std::to_string(line_no));
    }
    ls.clear();
    ls.seekg(0);
    std::string token;
    while (ls >> token) {
      long lit = 0;
      try {
        std::size_t used = 0;
        lit = std::stol(token, &used);
        if (used != token.size()) throw std::invalid_argument(token);
      } catch (const std::exception&) {
        throw InvalidInput("bad literal '" + token + "' at line " +
                           std::to_string(line_no));
      }
      if (lit != 0) {
        if (std::labs(lit) > declared_vars) {
          throw InvalidInput("literal " + token + " exceeds declared variables");
        }
        pending.push_back(lit);
        continue;
      }
      if (pending.size() != 3) {
        throw InvalidInput("clause with " + std::to_string(pending.size()) +
                           " literals at line " + std::to_string(line_no) +
                           "; exactly 3 required");
      }
      Clause c;
      for (std::size_t i = 0; i < 3; ++i) {
        c[i] = {"x" + std::to_string(std::labs(pending[i])), pending[i] > 0};
      }
      clauses.push_back(std::move(c));
      pending.clear();
    }
  }
  if (declared_vars < 0) throw InvalidInput("missing 'p cnf' header");
  if (!pending.empty()) throw InvalidInput("unterminated final clause");
  if (static_cast<long>(clauses.size()) != declared_clauses) {
    throw InvalidInput("header declares " + std::to_string(declared_clauses) +
                       " clauses, found " + std::to_string(clauses.size()));
  }
  return CnfInstance(std::move(clauses));
}

std::string EmitDimacs(const CnfInstance& instance) {
  // Variables named x<k> keep their number; others are numbered in order.
  std::map<std::string, long> number;
  long next = 0;
  for (const auto& v : instance.variables()) {
    if (v.size() > 1 && v[0] == 'x' && v[1] != '0' &&
        std::all_of(v.begin() + 1, v.end(),
                    [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      const long k = std::stol(v.substr(1));
      if (k <= 0) continue;
      number[v] = k;
      next = std::max(next, k);
    }
  }
  for (const auto& v : instance.variables()) {
    if (!number.count(v)) number[v] = ++next;
  }
  std::ostringstream out;
  out << "p cnf " << next << ' ' << instance.clauses().size() << '\n';
  for (const Clause& c : instance.clauses()) {
    for (const Literal& l : c) {
      out << (l.positive ? "" : "-") << number[l.variable] << ' ';
    }
    out << "0\n";
  }
  return out.str();
}

}  // namespace tspan
