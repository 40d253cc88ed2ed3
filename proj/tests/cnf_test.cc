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

#include <gtest/gtest.h>

#include "support/support.h"
#include "tspan/errors.h"
#include "tspan/oracle.h"

namespace tspan {
namespace {

Literal Pos(const char* v) { return {v, true}; }
Literal Neg(const char* v) { return {v, false}; }

TEST(DimacsTest, ParsesClausesAndComments) {
  auto inst = ParseDimacs(
      "c example\n"
      "p cnf 4 2\n"
      "1 -2 3 0\n"
      "-4 2 1\n"
      "0\n");
  ASSERT_EQ(inst.clauses().size(), 2u);
  EXPECT_EQ(inst.clauses()[0][1], Neg("x2"));
  EXPECT_EQ(inst.clauses()[1][0], Neg("x4"));
  EXPECT_EQ(inst.variables(),
            (std::vector<std::string>{"x1", "x2", "x3", "x4"}));
}

TEST(DimacsTest, RejectsMalformedInput) {
  EXPECT_THROW(ParseDimacs("1 2 3 0\n"), InvalidInput);
  EXPECT_THROW(ParseDimacs("p cnf 3 2\n1 2 3 0\n"), InvalidInput);
  EXPECT_THROW(ParseDimacs("p cnf 3 1\n1 2 0\n"), InvalidInput);
  EXPECT_THROW(ParseDimacs("p cnf 3 1\n1 2 4 0\n"), InvalidInput);
  EXPECT_THROW(ParseDimacs("p cnf 3 1\n1 2 a 0\n"), InvalidInput);
  EXPECT_THROW(ParseDimacs("p cnf 3 1\n1 2 3\n"), InvalidInput);
  EXPECT_THROW(ParseDimacs("p cnf 3 1\n1 1 2 0\n"), InvalidInput);
  EXPECT_THROW(ParseDimacs("p dnf 3 1\n1 2 3 0\n"), InvalidInput);
}

TEST(DimacsTest, RoundTrip) {
  test::Rng rng(51);
  for (int round = 0; round < 50; ++round) {
    auto inst = test::RandomCnf(3 + round % 5, 1 + round % 6, 0.2, rng);
    auto again = ParseDimacs(EmitDimacs(inst));
    EXPECT_EQ(again.clauses(), inst.clauses());
  }
}

TEST(CnfInstanceTest, TautologyAndRepeats) {
  CnfInstance inst({{Pos("a"), Neg("a"), Pos("b")},
                    {Pos("a"), Pos("b"), Neg("c")}});
  EXPECT_TRUE(inst.IsTautology(0));
  EXPECT_FALSE(inst.IsTautology(1));
  EXPECT_THROW(CnfInstance({{Pos("a"), Pos("a"), Pos("b")}}), InvalidInput);
  EXPECT_THROW(CnfInstance({{Pos("a b"), Pos("c"), Pos("d")}}), InvalidInput);
  EXPECT_THROW(CnfInstance({{Pos("a@c1"), Pos("c"), Pos("d")}}), InvalidInput);
}

TEST(BruteForceSatTest, SingleClauseIsSatisfiable) {
  CnfInstance inst({{Pos("x"), Pos("y"), Neg("z")}});
  auto a = BruteForceSat(inst);
  ASSERT_TRUE(a.has_value());
  EXPECT_TRUE(a->Satisfies(inst));
  ASSERT_EQ(a->witness.size(), 1u);
}

TEST(BruteForceSatTest, FullCubeIsUnsatisfiable) {
  std::vector<Clause> clauses;
  for (int s = 0; s < 8; ++s) {
    clauses.push_back({Literal{"x", bool(s & 1)}, Literal{"y", bool(s & 2)},
                       Literal{"z", bool(s & 4)}});
  }
  EXPECT_FALSE(BruteForceSat(CnfInstance(clauses)).has_value());
  clauses.pop_back();
  EXPECT_TRUE(BruteForceSat(CnfInstance(clauses)).has_value());
}

TEST(BruteForceSatTest, TautologyHoldsUnderEveryAssignment) {
  const Clause c = {Pos("x"), Neg("x"), Pos("y")};
  for (int mask = 0; mask < 4; ++mask) {
    TruthAssignment a;
    a.values["x"] = mask & 1;
    a.values["y"] = mask & 2;
    EXPECT_TRUE(a.Satisfies(c));
  }
}

TEST(BruteForceSatTest, WitnessesAreTrueLiterals) {
  test::Rng rng(53);
  for (int round = 0; round < 100; ++round) {
    auto inst = test::RandomCnf(4, 1 + round % 8, 0.1, rng);
    auto a = BruteForceSat(inst);
    if (!a) continue;
    ASSERT_EQ(a->witness.size(), inst.clauses().size());
    for (const auto& [c, var] : a->witness) {
      bool found = false;
      for (const Literal& l : inst.clauses()[c]) {
        found |= l.variable == var && a->values.at(var) == l.positive;
      }
      ASSERT_TRUE(found);
    }
  }
}

TEST(BruteForceSatTest, CapsVariables) {
  CnfInstance inst({{Pos("a"), Pos("b"), Pos("c")}});
  EXPECT_THROW(BruteForceSat(inst, 2), InvalidInput);
}

}  // namespace
}  // namespace tspan
