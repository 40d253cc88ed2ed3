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

#include "tspan/graph_io.h"

#include <gtest/gtest.h>

#include "support/support.h"
#include "tspan/errors.h"
#include "tspan/gadgets.h"

namespace tspan {
namespace {

TEST(EdgeListTest, ParsesVerticesEdgesAndComments) {
  Graph g = ParseGraph(
      "# a triangle and a loner\n"
      "a b\n"
      "b c   # trailing comment\n"
      "\n"
      "c a\n"
      "n lonely\n");
  EXPECT_EQ(g.num_vertices(), 4u);
  EXPECT_EQ(g.num_edges(), 3u);
  EXPECT_EQ(g.degree(g.id("lonely")), 0u);
}

TEST(EdgeListTest, RejectsMalformedLines) {
  EXPECT_THROW(ParseGraph("a b c\n"), InvalidInput);
  EXPECT_THROW(ParseGraph("a\n"), InvalidInput);
  EXPECT_THROW(ParseGraph("a a\n"), InvalidInput);
  EXPECT_THROW(ParseGraph("root a\n"), InvalidInput);
  EXPECT_THROW(ParseGraph("a n\n"), InvalidInput);
}

TEST(JsonTest, ParsesAndRejects) {
  Graph g = ParseGraph(R"({"vertices": ["z"], "edges": [["a", "b"]]})");
  EXPECT_EQ(g.num_vertices(), 3u);
  EXPECT_THROW(ParseGraph(R"({"edges": [["a"]]})"), InvalidInput);
  EXPECT_THROW(ParseGraph(R"({"edges": [[1, 2]]})"), InvalidInput);
  EXPECT_THROW(ParseGraph(R"({"edges": [)"), InvalidInput);
  EXPECT_THROW(ParseGraph(R"({"nodes": []})"), InvalidInput);
  EXPECT_THROW(ParseGraph(R"({"root": "a"})"), InvalidInput);
}

TEST(RoundTripTest, GraphsAndTreesSurviveBothFormats) {
  test::Rng rng(81);
  for (int round = 0; round < 50; ++round) {
    Graph g = test::RandomConnectedGraph(1 + round % 12, 0.3, rng);
    SpanningTree t = test::RandomSpanningTree(g, rng).Rerooted(
        static_cast<VertexId>(rng() % g.num_vertices()));
    for (Format f : {Format::kEdgeList, Format::kJson}) {
      const std::string text = EmitGraph(g, f);
      EXPECT_EQ(ParseGraph(text), g);
      EXPECT_EQ(EmitGraph(ParseGraph(text), f), text);
      auto back = ParseTree(EmitTree(t, f), g);
      EXPECT_EQ(back, t);
      EXPECT_EQ(back.root(), t.root());
    }
  }
}

TEST(RoundTripTest, GadgetLabelsSurvive) {
  ReductionGraph f = BuildF(CnfInstance({{Literal{"x1", true},
                                          Literal{"x2", true},
                                          Literal{"x3", false}}}));
  EXPECT_EQ(ParseGraph(EmitGraph(f.graph, Format::kEdgeList)), f.graph);
  EXPECT_EQ(ParseGraph(EmitGraph(f.graph, Format::kJson)), f.graph);
}

TEST(TreeParseTest, Errors) {
  Graph g = ParseGraph("a b\nb c\nc a\n");
  EXPECT_THROW(ParseTree("a b\nb z\n", g), InvalidInput);
  EXPECT_THROW(ParseTree("a b\n", g), NotSpanningTree);
  EXPECT_THROW(ParseTree("a b\nb c\nc a\n", g), NotSpanningTree);
  auto t = ParseTree("root c\na b\nb c\n", g);
  EXPECT_EQ(t.root(), g.id("c"));
}

TEST(DotTest, QuotesLabels) {
  Graph g = ParseGraph(R"({"edges": [["a\"b", "c"]]})");
  const std::string dot = EmitGraph(g, Format::kDot);
  EXPECT_NE(dot.find(R"("a\"b" -- "c";)"), std::string::npos);
  Graph spaced = ParseGraph(R"({"edges": [["a b", "c"]]})");
  EXPECT_NE(EmitGraph(spaced, Format::kDot).find(R"("a b" -- "c";)"),
            std::string::npos);
  EXPECT_THROW(EmitGraph(spaced, Format::kEdgeList), InvalidInput);
}

TEST(ParseCenterTest, SingleAndPair) {
  Graph g = ParseGraph("a b\nb c\n");
  EXPECT_EQ(ParseCenter("b", g), Center::Single(g.id("b")));
  EXPECT_EQ(ParseCenter("b,a", g), Center::Pair(0, 1));
  EXPECT_THROW(ParseCenter("a,c", g), InvalidInput);
  EXPECT_THROW(ParseCenter("a,b,c", g), InvalidInput);
  EXPECT_THROW(ParseCenter("zz", g), InvalidInput);
}

TEST(FormatTest, Names) {
  EXPECT_EQ(ParseFormat("el"), Format::kEdgeList);
  EXPECT_EQ(ParseFormat("json"), Format::kJson);
  EXPECT_EQ(ParseFormat("dot"), Format::kDot);
  EXPECT_THROW(ParseFormat("xml"), InvalidInput);
}

}  // namespace
}  // namespace tspan
