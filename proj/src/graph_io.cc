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

#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "tspan/errors.h"

namespace tspan {
namespace {

using nlohmann::json;

struct Parsed {
  std::vector<std::string> vertices;
  std::vector<std::pair<std::string, std::string>> edges;
  std::optional<std::string> root;
};

bool LooksLikeJson(std::string_view text) {
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) return c == '{';
  }
  return false;
}

void CheckEdgeListLabel(const std::string& label) {
  if (label == "n" || label == "root") {
    throw InvalidInput("label '" + label + "' is reserved in edge lists");
  }
  for (char c : label) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == '#') {
      throw InvalidInput("label '" + label +
                         "' cannot be written as an edge list");
    }
  }
}

Parsed ParseEdgeList(std::string_view text, bool allow_root) {
  Parsed p;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    for (std::string tok; ls >> tok;) tokens.push_back(std::move(tok));
    if (tokens.empty()) continue;
    auto bad = [&](const std::string& why) {
      return InvalidInput("line " + std::to_string(line_no) + ": " + why);
    };
    if (tokens.size() != 2) throw bad("expected two tokens");
    if (tokens[0] == "n") {
      if (tokens[1] == "n" || tokens[1] == "root") throw bad("reserved label");
      p.vertices.push_back(tokens[1]);
    } else if (tokens[0] == "root") {
      if (!allow_root) throw bad("'root' is only valid in tree files");
      if (p.root) throw bad("duplicate root");
      p.root = tokens[1];
    } else {
      if (tokens[1] == "n" || tokens[1] == "root") throw bad("reserved label");
      if (tokens[0] == tokens[1]) throw bad("self-loop on " + tokens[0]);
      p.edges.emplace_back(tokens[0], tokens[1]);
    }
  }
  return p;
}

std::string LabelOf(const json& j) {
  if (!j.is_string()) throw InvalidInput("JSON labels must be strings");
  auto s = j.get<std::string>();
  if (s.empty()) throw InvalidInput("empty label");
  return s;
}

Parsed ParseJson(std::string_view text, bool allow_root) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InvalidInput("JSON input must be an object");
  Parsed p;
  for (const auto& [key, value] : doc.items()) {
    if (key == "vertices") {
      if (!value.is_array()) throw InvalidInput("'vertices' must be an array");
      for (const auto& x : value) p.vertices.push_back(LabelOf(x));
    } else if (key == "edges") {
      if (!value.is_array()) throw InvalidInput("'edges' must be an array");
      for (const auto& e : value) {
        if (!e.is_array() || e.size() != 2) {
          throw InvalidInput("each edge must be a two-element array");
        }
        auto a = LabelOf(e[0]);
        auto b = LabelOf(e[1]);
        if (a == b) throw InvalidInput("self-loop on " + a);
        p.edges.emplace_back(std::move(a), std::move(b));
      }
    } else if (key == "root" && allow_root) {
      p.root = LabelOf(value);
    } else {
      throw InvalidInput("unexpected JSON key '" + key + "'");
    }
  }
  return p;
}

Parsed Parse(std::string_view text, bool allow_root) {
  return LooksLikeJson(text) ? ParseJson(text, allow_root)
                             : ParseEdgeList(text, allow_root);
}

std::string Quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + '"';
}

std::string Emit(const Graph& g, std::span<const Edge> edges,
                 std::optional<VertexId> root, Format format) {
  switch (format) {
    case Format::kEdgeList: {
      std::ostringstream out;
      for (const auto& l : g.labels()) CheckEdgeListLabel(l);
      if (root) out << "root " << g.label(*root) << '\n';
      std::vector<bool> covered(g.num_vertices(), false);
      for (const Edge& e : edges) covered[e.u] = covered[e.v] = true;
      for (VertexId x = 0; x < static_cast<VertexId>(g.num_vertices()); ++x) {
        if (!covered[x]) out << "n " << g.label(x) << '\n';
      }
      for (const Edge& e : edges) {
        out << g.label(e.u) << ' ' << g.label(e.v) << '\n';
      }
      return out.str();
    }
    case Format::kJson: {
      json doc;
      doc["vertices"] = json::array();
      for (const auto& l : g.labels()) doc["vertices"].push_back(l);
      doc["edges"] = json::array();
      for (const Edge& e : edges) {
        doc["edges"].push_back({g.label(e.u), g.label(e.v)});
      }
      if (root) doc["root"] = g.label(*root);
      return doc.dump(2) + '\n';
    }
    case Format::kDot: {
      std::ostringstream out;
      out << (root ? "graph tree {\n" : "graph G {\n");
      for (VertexId x = 0; x < static_cast<VertexId>(g.num_vertices()); ++x) {
        out << "  " << Quote(g.label(x));
        if (root && *root == x) out << " [shape=doublecircle]";
        out << ";\n";
      }
      for (const Edge& e : edges) {
        out << "  " << Quote(g.label(e.u)) << " -- " << Quote(g.label(e.v))
            << ";\n";
      }
      out << "}\n";
      return out.str();
    }
  }
  throw InvalidInput("unknown format");
}

}  // namespace

Format ParseFormat(std::string_view name) {
  if (name == "el") return Format::kEdgeList;
  if (name == "json") return Format::kJson;
  if (name == "dot") return Format::kDot;
  throw InvalidInput("unknown format '" + std::string(name) +
                     "'; expected el, json or dot");
}

Graph ParseGraph(std::string_view text) {
  Parsed p = Parse(text, false);
  GraphBuilder b;
  for (auto& x : p.vertices) b.AddVertex(std::move(x));
  for (auto& [a, c] : p.edges) b.AddEdge(std::move(a), std::move(c));
  return b.Build();
}

SpanningTree ParseTree(std::string_view text, const Graph& host) {
  if (host.empty()) throw InvalidInput("host graph is empty");
  Parsed p = Parse(text, true);
  for (const auto& x : p.vertices) host.id(x);
  std::vector<Edge> edges;
  for (const auto& [a, b] : p.edges) {
    edges.push_back(Edge::Of(host.id(a), host.id(b)));
  }
  const VertexId root = p.root ? host.id(*p.root) : 0;
  return SpanningTree::FromEdges(host, edges, root);
}

Center ParseCenter(std::string_view list, const Graph& g) {
  std::vector<VertexId> ids;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = list.find(',', start);
    ids.push_back(g.id(list.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (ids.size() == 1) return Center::Single(ids[0]);
  if (ids.size() != 2) throw InvalidInput("a center has one or two vertices");
  if (!g.adjacent(ids[0], ids[1])) {
    throw InvalidInput("center pair " + std::string(list) + " is not an edge");
  }
  return Center::Pair(ids[0], ids[1]);
}

std::string EmitGraph(const Graph& g, Format format) {
  const auto edges = g.edges();
  return Emit(g, edges, std::nullopt, format);
}

std::string EmitTree(const SpanningTree& tree, Format format) {
  const auto edges = tree.edges();
  return Emit(tree.host(), edges, tree.root(), format);
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace tspan
