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

#include "tspan/cli.h"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "tspan/cnf.h"
#include "tspan/diam4.h"
#include "tspan/errors.h"
#include "tspan/gadgets.h"
#include "tspan/graph_io.h"
#include "tspan/kernels.h"
#include "tspan/normalize.h"
#include "tspan/oracle.h"
#include "tspan/spanner.h"

namespace tspan {
namespace {

using nlohmann::json;

struct Options {
  std::string format = "el";
  std::string graph;
  std::string tree;
  std::string cnf;
  std::string center;
  std::string emit_tree;
  std::string oracle_kind;
  int t = -1;
  std::optional<int> max_diam;
  std::uint64_t max_nodes = SearchBudget{}.max_nodes;
  std::uint64_t max_trees = SearchBudget{}.max_trees;
  double timeout = 60.0;
};

// Output of one command: a JSON report, optionally with a graph or tree
// attached. Edge list and DOT output show the report as comment lines above
// the attachment, or as "key value" lines when there is none.
struct Output {
  json report = json::object();
  std::vector<std::string> notes;  // extra comment lines for text formats
  std::optional<SpanningTree> tree;
  std::optional<Graph> graph;
  bool attach_tree_in_text = true;  // otherwise the graph is the text body
};

std::string Scalar(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string Render(const Output& o, Format format) {
  if (format == Format::kJson) {
    json doc = o.report;
    if (o.graph) doc["graph"] = json::parse(EmitGraph(*o.graph, Format::kJson));
    if (o.tree) doc["tree"] = json::parse(EmitTree(*o.tree, Format::kJson));
    return doc.dump(2) + '\n';
  }
  const bool has_body = o.tree || o.graph;
  const std::string prefix =
      !has_body ? "" : (format == Format::kDot ? "// " : "# ");
  std::ostringstream out;
  for (const auto& [key, value] : o.report.items()) {
    if (value.is_array() || value.is_object()) continue;
    out << prefix << key << ' ' << Scalar(value) << '\n';
  }
  for (const auto& n : o.notes) out << prefix << n << '\n';
  if (o.tree && (o.attach_tree_in_text || !o.graph)) {
    out << EmitTree(*o.tree, format);
  } else if (o.graph) {
    out << EmitGraph(*o.graph, format);
  }
  return out.str();
}

json Labels(const Graph& g, std::span<const VertexId> ids) {
  json a = json::array();
  for (VertexId x : ids) a.push_back(g.label(x));
  return a;
}

std::string Joined(const Graph& g, std::span<const VertexId> ids,
                   char sep = ',') {
  std::string s;
  for (VertexId x : ids) {
    if (!s.empty()) s += sep;
    s += g.label(x);
  }
  return s;
}

Graph LoadGraph(const Options& o) { return ParseGraph(ReadFile(o.graph)); }

void WriteTreeFile(const Options& o, const SpanningTree& tree,
                   Format format) {
  if (o.emit_tree.empty()) return;
  std::ofstream out(o.emit_tree, std::ios::binary);
  out << EmitTree(tree, format);
  if (!out) throw InvalidInput("cannot write " + o.emit_tree);
}

SearchBudget BudgetOf(const Options& o) {
  SearchBudget b;
  b.max_nodes = o.max_nodes;
  b.max_trees = o.max_trees;
  b.timeout = std::chrono::milliseconds(
      static_cast<std::int64_t>(o.timeout * 1000.0));
  return b;
}

CommandStatus Verify(const Options& o, Output& out) {
  const Graph g = LoadGraph(o);
  const SpanningTree tree = ParseTree(ReadFile(o.tree), g);
  const bool spanner = IsTreeSpanner(g, tree, o.t);
  const int diameter = TreeDiameter(tree);
  const bool ok = spanner && (!o.max_diam || diameter <= *o.max_diam);
  out.report["t"] = o.t;
  out.report["t_spanner"] = spanner;
  out.report["diameter"] = diameter;
  out.report["max_stretch"] = MaxEdgeStretch(g, tree, Execution::kParallel);
  if (o.max_diam) out.report["max_diam"] = *o.max_diam;
  out.report["result"] = ok;
  return ok ? CommandStatus::kFound : CommandStatus::kNotFound;
}

CommandStatus TStar(const Options& o, Output& out) {
  const Graph g = LoadGraph(o);
  const auto centers = FindCenters(g, o.t);
  out.report["t"] = o.t;
  out.report["t_star"] = !centers.empty();
  out.report["centers"] = json::array();
  for (const Center& k : centers) {
    out.report["centers"].push_back(Labels(g, k.vertices()));
    out.notes.push_back("center " + Joined(g, k.vertices()));
  }
  return centers.empty() ? CommandStatus::kNotFound : CommandStatus::kFound;
}

CommandStatus Decide3d4(const Options& o, Format format, Output& out) {
  const Graph g = LoadGraph(o);
  auto witness = DecideTree3Diam4(g, Execution::kParallel);
  out.report["decided"] = witness.has_value();
  if (!witness) return CommandStatus::kNotFound;
  out.report["hub"] = g.label(witness->hub);
  out.report["assignment"] = json::array();
  for (const auto& c : witness->assignment) {
    out.report["assignment"].push_back(
        {{"component", Labels(g, c.component)}, {"cover", g.label(c.cover)}});
    out.notes.push_back("cover " + g.label(c.cover) + ' ' +
                        Joined(g, c.component));
  }
  out.tree = witness->tree;
  WriteTreeFile(o, witness->tree, format);
  return CommandStatus::kFound;
}

CommandStatus Normalize(const Options& o, Output& out) {
  const Graph g = LoadGraph(o);
  const SpanningTree tree = ParseTree(ReadFile(o.tree), g);
  const Center k = ParseCenter(o.center, g);
  NormalizeResult r = NormalizeShortestPaths(g, tree, o.t, k);
  out.report["violating"] = Labels(g, r.report.violating);
  out.report["swaps"] = json::array();
  out.notes.push_back("violating " + Joined(g, r.report.violating));
  for (const EdgeSwap& s : r.report.swaps_performed) {
    out.report["swaps"].push_back(
        {{"removed", {g.label(s.removed.u), g.label(s.removed.v)}},
         {"added", {g.label(s.added.u), g.label(s.added.v)}}});
    out.notes.push_back("swap " + g.label(s.removed.u) + '-' +
                        g.label(s.removed.v) + " => " + g.label(s.added.u) +
                        '-' + g.label(s.added.v));
  }
  out.tree = std::move(r.tree);
  return CommandStatus::kFound;
}

CommandStatus GenCounterexample(const Options& o, Format format,
                                Output& out) {
  Counterexample ce = MakeCounterexample(o.t);
  out.report["t"] = ce.t;
  out.report["center"] = Labels(ce.graph, ce.center.vertices());
  out.report["violator"] = ce.graph.label(ce.violator);
  out.notes.push_back("center " + Joined(ce.graph, ce.center.vertices()));
  out.graph = ce.graph;
  out.tree = ce.tree;
  out.attach_tree_in_text = false;
  WriteTreeFile(o, ce.tree, format);
  return CommandStatus::kFound;
}

CommandStatus GenReduction(const Options& o, Format format, Output& out) {
  const CnfInstance instance = ParseDimacs(ReadFile(o.cnf));
  const ReductionGraph f = BuildF(instance);
  std::optional<TailGraph> h;
  if (o.t >= 0) h = BuildH(f, o.t);
  const Graph& g = h ? h->graph : f.graph;
  const Center k = h ? h->tail.center : f.center();
  out.report["t"] = h ? o.t : 4;
  out.report["center"] = Labels(g, k.vertices());
  out.report["filtered"] = f.filtered;
  out.notes.push_back("center " + Joined(g, k.vertices()));
  out.graph = g;
  out.attach_tree_in_text = false;
  if (o.emit_tree.empty()) return CommandStatus::kFound;

  auto assignment = BruteForceSat(instance);
  out.report["satisfiable"] = assignment.has_value();
  if (!assignment) return CommandStatus::kNotFound;
  SpanningTree tree = TreeFromAssignment(f, *assignment);
  if (h) tree = LiftTree(f, *h, tree);
  out.tree = tree;
  WriteTreeFile(o, tree, format);
  return CommandStatus::kFound;
}

CommandStatus Sat(const Options& o, Output& out) {
  const CnfInstance instance = ParseDimacs(ReadFile(o.cnf));
  auto a = BruteForceSat(instance);
  out.report["satisfiable"] = a.has_value();
  if (!a) return CommandStatus::kNotFound;
  out.report["assignment"] = a->values;
  for (const auto& [var, value] : a->values) {
    out.notes.push_back(var + (value ? " true" : " false"));
  }
  return CommandStatus::kFound;
}

CommandStatus Oracle(const Options& o, Output& out) {
  const Graph g = LoadGraph(o);
  const SearchBudget budget = BudgetOf(o);
  SearchResult r;
  if (o.oracle_kind == "spanner") {
    if (!o.center.empty()) {
      throw InvalidInput("--center applies to 'oracle sps' only");
    }
    r = BruteForceSpanner(g, o.t, o.max_diam, budget, Execution::kParallel);
  } else {
    if (o.max_diam && *o.max_diam < o.t + 1) {
      throw InvalidInput(
          "sps trees may have diameter t+1; use 'oracle spanner' for a "
          "tighter --max-diam");
    }
    r = o.center.empty()
            ? SpsTreeSearchAnyCenter(g, o.t, budget)
            : SpsTreeSearch(g, ParseCenter(o.center, g), o.t, budget);
  }
  out.report["status"] = ToString(r.status);
  out.report["nodes"] = r.stats.nodes;
  out.report["trees"] = r.stats.trees;
  if (r.center && r.status == SearchStatus::kFound) {
    out.report["center"] = Labels(g, r.center->vertices());
    out.notes.push_back("center " + Joined(g, r.center->vertices()));
  }
  if (r.tree) out.tree = std::move(*r.tree);
  switch (r.status) {
    case SearchStatus::kFound:
      return CommandStatus::kFound;
    case SearchStatus::kAbsent:
      return CommandStatus::kNotFound;
    case SearchStatus::kBudgetExhausted:
      break;
  }
  return CommandStatus::kBudgetExhausted;
}

}  // namespace

int ExitCode(CommandStatus status) {
  switch (status) {
    case CommandStatus::kFound:
      return 0;
    case CommandStatus::kNotFound:
      return 1;
    case CommandStatus::kInvalidInput:
      return 2;
    case CommandStatus::kBudgetExhausted:
      return 3;
  }
  return 2;
}

std::string_view ToString(CommandStatus status) {
  switch (status) {
    case CommandStatus::kFound:
      return "found";
    case CommandStatus::kNotFound:
      return "not-found";
    case CommandStatus::kInvalidInput:
      return "invalid-input";
    case CommandStatus::kBudgetExhausted:
      return "budget-exhausted";
  }
  return "invalid-input";
}

CommandResult RunCli(const std::vector<std::string>& args) {
  Options o;
  CLI::App app{"Tree t-spanners of bounded diameter", "tspan"};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();
  const auto formats = CLI::IsMember({"el", "json", "dot"});
  auto add_format = [&](CLI::App* c) {
    c->add_option("--format", o.format, "Output format")->check(formats);
  };
  auto add_t = [&](CLI::App* c, bool required) {
    auto* opt = c->add_option("--t", o.t, "Stretch")
                    ->check(CLI::NonNegativeNumber);
    if (required) opt->required();
  };
  auto add_graph = [&](CLI::App* c) {
    c->add_option("--graph", o.graph, "Graph file")->required();
  };

  auto* verify = app.add_subcommand("verify", "Check a tree t-spanner");
  add_graph(verify);
  verify->add_option("--tree", o.tree, "Tree file")->required();
  add_t(verify, true);
  verify->add_option("--max-diam", o.max_diam, "Diameter bound");
  add_format(verify);

  auto* tstar = app.add_subcommand("tstar", "List the t-centers of a graph");
  add_graph(tstar);
  add_t(tstar, true);
  add_format(tstar);

  auto* decide = app.add_subcommand(
      "decide3d4", "Decide tree 3-spanner of diameter at most 4");
  add_graph(decide);
  decide->add_option("--emit-tree", o.emit_tree, "Write the witness tree");
  add_format(decide);

  auto* normalize = app.add_subcommand(
      "normalize", "Turn a tree t-spanner into a shortest-paths tree");
  add_graph(normalize);
  normalize->add_option("--tree", o.tree, "Tree file")->required();
  add_t(normalize, true);
  normalize->add_option("--center", o.center, "One label or an edge a,b")
      ->required();
  add_format(normalize);

  auto* gen = app.add_subcommand("gen", "Generate constructions");
  gen->require_subcommand(1);
  auto* counter = gen->add_subcommand(
      "counterexample", "Graph with no shortest-paths tree t-spanner");
  add_t(counter, true);
  counter->add_option("--emit-tree", o.emit_tree,
                      "Write the designated tree");
  add_format(counter);
  auto* reduction =
      gen->add_subcommand("reduction", "Reduction graph of a 3-CNF formula");
  reduction->add_option("--cnf", o.cnf, "DIMACS file")->required();
  add_t(reduction, false);
  reduction->add_option("--emit-tree", o.emit_tree,
                        "Write the tree of a satisfying assignment");
  add_format(reduction);

  auto* sat = app.add_subcommand("sat", "Brute-force satisfiability");
  sat->add_option("--cnf", o.cnf, "DIMACS file")->required();
  add_format(sat);

  auto* oracle = app.add_subcommand("oracle", "Exhaustive searches");
  oracle->require_subcommand(1);
  for (const char* kind : {"spanner", "sps"}) {
    auto* c = oracle->add_subcommand(
        kind, std::string(kind) == "spanner"
                  ? "Enumerate spanning trees"
                  : "Search shortest-paths trees around centers");
    c->callback([&o, kind] { o.oracle_kind = kind; });
    add_graph(c);
    add_t(c, true);
    c->add_option("--max-diam", o.max_diam, "Diameter bound");
    c->add_option("--center", o.center, "One label or an edge a,b");
    c->add_option("--max-nodes", o.max_nodes, "Search node budget");
    c->add_option("--max-trees", o.max_trees, "Enumerated tree budget");
    c->add_option("--timeout", o.timeout, "Seconds")
        ->check(CLI::PositiveNumber);
    add_format(c);
  }

  CommandResult result;
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream out, err;
    const int code = app.exit(e, out, err);
    result.payload = out.str();
    result.diagnostics = err.str();
    result.status =
        code == 0 ? CommandStatus::kFound : CommandStatus::kInvalidInput;
    return result;
  }

  try {
    const Format format = ParseFormat(o.format);
    Output out;
    if (verify->parsed()) {
      result.status = Verify(o, out);
    } else if (tstar->parsed()) {
      result.status = TStar(o, out);
    } else if (decide->parsed()) {
      result.status = Decide3d4(o, format, out);
    } else if (normalize->parsed()) {
      result.status = Normalize(o, out);
    } else if (counter->parsed()) {
      result.status = GenCounterexample(o, format, out);
    } else if (reduction->parsed()) {
      result.status = GenReduction(o, format, out);
    } else if (sat->parsed()) {
      result.status = Sat(o, out);
    } else {
      result.status = Oracle(o, out);
    }
    result.payload = Render(out, format);
  } catch (const std::exception& e) {
    result.status = CommandStatus::kInvalidInput;
    result.diagnostics = std::string("error: ") + e.what() + '\n';
  }
  return result;
}

}  // namespace tspan
