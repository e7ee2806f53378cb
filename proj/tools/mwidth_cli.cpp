// Copyright 2026 The mwidth Authors
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

#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "cli_common.hpp"

namespace mwidth::cli {
namespace {

struct Common {
  bool json = false;
  std::string output;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_flag("--json", c.json, "Print a JSON report");
  cmd->add_option("-o,--output", c.output, "Write the produced file here instead of stdout");
}

void print_json(const Json& j) { std::cout << j.dump(2) << '\n'; }

// Graph source shared by several commands: a DIMACS file or a generator.
struct GraphSource {
  std::string file;
  std::string kind;
  GraphParams params;
  std::uint64_t seed = 0;
};

void add_graph_source(CLI::App* cmd, GraphSource& g, bool generator_only = false) {
  if (!generator_only) cmd->add_option("--graph", g.file, "DIMACS graph file");
  cmd->add_option("--kind", g.kind,
                  "Generated family: path, cycle, grid, complete, empty, random, tree, ct, matching");
  cmd->add_option("--n", g.params.n, "Vertex count (edge count for matching)");
  cmd->add_option("--rows", g.params.rows, "Grid rows");
  cmd->add_option("--cols", g.params.cols, "Grid columns");
  cmd->add_option("--p", g.params.p, "Edge probability for random graphs");
  cmd->add_option("--r", g.params.r, "Tree height");
  cmd->add_option("--k", g.params.k, "Clique size");
  cmd->add_option("--seed", g.seed, "Seed for random graphs");
}

struct LoadedGraph {
  Graph g{0};
  std::string name;
};

LoadedGraph load(const GraphSource& src) {
  if (!src.file.empty() && !src.kind.empty()) {
    throw InputError("give either --graph or --kind, not both");
  }
  if (!src.file.empty()) return {load_graph(src.file), src.file};
  if (src.kind.empty()) throw InputError("a graph is required (--graph or --kind)");
  return {generate_graph(parse_graph_kind(src.kind), src.params, src.seed), src.kind};
}

Json source_json(const GraphSource& src) {
  Json j;
  if (!src.file.empty()) {
    j["file"] = src.file;
    return j;
  }
  j["kind"] = src.kind;
  j["n"] = src.params.n;
  j["rows"] = src.params.rows;
  j["cols"] = src.params.cols;
  j["p"] = src.params.p;
  j["r"] = src.params.r;
  j["k"] = src.params.k;
  j["seed"] = src.seed;
  return j;
}

// ---------------------------------------------------------------- gen-graph

int gen_graph(const Common& c, const GraphSource& src) {
  const Graph g = load(src).g;
  const std::string text = render(dimacs::write_graph, g);
  if (!c.json || !c.output.empty()) emit_text(c.output, text);
  if (c.json) {
    Json j;
    j["command"] = "gen-graph";
    j["source"] = source_json(src);
    j["vertices"] = g.num_vertices();
    j["edges"] = g.num_edges();
    Json edges = Json::array();
    for (const Edge& e : g.edges()) edges.push_back({e.first + 1, e.second + 1});
    j["edge_list"] = edges;
    print_json(j);
  }
  return kOk;
}

// ------------------------------------------------------------------ gen-cnf

int gen_cnf(const Common& c, const GraphSource& src) {
  const Graph g = load(src).g;
  const Cnf f = cnf_of_graph(g);
  const std::string text = render(dimacs::write_cnf, f);
  if (!c.json || !c.output.empty()) emit_text(c.output, text);
  if (c.json) {
    Json j;
    j["command"] = "gen-cnf";
    j["source"] = source_json(src);
    j["variables"] = f.num_vars();
    j["clauses"] = f.clauses().size();
    if (src.kind == "ct") {
      j["closed_form_variables"] = f_rk_variable_count(src.params.r, src.params.k);
      j["variable_bound"] = f_rk_variable_bound(src.params.r, src.params.k);
    }
    print_json(j);
  }
  return kOk;
}

// ----------------------------------------------------------------------- mw

struct MwOptions {
  bool exact = false;
  std::string order;
  std::size_t cap = kDefaultSubsetCap;
};

int mw(const Common& c, const GraphSource& src, const MwOptions& o) {
  const Graph g = load(src).g;
  if (o.exact && !o.order.empty()) throw InputError("--exact and --order are exclusive");
  WidthReport r;
  Ordering used;
  if (!o.order.empty()) {
    used = parse_order(o.order, g.num_vertices());
    r = mw_of_ordering(g, used);
  } else {
    r = matching_width_exact(g, o.cap);
    used = *r.witness_ordering;
  }
  if (c.json) {
    Json j;
    j["command"] = "mw";
    j["source"] = source_json(src);
    j["mode"] = o.order.empty() ? "exact" : "ordering";
    j["value"] = r.value;
    j["ordering"] = one_based(used.sequence());
    j["witness_prefix"] = r.witness_prefix;
    print_json(j);
  } else {
    std::cout << r.value << '\n';
    std::cout << "ordering " << join_one_based(used.sequence()) << '\n';
    std::cout << "witness prefix " << r.witness_prefix << '\n';
  }
  return kOk;
}

// ----------------------------------------------------------------------- pw

int pw(const Common& c, const GraphSource& src, std::size_t cap) {
  const Graph g = load(src).g;
  const WidthReport r = pathwidth_exact(g, cap);
  const PathDecomposition pd = optimal_path_decomposition(g, cap);
  if (!c.output.empty()) emit_text(c.output, render([&](std::ostream& out, const PathDecomposition& d) {
                                     pace::write_pd(out, d, g.num_vertices());
                                   }, pd));
  if (c.json) {
    Json j;
    j["command"] = "pw";
    j["source"] = source_json(src);
    j["value"] = r.value;
    j["ordering"] = one_based(r.witness_ordering->sequence());
    j["decomposition_width"] = pd.width();
    print_json(j);
  } else {
    std::cout << r.value << '\n';
    std::cout << "ordering " << join_one_based(r.witness_ordering->sequence()) << '\n';
  }
  return kOk;
}

// ----------------------------------------------------------------- td-ctree

int td_ctree(const Common& c, std::size_t r, std::size_t k, bool extended) {
  const CtreeDecomposition d = ctree_decomposition(r, k);
  const TreeDecomposition& td = extended ? d.extended : d.base;
  const Graph host = extended ? primal_graph(f_rk(r, k)) : ct_graph(r, k);
  const DecompositionVerdict v = validate_decomposition(host, td);
  const bool bound_holds = k < 2 && extended ? true : td.width() <= long(2 * k - 1);
  const std::string text = render([&](std::ostream& out, const TreeDecomposition& t) {
    pace::write_td(out, t, host.num_vertices());
  }, td);
  if (!c.json || !c.output.empty()) emit_text(c.output, text);
  if (c.json) {
    Json j;
    j["command"] = "td-ctree";
    j["r"] = r;
    j["k"] = k;
    j["extended"] = extended;
    j["vertices"] = host.num_vertices();
    j["bags"] = td.bags.size();
    j["width"] = td.width();
    j["width_bound"] = 2 * k - 1;
    j["valid"] = v.valid;
    j["violation"] = v.describe();
    j["pass"] = v.valid && bound_holds;
    print_json(j);
  } else if (!c.output.empty()) {
    std::cout << "width " << td.width() << '\n';
  }
  if (!v.valid) std::cerr << "decomposition invalid: " << v.describe() << '\n';
  return v.valid && bound_holds ? kOk : kFalsified;
}

// ------------------------------------------------------------ order-from-pd

int order_from_pd(const Common& c, const GraphSource& src, const std::string& pd_file) {
  const Graph g = load(src).g;
  const pace::ParsedTd parsed = load_td(pd_file);
  if (parsed.num_vertices != g.num_vertices()) {
    throw InputError("decomposition is for " + std::to_string(parsed.num_vertices) +
                     " vertices, graph has " + std::to_string(g.num_vertices()));
  }
  // The tree must be a path listed in bag order.
  PathDecomposition pd{parsed.td.bags};
  if (parsed.td.tree_edges != pd.as_tree().tree_edges) {
    throw InputError("decomposition is not a path with edges i -- i+1");
  }
  const Ordering sv = ordering_from_path_decomposition(g, pd);
  const std::size_t value = mw_of_ordering(g, sv).value;
  const bool holds = long(value) <= pd.width() + 1;
  if (c.json) {
    Json j;
    j["command"] = "order-from-pd";
    j["source"] = source_json(src);
    j["decomposition"] = pd_file;
    j["ordering"] = one_based(sv.sequence());
    j["matching_width"] = value;
    j["decomposition_width"] = pd.width();
    j["pass"] = holds;
    print_json(j);
  } else {
    std::cout << join_one_based(sv.sequence()) << '\n';
    std::cout << "matching width " << value << ", decomposition width " << pd.width() << '\n';
  }
  return holds ? kOk : kFalsified;
}

// ------------------------------------------------------------ pd-from-order

int pd_from_order(const Common& c, const GraphSource& src, const std::string& order,
                  std::size_t cap) {
  const Graph g = load(src).g;
  const Ordering sv = order.empty() ? *matching_width_exact(g, cap).witness_ordering
                                    : parse_order(order, g.num_vertices());
  const std::size_t value = mw_of_ordering(g, sv).value;
  const PathDecomposition pd = path_decomposition_from_ordering(g, sv);
  const DecompositionVerdict v = validate_decomposition(g, pd);
  const bool holds = v.valid && pd.width() <= 2 * long(value);
  const std::string text = render([&](std::ostream& out, const PathDecomposition& d) {
    pace::write_pd(out, d, g.num_vertices());
  }, pd);
  if (!c.json || !c.output.empty()) emit_text(c.output, text);
  if (c.json) {
    Json j;
    j["command"] = "pd-from-order";
    j["source"] = source_json(src);
    j["ordering"] = one_based(sv.sequence());
    j["matching_width"] = value;
    j["width"] = pd.width();
    j["valid"] = v.valid;
    j["violation"] = v.describe();
    j["pass"] = holds;
    print_json(j);
  }
  if (!v.valid) std::cerr << "decomposition invalid: " << v.describe() << '\n';
  return holds ? kOk : kFalsified;
}

// ---------------------------------------------------------------- obdd-*

struct CnfSource {
  std::string cnf_file;
  GraphSource graph;
};

Cnf load_cnf_source(const CnfSource& s) {
  if (!s.cnf_file.empty()) {
    if (!s.graph.file.empty() || !s.graph.kind.empty()) {
      throw InputError("give either --cnf or a graph, not both");
    }
    return load_cnf(s.cnf_file);
  }
  return cnf_of_graph(load(s.graph).g);
}

Json cnf_source_json(const CnfSource& s) {
  if (!s.cnf_file.empty()) return Json{{"cnf", s.cnf_file}};
  return source_json(s.graph);
}

int obdd_build(const Common& c, const CnfSource& src, const std::string& order_text) {
  const Cnf f = load_cnf_source(src);
  const VarOrder order =
      order_text.empty() ? VarOrder::identity(f.num_vars()) : parse_order(order_text, f.num_vars());
  const Obdd d = build_obdd(f, order);
  std::optional<BranchingProgram> z;
  if (d.root() != Obdd::kFalse) z = d.program();
  bool equivalent = true;
  bool ordered = true;
  if (z) {
    equivalent = equivalence_vs_cnf(*z, f).equivalent;
    ordered = check_c_nsobdd(*z, order, 1).pass;
  }
  if (z && (!c.json || !c.output.empty())) emit_text(c.output, render(bptext::write, *z));
  if (c.json) {
    Json j;
    j["command"] = "obdd-build";
    j["source"] = cnf_source_json(src);
    j["order"] = one_based(order.sequence());
    j["size"] = d.size();
    j["decision_nodes"] = d.decision_nodes();
    j["program_nodes"] = z ? Json(z->num_nodes()) : Json(nullptr);
    j["equivalent"] = equivalent;
    j["ordered"] = ordered;
    print_json(j);
  } else if (!c.output.empty()) {
    std::cout << "size " << d.size() << '\n';
  }
  if (!z) std::cerr << "function is unsatisfiable; no program written\n";
  return equivalent && ordered ? kOk : kFalsified;
}

struct MinOptions {
  std::string method = "auto";
  std::size_t enumeration_cap = kDefaultOrderEnumerationCap;
  std::size_t dp_cap = kDefaultOrderDpCap;
};

int obdd_min(const Common& c, const CnfSource& src, const MinOptions& o) {
  const Cnf f = load_cnf_source(src);
  std::string method = o.method;
  if (method == "auto") method = f.num_vars() <= 8 ? "enumeration" : "subset-dp";
  OrderSearchResult r;
  if (method == "enumeration") {
    r = min_obdd_size_over_orders(f, o.enumeration_cap);
  } else if (method == "subset-dp") {
    r = min_obdd_size_exact(f, o.dp_cap);
  } else {
    throw InputError("unknown method '" + o.method + "'");
  }
  if (c.json) {
    Json j;
    j["command"] = "obdd-min";
    j["source"] = cnf_source_json(src);
    j["method"] = method;
    j["size"] = r.size;
    j["order"] = one_based(r.order.sequence());
    j["orders_examined"] = r.orders_examined;
    print_json(j);
  } else {
    std::cout << r.size << '\n';
    std::cout << "order " << join_one_based(r.order.sequence()) << '\n';
  }
  return kOk;
}

// ------------------------------------------------------------ check-cnsobdd

int check_cnsobdd(const Common& c, const std::string& bp_file, const std::string& order_text,
                  std::size_t segments, std::size_t vars, std::size_t path_cap) {
  const BranchingProgram z = load_program(bp_file);
  const std::size_t m = vars ? vars : z.variable_bound();
  if (m < z.variable_bound()) throw InputError("--vars is below the variables the program reads");
  const VarOrder order = order_text.empty() ? VarOrder::identity(m) : parse_order(order_text, m);
  const CnsobddVerdict v = check_c_nsobdd(z, order, segments, path_cap);
  if (c.json) {
    Json j;
    j["command"] = "check-cnsobdd";
    j["program"] = bp_file;
    j["order"] = one_based(order.sequence());
    j["c"] = segments;
    j["pass"] = v.pass;
    j["paths_checked"] = v.paths_checked;
    j["max_segments"] = v.max_segments;
    if (v.violating_path) {
      Json path = Json::array();
      for (NodeId n : v.violating_path->nodes) path.push_back(n);
      j["violating_path_nodes"] = path;
    } else {
      j["violating_path_nodes"] = nullptr;
    }
    print_json(j);
  } else {
    std::cout << (v.pass ? "pass" : "fail") << '\n';
    std::cout << "paths " << v.paths_checked << ", most segments " << v.max_segments << '\n';
  }
  return v.pass ? kOk : kFalsified;
}

// ------------------------------------------------------------ lb-experiment

int lb_experiment(const Common& c, const GraphSource& src, std::size_t segments,
                  const ExperimentOptions& opts) {
  const LoadedGraph lg = load(src);
  const ExperimentReport r = run_lower_bound_experiment(lg.g, lg.name, segments, opts);
  const bool ok = r.pass && r.distinctness.distinct;
  if (c.json) {
    Json j;
    j["command"] = "lb-experiment";
    j["instance"] = r.instance;
    j["source"] = source_json(src);
    j["seed"] = src.file.empty() ? Json(src.seed) : Json(nullptr);
    j["c"] = r.c;
    j["t"] = r.t;
    j["bound"] = r.bound;
    j["measured_size"] = r.measured_size;
    j["program_nodes"] = r.program_nodes;
    j["pass"] = r.pass;
    j["search"] = r.search;
    j["order"] = one_based(r.order.sequence());
    j["witness_prefix"] = one_based(r.cut.prefix);
    Json matching = Json::array();
    for (const CrossEdge& e : r.cut.matching) matching.push_back({e.left + 1, e.right + 1});
    j["witness_matching"] = matching;
    j["distinct"] = r.distinctness.distinct;
    Json members = Json::array();
    for (std::size_t i = 0; i < r.distinctness.vectors.size(); ++i) {
      Json m;
      m["index"] = i;
      Json signs = Json::array();
      for (std::size_t b = 0; b < r.t; ++b) signs.push_back(((i >> b) & 1) ? "+" : "-");
      m["signs"] = signs;
      m["vector"] = r.distinctness.vectors[i].nodes;
      members.push_back(m);
    }
    j["members"] = members;
    if (r.distinctness.collision) {
      j["collision"] = {r.distinctness.collision->first, r.distinctness.collision->second};
    } else {
      j["collision"] = nullptr;
    }
    print_json(j);
  } else {
    std::cout << "instance " << r.instance << '\n';
    std::cout << "matching width " << r.t << ", c " << r.c << '\n';
    std::cout << "minimum OBDD size " << r.measured_size << " (" << r.search << "), bound "
              << r.bound << ": " << (r.pass ? "pass" : "FAIL") << '\n';
    std::cout << "separation vectors " << (r.distinctness.distinct ? "distinct" : "COLLIDE")
              << " over " << r.distinctness.vectors.size() << " assignments\n";
  }
  return ok ? kOk : kFalsified;
}

int run(int argc, char** argv) {
  CLI::App app{"Matching width, path decompositions and OBDD lower-bound checks"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "mwidth 1.0.0");

  Common common;
  GraphSource graph;
  CnfSource cnf;
  MwOptions mw_opts;
  MinOptions min_opts;
  ExperimentOptions exp_opts;
  std::size_t cap = kDefaultSubsetCap;
  std::size_t r = 0, k = 1, segments = 1, vars = 0, path_cap = kDefaultPathCap;
  bool extended = false;
  std::string pd_file, order, bp_file;
  std::function<int()> action;

  auto* gg = app.add_subcommand("gen-graph", "Write a generated graph in DIMACS form");
  add_common(gg, common);
  add_graph_source(gg, graph, true);
  gg->callback([&] { action = [&] { return gen_graph(common, graph); }; });

  auto* gc = app.add_subcommand("gen-cnf", "Write CNF(G) for a graph file or generated graph");
  add_common(gc, common);
  add_graph_source(gc, graph);
  gc->callback([&] { action = [&] { return gen_cnf(common, graph); }; });

  auto* mwc = app.add_subcommand("mw", "Matching width of a graph or of one ordering");
  add_common(mwc, common);
  add_graph_source(mwc, graph);
  mwc->add_flag("--exact", mw_opts.exact, "Exact matching width (default)");
  mwc->add_option("--order", mw_opts.order, "1-based vertex ordering to evaluate instead");
  mwc->add_option("--cap", mw_opts.cap, "Largest vertex count for the exact DP")
      ->check(CLI::PositiveNumber);
  mwc->callback([&] { action = [&] { return mw(common, graph, mw_opts); }; });

  auto* pwc = app.add_subcommand("pw", "Exact pathwidth; -o writes an optimal decomposition");
  add_common(pwc, common);
  add_graph_source(pwc, graph);
  pwc->add_option("--cap", cap, "Largest vertex count for the exact DP")->check(CLI::PositiveNumber);
  pwc->callback([&] { action = [&] { return pw(common, graph, cap); }; });

  auto* td = app.add_subcommand("td-ctree", "Tree decomposition of the clique tree CT(r,k)");
  add_common(td, common);
  td->add_option("--r", r, "Tree height")->required();
  td->add_option("--k", k, "Clique size")->required()->check(CLI::PositiveNumber);
  td->add_flag("--extended", extended, "Decompose the primal graph of CNF(CT(r,k)) instead");
  td->callback([&] { action = [&] { return td_ctree(common, r, k, extended); }; });

  auto* ofp = app.add_subcommand("order-from-pd", "Vertex ordering from a path decomposition");
  add_common(ofp, common);
  add_graph_source(ofp, graph);
  ofp->add_option("--pd", pd_file, "Path decomposition in PACE form")->required();
  ofp->callback([&] { action = [&] { return order_from_pd(common, graph, pd_file); }; });

  auto* pfo = app.add_subcommand("pd-from-order",
                                 "Path decomposition from settled vertex covers of an ordering");
  add_common(pfo, common);
  add_graph_source(pfo, graph);
  pfo->add_option("--order", order, "1-based vertex ordering (default: an optimal one)");
  pfo->add_option("--cap", cap, "Largest vertex count for the exact DP")->check(CLI::PositiveNumber);
  pfo->callback([&] { action = [&] { return pd_from_order(common, graph, order, cap); }; });

  auto* ob = app.add_subcommand("obdd-build", "Reduced OBDD of a CNF under a variable order");
  add_common(ob, common);
  ob->add_option("--cnf", cnf.cnf_file, "DIMACS CNF file");
  add_graph_source(ob, cnf.graph);
  ob->add_option("--order", order, "1-based variable order (default: identity)");
  ob->callback([&] { action = [&] { return obdd_build(common, cnf, order); }; });

  auto* om = app.add_subcommand("obdd-min", "Minimum OBDD size over all variable orders");
  add_common(om, common);
  om->add_option("--cnf", cnf.cnf_file, "DIMACS CNF file");
  add_graph_source(om, cnf.graph);
  om->add_option("--method", min_opts.method, "auto, enumeration or subset-dp")
      ->check(CLI::IsMember({"auto", "enumeration", "subset-dp"}));
  om->add_option("--enum-cap", min_opts.enumeration_cap, "Largest variable count to enumerate")
      ->check(CLI::PositiveNumber);
  om->add_option("--dp-cap", min_opts.dp_cap, "Largest variable count for the subset DP")
      ->check(CLI::PositiveNumber);
  om->callback([&] { action = [&] { return obdd_min(common, cnf, min_opts); }; });

  auto* cc = app.add_subcommand("check-cnsobdd", "Check the semantic c-OBDD condition");
  add_common(cc, common);
  cc->add_option("--bp", bp_file, "Branching program text file")->required();
  cc->add_option("--order", order, "1-based variable order (default: identity)");
  cc->add_option("--c", segments, "Allowed ordered segments per path")->check(CLI::PositiveNumber);
  cc->add_option("--vars", vars, "Variable count of the order (default: largest label)");
  cc->add_option("--path-cap", path_cap, "Largest number of paths to enumerate")
      ->check(CLI::PositiveNumber);
  cc->callback([&] {
    action = [&] { return check_cnsobdd(common, bp_file, order, segments, vars, path_cap); };
  });

  auto* lb = app.add_subcommand("lb-experiment",
                                "Minimum OBDD size of CNF(G) against the matching-width bound");
  add_common(lb, common);
  add_graph_source(lb, graph);
  lb->add_option("--c", segments, "Segments per path in the bound")->check(CLI::PositiveNumber);
  lb->add_option("--cap", exp_opts.subset_cap, "Largest vertex count for the width DP")
      ->check(CLI::PositiveNumber);
  lb->add_option("--enum-cap", exp_opts.enumeration_cap,
                 "Variable counts up to this use order enumeration")
      ->check(CLI::PositiveNumber);
  lb->add_option("--dp-cap", exp_opts.order_dp_cap, "Largest variable count for the order DP")
      ->check(CLI::PositiveNumber);
  lb->callback([&] { action = [&] { return lb_experiment(common, graph, segments, exp_opts); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    return action();
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violated: " << e.what() << '\n';
    return kFalsified;
  } catch (const EquivalenceError& e) {
    std::cerr << "program disagrees with the CNF: " << e.what() << '\n';
    return kFalsified;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace
}  // namespace mwidth::cli

int main(int argc, char** argv) { return mwidth::cli::run(argc, argv); }
