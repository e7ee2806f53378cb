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

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "mwidth/cnf.hpp"
#include "mwidth/errors.hpp"
#include "mwidth/graph.hpp"

namespace mwidth {

using NodeId = std::uint32_t;

/// Permutation of CNF variable ids.
using VarOrder = Ordering;

struct BpEdge {
  NodeId tail = 0;
  NodeId head = 0;
  /// Unlabelled edges are free nondeterministic moves.
  std::optional<Literal> label;

  friend bool operator==(const BpEdge&, const BpEdge&) = default;
};

/// Nondeterministic branching program: a DAG with one root and one leaf
/// whose edges optionally carry literals. An assignment is accepted iff some
/// root-leaf path has all its labels true.
class BranchingProgram {
 public:
  BranchingProgram() : BranchingProgram(1, {}, 0, 0) {}

  BranchingProgram(std::size_t num_nodes, std::vector<BpEdge> edges, NodeId root,
                   NodeId leaf)
      : num_nodes_(num_nodes), edges_(std::move(edges)), root_(root), leaf_(leaf) {
    validate();
  }

  std::size_t num_nodes() const noexcept { return num_nodes_; }
  const std::vector<BpEdge>& edges() const noexcept { return edges_; }
  NodeId root() const noexcept { return root_; }
  NodeId leaf() const noexcept { return leaf_; }

  /// Indices of the edges leaving `v`, ascending.
  const std::vector<std::size_t>& out_edges(NodeId v) const { return out_.at(v); }

  /// Nodes in a topological order (smallest id first among ready nodes).
  const std::vector<NodeId>& topological_order() const noexcept { return topo_; }

  /// One more than the largest labelled variable; 0 if no labels.
  std::size_t variable_bound() const noexcept { return var_bound_; }

  friend bool operator==(const BranchingProgram& a, const BranchingProgram& b) {
    return a.num_nodes_ == b.num_nodes_ && a.root_ == b.root_ &&
           a.leaf_ == b.leaf_ && a.edges_ == b.edges_;
  }

 private:
  void validate() {
    if (num_nodes_ == 0) throw MalformedInput("branching program without nodes");
    if (root_ >= num_nodes_ || leaf_ >= num_nodes_) {
      throw MalformedInput("root or leaf is not a node");
    }
    out_.assign(num_nodes_, {});
    std::vector<std::size_t> indeg(num_nodes_, 0);
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      const BpEdge& e = edges_[i];
      if (e.tail >= num_nodes_ || e.head >= num_nodes_) {
        throw MalformedInput("edge " + std::to_string(i) + " names a missing node");
      }
      out_[e.tail].push_back(i);
      ++indeg[e.head];
      if (e.label) var_bound_ = std::max<std::size_t>(var_bound_, e.label->var + 1);
    }
    for (NodeId v = 0; v < num_nodes_; ++v) {
      if (indeg[v] == 0 && v != root_) {
        throw MalformedInput("node " + std::to_string(v) + " has no in-edges but is not the root");
      }
      if (out_[v].empty() && v != leaf_) {
        throw MalformedInput("node " + std::to_string(v) + " has no out-edges but is not the leaf");
      }
    }
    if (indeg[root_] != 0) throw MalformedInput("root has in-edges");
    if (!out_[leaf_].empty()) throw MalformedInput("leaf has out-edges");

    std::vector<NodeId> ready;
    for (NodeId v = 0; v < num_nodes_; ++v) {
      if (indeg[v] == 0) ready.push_back(v);
    }
    while (!ready.empty()) {
      std::pop_heap(ready.begin(), ready.end(), std::greater<>());
      NodeId v = ready.back();
      ready.pop_back();
      topo_.push_back(v);
      for (std::size_t i : out_[v]) {
        if (--indeg[edges_[i].head] == 0) {
          ready.push_back(edges_[i].head);
          std::push_heap(ready.begin(), ready.end(), std::greater<>());
        }
      }
    }
    if (topo_.size() != num_nodes_) throw MalformedInput("branching program has a cycle");
    // With a unique source and a unique sink every node of a DAG lies on a
    // root-leaf path.
  }

  std::size_t num_nodes_ = 0;
  std::vector<BpEdge> edges_;
  NodeId root_ = 0;
  NodeId leaf_ = 0;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<NodeId> topo_;
  std::size_t var_bound_ = 0;
};

/// Accepts iff some root-leaf path has every label true under `s`.
inline bool evaluate(const BranchingProgram& z, const Assignment& s) {
  if (s.size() < z.variable_bound()) {
    throw MalformedInput("assignment covers " + std::to_string(s.size()) +
                         " variables, program reads " +
                         std::to_string(z.variable_bound()));
  }
  std::vector<char> reach(z.num_nodes(), 0);
  reach[z.root()] = 1;
  for (NodeId v : z.topological_order()) {
    if (!reach[v]) continue;
    for (std::size_t i : z.out_edges(v)) {
      const BpEdge& e = z.edges()[i];
      if (!e.label || s[e.label->var] == e.label->positive) reach[e.head] = 1;
    }
  }
  return reach[z.leaf()] != 0;
}

struct ComputationalPath {
  /// Edge indices from root to leaf.
  std::vector<std::size_t> edges;
  /// Node sequence; one longer than `edges`.
  std::vector<NodeId> nodes;
  /// A(P), sorted.
  std::vector<Literal> literals;

  /// Literals in path order, unlabelled edges skipped.
  std::vector<Literal> label_sequence(const BranchingProgram& z) const {
    std::vector<Literal> seq;
    for (std::size_t i : edges) {
      if (z.edges()[i].label) seq.push_back(*z.edges()[i].label);
    }
    return seq;
  }
};

inline constexpr std::size_t kDefaultPathCap = 1'000'000;

/// Visits every consistent root-leaf path in lexicographic order of edge
/// index sequences. Throws CapacityError once more than `cap` are found.
inline void for_each_computational_path(
    const BranchingProgram& z, const std::function<void(const ComputationalPath&)>& visit,
    std::size_t cap = kDefaultPathCap) {
  // Multiplicity of each literal on the current path.
  std::vector<int> positive(z.variable_bound(), 0), negative(z.variable_bound(), 0);
  ComputationalPath path;
  path.nodes.push_back(z.root());
  std::size_t found = 0;

  auto emit = [&] {
    if (++found > cap) throw CapacityError("computational paths", found, cap);
    ComputationalPath out;
    out.edges = path.edges;
    out.nodes = path.nodes;
    for (Var x = 0; x < positive.size(); ++x) {
      if (positive[x]) out.literals.push_back(pos(x));
      if (negative[x]) out.literals.push_back(neg(x));
    }
    visit(out);
  };

  auto dfs = [&](auto&& self, NodeId v) -> void {
    if (v == z.leaf()) {
      emit();
      return;
    }
    for (std::size_t i : z.out_edges(v)) {
      const BpEdge& e = z.edges()[i];
      if (e.label) {
        const Var x = e.label->var;
        if (e.label->positive ? negative[x] : positive[x]) continue;
        ++(e.label->positive ? positive[x] : negative[x]);
      }
      path.edges.push_back(i);
      path.nodes.push_back(e.head);
      self(self, e.head);
      path.edges.pop_back();
      path.nodes.pop_back();
      if (e.label) --(e.label->positive ? positive[e.label->var] : negative[e.label->var]);
    }
  };
  dfs(dfs, z.root());
}

inline std::vector<ComputationalPath> enumerate_computational_paths(
    const BranchingProgram& z, std::size_t cap = kDefaultPathCap) {
  std::vector<ComputationalPath> out;
  for_each_computational_path(z, [&](const ComputationalPath& p) { out.push_back(p); }, cap);
  return out;
}

/// Start indices of the segments of a greedy split of `labels` into runs
/// that read distinct variables in strictly increasing `order` position.
/// A new run starts exactly when the next variable's position is not
/// greater than the last one read. The split has the fewest runs possible.
inline std::vector<std::size_t> greedy_segments(const std::vector<Literal>& labels,
                                                const VarOrder& order) {
  std::vector<std::size_t> starts;
  std::size_t last = 0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i].var >= order.size()) {
      throw MalformedInput("label on variable " + std::to_string(labels[i].var + 1) +
                           " outside the order");
    }
    const std::size_t p = order.position(labels[i].var);
    if (starts.empty() || p <= last) starts.push_back(i);
    last = p;
  }
  return starts;
}

struct CnsobddVerdict {
  bool pass = true;
  std::size_t paths_checked = 0;
  /// Largest greedy segment count over the consistent paths.
  std::size_t max_segments = 0;
  std::optional<ComputationalPath> violating_path;
};

/// Checks the semantic c-OBDD condition: every consistent root-leaf path
/// splits into at most c runs ordered by `order`. Inconsistent paths are
/// exempt. The first violating path in enumeration order is reported.
inline CnsobddVerdict check_c_nsobdd(const BranchingProgram& z, const VarOrder& order,
                                     std::size_t c, std::size_t cap = kDefaultPathCap) {
  if (c < 1) throw ParameterError("c must be at least 1");
  CnsobddVerdict verdict;
  for_each_computational_path(
      z,
      [&](const ComputationalPath& p) {
        ++verdict.paths_checked;
        const std::size_t segs = greedy_segments(p.label_sequence(z), order).size();
        verdict.max_segments = std::max(verdict.max_segments, segs);
        if (segs > c && verdict.pass) {
          verdict.pass = false;
          verdict.violating_path = p;
        }
      },
      cap);
  return verdict;
}

struct EquivalenceVerdict {
  bool equivalent = true;
  std::optional<Assignment> counterexample;
};

inline constexpr std::size_t kDefaultTruthTableCap = 20;

/// Compares `z` with `f` on all assignments to the variables of `f`; the
/// first disagreeing assignment in counting order is returned.
inline EquivalenceVerdict equivalence_vs_cnf(const BranchingProgram& z, const Cnf& f,
                                             std::size_t cap = kDefaultTruthTableCap) {
  const std::size_t m = f.num_vars();
  if (m > cap) throw CapacityError("truth-table comparison over variables", m, cap);
  if (z.variable_bound() > m) {
    throw PreconditionError("program reads variables the CNF does not have");
  }
  EquivalenceVerdict verdict;
  Assignment s(m, false);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits) {
    for (std::size_t x = 0; x < m; ++x) s[x] = (bits >> x) & 1;
    if (evaluate(z, s) != f.satisfied_by(s)) {
      verdict.equivalent = false;
      verdict.counterexample = s;
      return verdict;
    }
  }
  return verdict;
}

// Text form:
//   p bp <nodes> <edges> <root> <leaf>
//   <tail> <head> [<signed 1-based variable>]
// Nodes are 0-based.
namespace bptext {

inline constexpr const char* kHeader = "c mwidth branching-program v1";

inline void write(std::ostream& out, const BranchingProgram& z) {
  out << kHeader << '\n';
  out << "p bp " << z.num_nodes() << ' ' << z.edges().size() << ' ' << z.root()
      << ' ' << z.leaf() << '\n';
  for (const BpEdge& e : z.edges()) {
    out << e.tail << ' ' << e.head;
    if (e.label) out << ' ' << e.label->to_dimacs();
    out << '\n';
  }
}

inline BranchingProgram read(std::istream& in) {
  std::string line;
  std::size_t ln = 0;
  bool have_header = false;
  long nodes = 0, declared = 0, root = 0, leaf = 0;
  std::vector<BpEdge> edges;
  while (std::getline(in, line)) {
    ++ln;
    std::istringstream iss(line);
    std::string tag;
    if (!(iss >> tag) || tag == "c") continue;
    if (tag == "p") {
      if (have_header) throw ParseError("second problem line", ln);
      std::string kind;
      iss >> kind >> nodes >> declared >> root >> leaf;
      if (!iss || kind != "bp" || nodes < 1 || declared < 0 || root < 0 || leaf < 0) {
        throw ParseError("expected 'p bp <nodes> <edges> <root> <leaf>'", ln);
      }
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError("edge before problem line", ln);
    std::istringstream body(line);
    long tail = -1, head = -1, lit = 0;
    if (!(body >> tail >> head) || tail < 0 || head < 0) {
      throw ParseError("expected '<tail> <head> [literal]'", ln);
    }
    BpEdge e{NodeId(tail), NodeId(head), std::nullopt};
    if (body >> lit) {
      if (lit == 0) throw ParseError("literal 0", ln);
      e.label = Literal::from_dimacs(lit);
    }
    std::string extra;
    if (body.clear(), body >> extra) throw ParseError("trailing token '" + extra + "'", ln);
    edges.push_back(e);
  }
  if (!have_header) throw ParseError("missing problem line");
  if (edges.size() != std::size_t(declared)) {
    throw ParseError("header declares " + std::to_string(declared) + " edges, found " +
                     std::to_string(edges.size()));
  }
  try {
    return BranchingProgram(std::size_t(nodes), std::move(edges), NodeId(root), NodeId(leaf));
  } catch (const MalformedInput& e) {
    throw ParseError(e.what());
  }
}

}  // namespace bptext

}  // namespace mwidth
