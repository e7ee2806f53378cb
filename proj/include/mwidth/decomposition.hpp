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
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mwidth/cnf.hpp"
#include "mwidth/errors.hpp"
#include "mwidth/graph.hpp"
#include "mwidth/instances.hpp"
#include "mwidth/width.hpp"

namespace mwidth {

/// Bags indexed 0..B-1 on a tree given by its edge list.
struct TreeDecomposition {
  std::vector<VertexSet> bags;
  std::vector<std::pair<std::size_t, std::size_t>> tree_edges;

  /// Largest bag size minus one; -1 without bags.
  long width() const {
    std::size_t largest = 0;
    for (const auto& b : bags) largest = std::max(largest, b.size());
    return long(largest) - 1;
  }
};

/// Bags along a path, in path order.
struct PathDecomposition {
  std::vector<VertexSet> bags;

  long width() const {
    std::size_t largest = 0;
    for (const auto& b : bags) largest = std::max(largest, b.size());
    return long(largest) - 1;
  }

  TreeDecomposition as_tree() const {
    TreeDecomposition td;
    td.bags = bags;
    for (std::size_t i = 1; i < bags.size(); ++i) td.tree_edges.emplace_back(i - 1, i);
    return td;
  }
};

enum class DecompositionProperty { kNone, kUnion, kContainment, kConnectedness };

inline const char* to_string(DecompositionProperty p) {
  switch (p) {
    case DecompositionProperty::kNone: return "none";
    case DecompositionProperty::kUnion: return "union";
    case DecompositionProperty::kContainment: return "containment";
    case DecompositionProperty::kConnectedness: return "connectedness";
  }
  return "?";
}

struct DecompositionVerdict {
  bool valid = true;
  DecompositionProperty violated = DecompositionProperty::kNone;
  /// Set for union and connectedness failures.
  std::optional<Vertex> witness_vertex;
  /// Set for containment failures.
  std::optional<Edge> witness_edge;

  std::string describe() const {
    if (valid) return "valid";
    std::string s = std::string(to_string(violated)) + " violated at ";
    if (witness_edge) {
      s += "edge {" + std::to_string(witness_edge->first) + "," +
           std::to_string(witness_edge->second) + "}";
    } else if (witness_vertex) {
      s += "vertex " + std::to_string(*witness_vertex);
    }
    return s;
  }
};

namespace detail {

inline void require_tree(const TreeDecomposition& d) {
  const std::size_t nodes = d.bags.size();
  if (nodes == 0) {
    if (!d.tree_edges.empty()) throw MalformedInput("tree edges without bags");
    return;
  }
  if (d.tree_edges.size() != nodes - 1) {
    throw MalformedInput("decomposition tree has " +
                         std::to_string(d.tree_edges.size()) + " edges for " +
                         std::to_string(nodes) + " nodes");
  }
  std::vector<std::size_t> root(nodes);
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](std::size_t x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  for (auto [a, b] : d.tree_edges) {
    if (a >= nodes || b >= nodes) throw MalformedInput("tree edge names a missing bag");
    std::size_t ra = find(a), rb = find(b);
    if (ra == rb) throw MalformedInput("decomposition tree has a cycle");
    root[ra] = rb;
  }
}

}  // namespace detail

/// Checks union, containment and connectedness, in that order, and reports
/// the first failure with the smallest witness. Throws MalformedInput when a
/// bag names a vertex outside `g` or the bags do not sit on a tree.
inline DecompositionVerdict validate_decomposition(const Graph& g,
                                                   const TreeDecomposition& d) {
  detail::require_tree(d);
  const std::size_t n = g.num_vertices();
  std::vector<VertexSet> sorted = d.bags;
  for (auto& b : sorted) b = make_vertex_set(b);
  std::vector<std::size_t> bag_count(n, 0);
  for (const VertexSet& bag : sorted) {
    for (Vertex v : bag) {
      if (v >= n) {
        throw MalformedInput("bag contains vertex " + std::to_string(v) +
                             " outside the graph");
      }
      ++bag_count[v];
    }
  }

  DecompositionVerdict verdict;
  for (std::size_t v = 0; v < n; ++v) {
    if (bag_count[v] == 0) {
      verdict.valid = false;
      verdict.violated = DecompositionProperty::kUnion;
      verdict.witness_vertex = Vertex(v);
      return verdict;
    }
  }

  for (const Edge& e : g.edges()) {
    bool found = std::any_of(sorted.begin(), sorted.end(), [&](const VertexSet& b) {
      return contains(b, e.first) && contains(b, e.second);
    });
    if (!found) {
      verdict.valid = false;
      verdict.violated = DecompositionProperty::kContainment;
      verdict.witness_edge = e;
      return verdict;
    }
  }

  // In a forest, the nodes holding v induce a subtree iff they span
  // exactly bag_count[v] - 1 tree edges.
  std::vector<std::size_t> inner_edges(n, 0);
  for (auto [a, b] : d.tree_edges) {
    for (Vertex v : set_intersection(sorted[a], sorted[b])) ++inner_edges[v];
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (inner_edges[v] + 1 != bag_count[v]) {
      verdict.valid = false;
      verdict.violated = DecompositionProperty::kConnectedness;
      verdict.witness_vertex = Vertex(v);
      return verdict;
    }
  }
  return verdict;
}

inline DecompositionVerdict validate_decomposition(const Graph& g,
                                                   const PathDecomposition& d) {
  return validate_decomposition(g, d.as_tree());
}

struct CtreeDecomposition {
  /// Decomposition of CT_{r,k} on the tree T_r, node a holding the clique
  /// of a and the clique of its parent.
  TreeDecomposition base;
  /// `base` plus one leaf bag {X_u, X_{u,v}, X_v} per edge, a decomposition
  /// of the primal graph of F_{r,k} under the cnf_of_graph numbering.
  TreeDecomposition extended;
};

inline CtreeDecomposition ctree_decomposition(std::size_t r, std::size_t k) {
  if (k < 1) throw ParameterError("clique size must be at least 1");
  const Graph tree = complete_binary_tree(r);
  const Graph ct = ct_graph(r, k);
  CtreeDecomposition out;

  for (std::size_t a = 0; a < tree.num_vertices(); ++a) {
    VertexSet bag;
    for (std::size_t j = 0; j < k; ++j) bag.push_back(ct_vertex(Vertex(a), j, k));
    if (a != 0) {
      for (std::size_t j = 0; j < k; ++j) {
        bag.push_back(ct_vertex(tree_parent(Vertex(a)), j, k));
      }
    }
    out.base.bags.push_back(make_vertex_set(std::move(bag)));
  }
  for (const Edge& e : tree.edges()) out.base.tree_edges.emplace_back(e.first, e.second);

  out.extended = out.base;
  const std::size_t n = ct.num_vertices();
  for (std::size_t j = 0; j < ct.num_edges(); ++j) {
    const Edge& e = ct.edges()[j];
    // The deeper of the two tree nodes holds both cliques.
    const std::size_t host = std::max(e.first / k, e.second / k);
    out.extended.tree_edges.emplace_back(host, out.extended.bags.size());
    out.extended.bags.push_back(make_vertex_set({e.first, e.second, Vertex(n + j)}));
  }
  return out;
}

/// Orders vertices by the first bag containing them, ties by id. The result
/// has matching width at most width(pd) + 1.
inline Ordering ordering_from_path_decomposition(const Graph& g,
                                                 const PathDecomposition& pd) {
  const DecompositionVerdict verdict = validate_decomposition(g, pd);
  if (!verdict.valid) throw ValidationError("path decomposition: " + verdict.describe());
  const std::size_t n = g.num_vertices();
  std::vector<std::size_t> first(n, pd.bags.size());
  for (std::size_t i = 0; i < pd.bags.size(); ++i) {
    for (Vertex v : pd.bags[i]) first[v] = std::min(first[v], i);
  }
  std::vector<Vertex> seq(n);
  std::iota(seq.begin(), seq.end(), Vertex{0});
  std::stable_sort(seq.begin(), seq.end(),
                   [&](Vertex a, Vertex b) { return first[a] < first[b]; });
  return Ordering(std::move(seq));
}

/// Path decomposition from settled vertex covers along `sv`:
/// B_1 = VC_1 + v_1, B_i = VC_{i-1} + VC_i + v_i, B_n = VC_{n-1} + v_n.
/// Bag i belongs to position i of `sv`; width is at most 2 mw_of_ordering.
inline PathDecomposition path_decomposition_from_ordering(const Graph& g,
                                                          const Ordering& sv) {
  require_ordering_of(g, sv);
  const std::size_t n = g.num_vertices();
  PathDecomposition pd;
  if (n == 0) return pd;
  if (n == 1) {
    pd.bags.push_back({sv[0]});
    return pd;
  }
  const SettledChain chain = settled_vertex_covers(g, sv);
  for (std::size_t i = 0; i < n; ++i) {
    VertexSet bag{sv[i]};
    if (i > 0) bag = set_union(bag, chain.covers[i - 1].verts);
    if (i + 1 < n) bag = set_union(bag, chain.covers[i].verts);
    pd.bags.push_back(std::move(bag));
  }
  return pd;
}

/// Standard decomposition of a layout: bag i holds v_i and every earlier
/// vertex with a neighbour at position i or later. Its width equals the
/// vertex separation of the layout.
inline PathDecomposition path_decomposition_from_layout(const Graph& g,
                                                        const Ordering& sv) {
  require_ordering_of(g, sv);
  const std::size_t n = g.num_vertices();
  std::vector<std::size_t> last(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    last[i] = i;
    for (Vertex w : g.neighbors(sv[i])) last[i] = std::max(last[i], sv.position(w));
  }
  PathDecomposition pd;
  for (std::size_t i = 0; i < n; ++i) {
    VertexSet bag{sv[i]};
    for (std::size_t j = 0; j < i; ++j) {
      if (last[j] >= i) bag.push_back(sv[j]);
    }
    pd.bags.push_back(make_vertex_set(std::move(bag)));
  }
  return pd;
}

/// A minimum-width path decomposition, from the pathwidth witness layout.
inline PathDecomposition optimal_path_decomposition(const Graph& g,
                                                    std::size_t cap = kDefaultSubsetCap) {
  const WidthReport pw = pathwidth_exact(g, cap);
  PathDecomposition pd = path_decomposition_from_layout(g, *pw.witness_ordering);
  if (g.num_vertices() > 0 && pd.width() != long(pw.value)) {
    throw InvariantViolation("layout decomposition width differs from pathwidth");
  }
  return pd;
}

}  // namespace mwidth
