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

#include <cstdint>
#include <random>
#include <string>
#include <string_view>

#include "mwidth/errors.hpp"
#include "mwidth/graph.hpp"

namespace mwidth {

inline constexpr std::size_t kMaxTreeHeight = 24;

/// Parent of a non-root node of a complete binary tree in heap numbering.
inline Vertex tree_parent(Vertex node) { return (node - 1) / 2; }

inline std::size_t tree_node_count(std::size_t r) {
  return (std::size_t{1} << (r + 1)) - 1;
}

/// Complete binary tree of height r in heap numbering: node 0 is the root,
/// node a has children 2a+1 and 2a+2.
inline Graph complete_binary_tree(std::size_t r) {
  if (r > kMaxTreeHeight) {
    throw ParameterError("tree height " + std::to_string(r) + " above " +
                         std::to_string(kMaxTreeHeight));
  }
  const std::size_t nodes = tree_node_count(r);
  Graph t(nodes);
  for (std::size_t a = 1; a < nodes; ++a) t.add_edge(tree_parent(Vertex(a)), Vertex(a));
  return t;
}

/// Vertex j (0 <= j < k) of the clique that replaces tree node `node`.
inline Vertex ct_vertex(Vertex node, std::size_t j, std::size_t k) {
  return Vertex(node * k + j);
}

/// The complete binary tree of height r with every node blown up into a
/// k-clique, and the cliques of adjacent nodes completely joined.
inline Graph ct_graph(std::size_t r, std::size_t k) {
  if (k < 1) throw ParameterError("clique size must be at least 1");
  const Graph tree = complete_binary_tree(r);
  Graph g(tree.num_vertices() * k);
  for (std::size_t a = 0; a < tree.num_vertices(); ++a) {
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) {
        g.add_edge(ct_vertex(Vertex(a), i, k), ct_vertex(Vertex(a), j, k));
      }
    }
  }
  for (const Edge& e : tree.edges()) {
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        g.add_edge(ct_vertex(e.first, i, k), ct_vertex(e.second, j, k));
      }
    }
  }
  return g;
}

inline Graph path_graph(std::size_t n) {
  Graph g(n);
  for (std::size_t v = 1; v < n; ++v) g.add_edge(Vertex(v - 1), Vertex(v));
  return g;
}

inline Graph cycle_graph(std::size_t n) {
  if (n < 3) throw ParameterError("a cycle needs at least 3 vertices");
  Graph g = path_graph(n);
  g.add_edge(Vertex(n - 1), 0);
  return g;
}

inline Graph complete_graph(std::size_t n) {
  Graph g(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) g.add_edge(Vertex(u), Vertex(v));
  }
  return g;
}

/// rows x cols grid; vertex (i, j) has id i * cols + j.
inline Graph grid_graph(std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0) throw ParameterError("grid sides must be positive");
  Graph g(rows * cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      Vertex v = Vertex(i * cols + j);
      if (j + 1 < cols) g.add_edge(v, v + 1);
      if (i + 1 < rows) g.add_edge(v, Vertex(v + cols));
    }
  }
  return g;
}

/// m disjoint edges {2i, 2i+1}.
inline Graph disjoint_edges(std::size_t m) {
  Graph g(2 * m);
  for (std::size_t i = 0; i < m; ++i) g.add_edge(Vertex(2 * i), Vertex(2 * i + 1));
  return g;
}

/// G(n, p). Pairs are visited in lexicographic order and each draws one
/// 53-bit uniform from mt19937_64, so the graph depends only on (n, p, seed).
inline Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw ParameterError("edge probability must lie in [0, 1]");
  }
  std::mt19937_64 rng(seed);
  Graph g(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      double x = double(rng() >> 11) * 0x1.0p-53;
      if (x < p) g.add_edge(Vertex(u), Vertex(v));
    }
  }
  return g;
}

enum class GraphKind { kPath, kCycle, kGrid, kComplete, kEmpty, kRandom, kTree, kCt, kMatching };

inline GraphKind parse_graph_kind(std::string_view name) {
  if (name == "path") return GraphKind::kPath;
  if (name == "cycle") return GraphKind::kCycle;
  if (name == "grid") return GraphKind::kGrid;
  if (name == "complete") return GraphKind::kComplete;
  if (name == "empty") return GraphKind::kEmpty;
  if (name == "random") return GraphKind::kRandom;
  if (name == "tree") return GraphKind::kTree;
  if (name == "ct") return GraphKind::kCt;
  if (name == "matching") return GraphKind::kMatching;
  throw ParameterError("unknown graph kind '" + std::string(name) + "'");
}

struct GraphParams {
  std::size_t n = 0;
  std::size_t rows = 0;
  std::size_t cols = 0;
  double p = 0.5;
  std::size_t r = 0;
  std::size_t k = 1;
};

/// Named graph families used by the tests and the CLI. `n` is the vertex
/// count for path, cycle, complete, empty and random, and the edge count
/// for matching.
inline Graph generate_graph(GraphKind kind, const GraphParams& params,
                            std::uint64_t seed = 0) {
  switch (kind) {
    case GraphKind::kPath: return path_graph(params.n);
    case GraphKind::kCycle: return cycle_graph(params.n);
    case GraphKind::kGrid: return grid_graph(params.rows, params.cols);
    case GraphKind::kComplete: return complete_graph(params.n);
    case GraphKind::kEmpty: return Graph(params.n);
    case GraphKind::kRandom: return random_graph(params.n, params.p, seed);
    case GraphKind::kTree: return complete_binary_tree(params.r);
    case GraphKind::kCt: return ct_graph(params.r, params.k);
    case GraphKind::kMatching: return disjoint_edges(params.n);
  }
  throw ParameterError("unhandled graph kind");
}

}  // namespace mwidth
