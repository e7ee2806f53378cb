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
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "mwidth/errors.hpp"

namespace mwidth {

using Vertex = std::uint32_t;

/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;

/// Unordered edge stored with `first < second`.
struct Edge {
  Vertex first = 0;
  Vertex second = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : first(std::min(a, b)), second(std::max(a, b)) {}

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline VertexSet make_vertex_set(std::vector<Vertex> vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

inline bool contains(const VertexSet& s, Vertex v) {
  return std::binary_search(s.begin(), s.end(), v);
}

inline VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

inline VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

inline VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

inline bool is_subset(const VertexSet& sub, const VertexSet& super) {
  return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

/// Simple undirected graph on vertices 0..n-1.
///
/// Self-loops, duplicate edges and out-of-range endpoints are rejected on
/// insertion. Edges are kept sorted, so two graphs built from the same edge
/// set compare equal regardless of insertion order.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : adj_(n) {}

  Graph(std::size_t n, std::span<const Edge> edges) : adj_(n) {
    for (const Edge& e : edges) add_edge(e.first, e.second);
  }

  Graph(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> edges)
      : adj_(n) {
    for (auto [u, v] : edges) add_edge(u, v);
  }

  std::size_t num_vertices() const noexcept { return adj_.size(); }
  std::size_t num_edges() const noexcept { return edges_.size(); }

  /// Edges in lexicographic order of (min endpoint, max endpoint).
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  /// Neighbours in ascending id order.
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_.at(v); }

  bool has_edge(Vertex u, Vertex v) const {
    if (u >= adj_.size() || v >= adj_.size()) return false;
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
  }

  void add_edge(Vertex u, Vertex v) {
    if (u >= adj_.size() || v >= adj_.size()) {
      throw RangeError("edge {" + std::to_string(u) + "," + std::to_string(v) +
                       "} has an endpoint outside 0.." +
                       std::to_string(adj_.size()));
    }
    if (u == v) throw MalformedInput("self-loop at vertex " + std::to_string(u));
    if (has_edge(u, v)) {
      throw MalformedInput("duplicate edge {" + std::to_string(u) + "," +
                           std::to_string(v) + "}");
    }
    insert_sorted(adj_[u], v);
    insert_sorted(adj_[v], u);
    Edge e(u, v);
    edges_.insert(std::upper_bound(edges_.begin(), edges_.end(), e), e);
  }

  /// Subgraph induced on `keep`, relabelled to 0..|keep|-1 in ascending order.
  Graph induced_subgraph(const VertexSet& keep) const {
    std::vector<Vertex> index(adj_.size(), kAbsent);
    for (std::size_t i = 0; i < keep.size(); ++i) index.at(keep[i]) = Vertex(i);
    Graph sub(keep.size());
    for (const Edge& e : edges_) {
      if (index[e.first] != kAbsent && index[e.second] != kAbsent) {
        sub.add_edge(index[e.first], index[e.second]);
      }
    }
    return sub;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adj_.size() == b.adj_.size() && a.edges_ == b.edges_;
  }

 private:
  static constexpr Vertex kAbsent = ~Vertex{0};

  static void insert_sorted(std::vector<Vertex>& v, Vertex x) {
    v.insert(std::upper_bound(v.begin(), v.end(), x), x);
  }

  std::vector<std::vector<Vertex>> adj_;
  std::vector<Edge> edges_;
};

/// A permutation of a graph's vertices.
class Ordering {
 public:
  Ordering() = default;

  explicit Ordering(std::vector<Vertex> seq) : seq_(std::move(seq)) {
    pos_.assign(seq_.size(), kUnset);
    for (std::size_t i = 0; i < seq_.size(); ++i) {
      Vertex v = seq_[i];
      if (v >= seq_.size() || pos_[v] != kUnset) {
        throw MalformedInput("ordering is not a permutation of 0.." +
                             std::to_string(seq_.size()));
      }
      pos_[v] = i;
    }
  }

  static Ordering identity(std::size_t n) {
    std::vector<Vertex> seq(n);
    for (std::size_t i = 0; i < n; ++i) seq[i] = Vertex(i);
    return Ordering(std::move(seq));
  }

  std::size_t size() const noexcept { return seq_.size(); }
  const std::vector<Vertex>& sequence() const noexcept { return seq_; }
  Vertex operator[](std::size_t i) const { return seq_.at(i); }
  std::size_t position(Vertex v) const { return pos_.at(v); }

  /// The first `i` vertices, as a sorted set.
  VertexSet prefix(std::size_t i) const {
    return make_vertex_set({seq_.begin(), seq_.begin() + std::ptrdiff_t(i)});
  }

  friend bool operator==(const Ordering& a, const Ordering& b) {
    return a.seq_ == b.seq_;
  }
  friend bool operator<(const Ordering& a, const Ordering& b) {
    return a.seq_ < b.seq_;
  }

 private:
  static constexpr std::size_t kUnset = ~std::size_t{0};
  std::vector<Vertex> seq_;
  std::vector<std::size_t> pos_;
};

inline void require_ordering_of(const Graph& g, const Ordering& sv) {
  if (sv.size() != g.num_vertices()) {
    throw MalformedInput("ordering has " + std::to_string(sv.size()) +
                         " vertices, graph has " +
                         std::to_string(g.num_vertices()));
  }
}

}  // namespace mwidth
