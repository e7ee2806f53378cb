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
#include <string>
#include <vector>

#include "mwidth/errors.hpp"
#include "mwidth/graph.hpp"

namespace mwidth {

/// An edge of a cut graph, oriented from the left side to the right side.
struct CrossEdge {
  Vertex left = 0;
  Vertex right = 0;

  friend bool operator==(const CrossEdge&, const CrossEdge&) = default;
  friend auto operator<=>(const CrossEdge&, const CrossEdge&) = default;
};

/// Bipartite graph of the edges crossing a two-sided vertex partition.
///
/// Vertices keep the ids of the host graph. Vertices that were removed with
/// `without` belong to neither side.
class CutGraph {
 public:
  enum class Side : std::uint8_t { kLeft, kRight, kRemoved };

  CutGraph() = default;

  /// Cut of `g` between `left` and its complement.
  CutGraph(const Graph& g, const VertexSet& left)
      : side_(g.num_vertices(), Side::kRight) {
    for (Vertex v : left) side_.at(v) = Side::kLeft;
    for (const Edge& e : g.edges()) {
      if (side_[e.first] == side_[e.second]) continue;
      if (side_[e.first] == Side::kLeft) {
        edges_.push_back({e.first, e.second});
      } else {
        edges_.push_back({e.second, e.first});
      }
    }
    finish();
  }

  /// Bipartite graph given directly by its sides and edges. Used for
  /// hand-built instances; every edge must go from `left` to `right`.
  static CutGraph from_edges(std::size_t n, const VertexSet& left,
                             const VertexSet& right,
                             std::vector<CrossEdge> edges) {
    CutGraph c;
    c.side_.assign(n, Side::kRemoved);
    for (Vertex v : left) c.side_.at(v) = Side::kLeft;
    for (Vertex v : right) {
      if (c.side_.at(v) == Side::kLeft) {
        throw MalformedInput("vertex " + std::to_string(v) + " on both sides");
      }
      c.side_[v] = Side::kRight;
    }
    for (const CrossEdge& e : edges) {
      if (c.side_.at(e.left) != Side::kLeft ||
          c.side_.at(e.right) != Side::kRight) {
        throw MalformedInput("edge does not cross the partition");
      }
    }
    c.edges_ = std::move(edges);
    c.finish();
    return c;
  }

  std::size_t host_size() const noexcept { return side_.size(); }
  Side side(Vertex v) const { return side_.at(v); }
  bool is_left(Vertex v) const { return side(v) == Side::kLeft; }
  bool is_right(Vertex v) const { return side(v) == Side::kRight; }

  VertexSet left() const { return collect(Side::kLeft); }
  VertexSet right() const { return collect(Side::kRight); }

  /// Sorted by (left, right).
  const std::vector<CrossEdge>& edges() const noexcept { return edges_; }

  /// Right-side neighbours of a left vertex, ascending.
  const std::vector<Vertex>& right_neighbors(Vertex v) const {
    return adj_.at(v);
  }
  /// Left-side neighbours of a right vertex, ascending.
  const std::vector<Vertex>& left_neighbors(Vertex v) const {
    return adj_.at(v);
  }

  bool has_edge(Vertex l, Vertex r) const {
    const auto& a = adj_.at(l);
    return is_left(l) && std::binary_search(a.begin(), a.end(), r);
  }

  /// This graph with the vertices of `x` and their edges deleted.
  CutGraph without(const VertexSet& x) const {
    CutGraph c;
    c.side_ = side_;
    for (Vertex v : x) c.side_.at(v) = Side::kRemoved;
    for (const CrossEdge& e : edges_) {
      if (c.side_[e.left] != Side::kRemoved &&
          c.side_[e.right] != Side::kRemoved) {
        c.edges_.push_back(e);
      }
    }
    c.finish();
    return c;
  }

 private:
  void finish() {
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    adj_.assign(side_.size(), {});
    for (const CrossEdge& e : edges_) {
      adj_[e.left].push_back(e.right);
      adj_[e.right].push_back(e.left);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
  }

  VertexSet collect(Side s) const {
    VertexSet out;
    for (std::size_t v = 0; v < side_.size(); ++v) {
      if (side_[v] == s) out.push_back(Vertex(v));
    }
    return out;
  }

  std::vector<Side> side_;
  std::vector<CrossEdge> edges_;
  std::vector<std::vector<Vertex>> adj_;
};

struct Matching {
  /// Sorted by left endpoint.
  std::vector<CrossEdge> pairs;

  std::size_t size() const noexcept { return pairs.size(); }
};

struct VertexCover {
  VertexSet verts;

  std::size_t size() const noexcept { return verts.size(); }
};

/// The cut between the first `i` vertices of `sv` and the rest, 1 <= i < n.
inline CutGraph cut_graph(const Graph& g, const Ordering& sv, std::size_t i) {
  require_ordering_of(g, sv);
  const std::size_t n = g.num_vertices();
  if (i < 1 || i >= n) {
    throw RangeError("prefix length " + std::to_string(i) +
                     " outside 1.." + std::to_string(n == 0 ? 0 : n - 1));
  }
  return CutGraph(g, sv.prefix(i));
}

/// Maximum matching of a cut graph by augmenting paths (Kuhn).
///
/// Left vertices are processed in ascending id order and every search tries
/// neighbours in ascending order, so the result is a function of the input.
inline Matching max_bipartite_matching(const CutGraph& c) {
  constexpr Vertex kNone = ~Vertex{0};
  const std::size_t n = c.host_size();
  std::vector<Vertex> mate(n, kNone);
  std::vector<char> seen(n, 0);

  auto augment = [&](auto&& self, Vertex l) -> bool {
    for (Vertex r : c.right_neighbors(l)) {
      if (seen[r]) continue;
      seen[r] = 1;
      if (mate[r] == kNone || self(self, mate[r])) {
        mate[r] = l;
        mate[l] = r;
        return true;
      }
    }
    return false;
  };

  for (Vertex l : c.left()) {
    if (c.right_neighbors(l).empty()) continue;
    std::fill(seen.begin(), seen.end(), 0);
    augment(augment, l);
  }

  Matching m;
  for (Vertex l : c.left()) {
    if (mate[l] != kNone) m.pairs.push_back({l, mate[l]});
  }
  return m;
}

/// Minimum vertex cover from a maximum matching (König's construction).
///
/// Z is the set of vertices reachable from unmatched left vertices by
/// alternating paths; the cover is (L \ Z) + (R n Z). Throws
/// InvariantViolation if `m` is not a maximum matching of `c`.
inline VertexCover min_vertex_cover_bipartite(const CutGraph& c,
                                              const Matching& m) {
  constexpr Vertex kNone = ~Vertex{0};
  const std::size_t n = c.host_size();
  std::vector<Vertex> mate(n, kNone);
  for (const CrossEdge& p : m.pairs) {
    if (!c.has_edge(p.left, p.right)) {
      throw InvariantViolation("matching pair is not an edge of the cut");
    }
    if (mate[p.left] != kNone || mate[p.right] != kNone) {
      throw InvariantViolation("matching pairs share a vertex");
    }
    mate[p.left] = p.right;
    mate[p.right] = p.left;
  }

  std::vector<char> reached(n, 0);
  std::vector<Vertex> stack;
  for (Vertex l : c.left()) {
    if (mate[l] == kNone) {
      reached[l] = 1;
      stack.push_back(l);
    }
  }
  while (!stack.empty()) {
    Vertex l = stack.back();
    stack.pop_back();
    for (Vertex r : c.right_neighbors(l)) {
      if (reached[r] || mate[l] == r) continue;
      reached[r] = 1;
      Vertex next = mate[r];
      if (next != kNone && !reached[next]) {
        reached[next] = 1;
        stack.push_back(next);
      }
    }
  }

  VertexCover cover;
  for (std::size_t v = 0; v < n; ++v) {
    bool in = (c.is_left(Vertex(v)) && !reached[v]) ||
              (c.is_right(Vertex(v)) && reached[v]);
    if (in) cover.verts.push_back(Vertex(v));
  }
  if (cover.size() != m.size()) {
    throw InvariantViolation("cover of size " + std::to_string(cover.size()) +
                             " from matching of size " +
                             std::to_string(m.size()) +
                             ": matching is not maximum");
  }
  return cover;
}

/// Minimum vertex cover size, via matching.
inline std::size_t min_vertex_cover_size(const CutGraph& c) {
  return max_bipartite_matching(c).size();
}

inline bool is_vertex_cover(const CutGraph& c, const VertexSet& verts) {
  for (const CrossEdge& e : c.edges()) {
    if (!contains(verts, e.left) && !contains(verts, e.right)) return false;
  }
  return true;
}

}  // namespace mwidth
