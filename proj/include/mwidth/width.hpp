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
#include <optional>
#include <vector>

#include "mwidth/errors.hpp"
#include "mwidth/graph.hpp"
#include "mwidth/matching.hpp"

namespace mwidth {

inline constexpr std::size_t kDefaultSubsetCap = 20;
/// Absolute ceiling for the subset DPs: two bytes per subset.
inline constexpr std::size_t kMaxSubsetCap = 30;

struct WidthReport {
  std::size_t value = 0;
  /// Set by the graph-level minimisations.
  std::optional<Ordering> witness_ordering;
  /// Prefix length attaining `value` (smallest on ties); 0 if no prefix.
  std::size_t witness_prefix = 0;
};

/// Largest maximum-matching size over the cuts at prefixes 1..n-1 of `sv`.
inline WidthReport mw_of_ordering(const Graph& g, const Ordering& sv) {
  require_ordering_of(g, sv);
  WidthReport report;
  const std::size_t n = g.num_vertices();
  for (std::size_t i = 1; i < n; ++i) {
    std::size_t nu = max_bipartite_matching(cut_graph(g, sv, i)).size();
    if (report.witness_prefix == 0 || nu > report.value) {
      report.value = nu;
      report.witness_prefix = i;
    }
  }
  return report;
}

/// Largest number of prefix vertices with a neighbour outside the prefix,
/// over prefixes 1..n-1 of `sv` (vertex separation of the layout).
inline WidthReport vertex_separation_of_ordering(const Graph& g,
                                                 const Ordering& sv) {
  require_ordering_of(g, sv);
  WidthReport report;
  const std::size_t n = g.num_vertices();
  for (std::size_t i = 1; i < n; ++i) {
    std::size_t cost = 0;
    for (std::size_t j = 0; j < i; ++j) {
      for (Vertex w : g.neighbors(sv[j])) {
        if (sv.position(w) >= i) {
          ++cost;
          break;
        }
      }
    }
    if (report.witness_prefix == 0 || cost > report.value) {
      report.value = cost;
      report.witness_prefix = i;
    }
  }
  return report;
}

namespace detail {

using Mask = std::uint64_t;

inline std::vector<Mask> adjacency_masks(const Graph& g) {
  std::vector<Mask> adj(g.num_vertices(), 0);
  for (const Edge& e : g.edges()) {
    adj[e.first] |= Mask{1} << e.second;
    adj[e.second] |= Mask{1} << e.first;
  }
  return adj;
}

/// Maximum matching size between `left` and its complement.
inline std::uint8_t cut_matching_size(const std::vector<Mask>& adj, Mask left,
                                      Mask all) {
  const std::size_t n = adj.size();
  const Mask right = all & ~left;
  int mate[64];
  for (std::size_t v = 0; v < n; ++v) mate[v] = -1;
  Mask seen = 0;

  auto augment = [&](auto&& self, int l) -> bool {
    Mask cand = adj[l] & right & ~seen;
    while (cand) {
      int r = __builtin_ctzll(cand);
      cand &= cand - 1;
      if (seen >> r & 1) continue;
      seen |= Mask{1} << r;
      if (mate[r] < 0 || self(self, mate[r])) {
        mate[r] = l;
        return true;
      }
    }
    return false;
  };

  std::uint8_t size = 0;
  for (Mask rest = left; rest; rest &= rest - 1) {
    int l = __builtin_ctzll(rest);
    if (!(adj[l] & right)) continue;
    seen = 0;
    if (augment(augment, l)) ++size;
  }
  return size;
}

inline void check_cap(const Graph& g, std::size_t cap) {
  if (cap > kMaxSubsetCap) {
    throw ParameterError("subset cap " + std::to_string(cap) +
                         " above the supported maximum " +
                         std::to_string(kMaxSubsetCap));
  }
  if (g.num_vertices() > cap) {
    throw CapacityError("subset DP over vertices", g.num_vertices(), cap);
  }
}

/// min over orderings of max over prefix sets S of cost[S], where cost is
/// indexed by the prefix set. Returns the optimum and the lexicographically
/// smallest ordering attaining it.
inline std::pair<std::size_t, Ordering> min_max_layout(
    std::size_t n, const std::vector<std::uint8_t>& cost) {
  const Mask all = (Mask{1} << n) - 1;
  // best_rest[S]: optimal max cost over the prefixes strictly after S.
  std::vector<std::uint8_t> best_rest(std::size_t{1} << n, 0);
  for (Mask s = all; s-- > 0;) {
    std::uint8_t best = 0xFF;
    for (Mask free = all & ~s; free; free &= free - 1) {
      Mask next = s | (free & -free);
      std::uint8_t c = std::max(cost[next], best_rest[next]);
      if (c < best) best = c;
    }
    best_rest[s] = best;
  }
  const std::uint8_t value = n == 0 ? 0 : std::max(cost[0], best_rest[0]);

  std::vector<Vertex> seq;
  seq.reserve(n);
  Mask s = 0;
  while (s != all) {
    for (std::size_t v = 0; v < n; ++v) {
      Mask next = s | (Mask{1} << v);
      if (next == s) continue;
      if (cost[next] <= value && best_rest[next] <= value) {
        seq.push_back(Vertex(v));
        s = next;
        break;
      }
    }
  }
  return {value, Ordering(std::move(seq))};
}

}  // namespace detail

/// Matching width of `g`: the minimum of mw_of_ordering over all orderings.
///
/// The maximum matching of a cut depends only on the prefix set, so the
/// minimisation runs as a DP over vertex subsets. Limited to `cap` vertices.
/// The witness is the lexicographically smallest optimal ordering.
inline WidthReport matching_width_exact(const Graph& g,
                                        std::size_t cap = kDefaultSubsetCap) {
  detail::check_cap(g, cap);
  const std::size_t n = g.num_vertices();
  const auto adj = detail::adjacency_masks(g);
  const detail::Mask all = (detail::Mask{1} << n) - 1;
  std::vector<std::uint8_t> nu(std::size_t{1} << n);
  for (detail::Mask s = 0; s <= all; ++s) {
    nu[s] = detail::cut_matching_size(adj, s, all);
  }
  auto [value, order] = detail::min_max_layout(n, nu);
  WidthReport report = mw_of_ordering(g, order);
  if (report.value != value) {
    throw InvariantViolation("matching width witness does not reproduce value");
  }
  report.witness_ordering = std::move(order);
  return report;
}

/// Pathwidth of `g`, computed as its vertex separation number by a DP over
/// vertex subsets. The cost of a prefix set S is the number of vertices of S
/// with a neighbour outside S. Limited to `cap` vertices.
inline WidthReport pathwidth_exact(const Graph& g,
                                   std::size_t cap = kDefaultSubsetCap) {
  detail::check_cap(g, cap);
  const std::size_t n = g.num_vertices();
  const auto adj = detail::adjacency_masks(g);
  const detail::Mask all = (detail::Mask{1} << n) - 1;
  std::vector<std::uint8_t> boundary(std::size_t{1} << n);
  for (detail::Mask s = 0; s <= all; ++s) {
    std::uint8_t count = 0;
    for (detail::Mask rest = s; rest; rest &= rest - 1) {
      if (adj[__builtin_ctzll(rest)] & ~s & all) ++count;
    }
    boundary[s] = count;
  }
  auto [value, order] = detail::min_max_layout(n, boundary);
  WidthReport report = vertex_separation_of_ordering(g, order);
  if (report.value != value) {
    throw InvariantViolation("pathwidth witness does not reproduce value");
  }
  report.witness_ordering = std::move(order);
  return report;
}

struct ConstrainedCover {
  VertexCover cover;
  /// True iff `cover` is a minimum vertex cover of the whole cut.
  bool minimum = false;
};

/// X together with a minimum vertex cover of `c` with X deleted.
///
/// When X lies inside some minimum cover of `c` the result is a minimum
/// cover containing X; otherwise it is larger and `minimum` is false.
inline ConstrainedCover min_vc_containing(const CutGraph& c,
                                          const VertexSet& x) {
  for (Vertex v : x) {
    if (v >= c.host_size() || c.side(v) == CutGraph::Side::kRemoved) {
      throw PreconditionError("vertex " + std::to_string(v) +
                              " is not a vertex of the cut");
    }
  }
  const CutGraph rest = c.without(x);
  const VertexCover rest_cover =
      min_vertex_cover_bipartite(rest, max_bipartite_matching(rest));
  ConstrainedCover out;
  out.cover.verts = set_union(x, rest_cover.verts);
  out.minimum = out.cover.size() == min_vertex_cover_size(c);
  return out;
}

/// Minimum vertex covers VC_1..VC_{n-1} of the prefix cuts of an ordering.
/// `covers[i - 1]` is VC_i.
struct SettledChain {
  std::vector<VertexCover> covers;
};

/// Settled minimum vertex covers along `sv`: each VC_{i+1} contains the
/// part of VC_i that lies outside the first i+1 vertices.
///
/// VC_1 is the König cover of the first cut; every later cover is the
/// constrained cover of the next cut. Throws InvariantViolation if a
/// constrained cover is not minimum.
inline SettledChain settled_vertex_covers(const Graph& g, const Ordering& sv) {
  require_ordering_of(g, sv);
  SettledChain chain;
  const std::size_t n = g.num_vertices();
  if (n < 2) return chain;

  const CutGraph first = cut_graph(g, sv, 1);
  chain.covers.push_back(
      min_vertex_cover_bipartite(first, max_bipartite_matching(first)));

  for (std::size_t i = 1; i + 1 < n; ++i) {
    const VertexSet outside_next = set_difference(
        make_vertex_set(sv.sequence()), sv.prefix(i + 1));
    const VertexSet carried =
        set_intersection(chain.covers.back().verts, outside_next);
    ConstrainedCover next = min_vc_containing(cut_graph(g, sv, i + 1), carried);
    if (!next.minimum) {
      throw InvariantViolation("no minimum cover of cut " +
                               std::to_string(i + 1) +
                               " extends the carried vertices");
    }
    chain.covers.push_back(std::move(next.cover));
  }
  return chain;
}

}  // namespace mwidth
