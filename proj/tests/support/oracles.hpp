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

// Deliberately naive reference implementations. They share no code with
// the library beyond the graph and CNF containers.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <set>
#include <vector>

#include "mwidth/cnf.hpp"
#include "mwidth/graph.hpp"

namespace mwidth::oracle {

/// Edges of g with exactly one end in `left` (a bitmask of vertices).
inline std::vector<Edge> crossing_edges(const Graph& g, std::uint64_t left) {
  std::vector<Edge> out;
  for (const Edge& e : g.edges()) {
    if (((left >> e.first) & 1) != ((left >> e.second) & 1)) out.push_back(e);
  }
  return out;
}

/// Maximum matching by exhaustive include/exclude search over edges.
inline std::size_t max_matching_size(const std::vector<Edge>& edges) {
  std::size_t best = 0;
  auto go = [&](auto&& self, std::size_t i, std::uint64_t used, std::size_t size) -> void {
    if (size + (edges.size() - i) <= best) return;
    if (i == edges.size()) {
      best = std::max(best, size);
      return;
    }
    const Edge& e = edges[i];
    const std::uint64_t both = (std::uint64_t{1} << e.first) | (std::uint64_t{1} << e.second);
    if ((used & both) == 0) self(self, i + 1, used | both, size + 1);
    self(self, i + 1, used, size);
  };
  go(go, 0, 0, 0);
  return best;
}

/// Minimum vertex cover of an edge list over n vertices, by subset scan.
inline std::size_t min_cover_size(const std::vector<Edge>& edges, std::size_t n) {
  std::size_t best = n;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    const auto size = std::size_t(__builtin_popcountll(s));
    if (size >= best) continue;
    bool covers = true;
    for (const Edge& e : edges) {
      if (!((s >> e.first) & 1) && !((s >> e.second) & 1)) {
        covers = false;
        break;
      }
    }
    if (covers) best = size;
  }
  return best;
}

inline bool covers_all(const std::vector<Edge>& edges, const VertexSet& cover) {
  for (const Edge& e : edges) {
    if (!std::binary_search(cover.begin(), cover.end(), e.first) &&
        !std::binary_search(cover.begin(), cover.end(), e.second)) {
      return false;
    }
  }
  return true;
}

inline std::uint64_t mask_of(const std::vector<Vertex>& vs) {
  std::uint64_t m = 0;
  for (Vertex v : vs) m |= std::uint64_t{1} << v;
  return m;
}

/// Matching width of one ordering via the exhaustive matching.
inline std::size_t ordering_mw(const Graph& g, const std::vector<Vertex>& seq) {
  std::size_t worst = 0;
  std::uint64_t left = 0;
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    left |= std::uint64_t{1} << seq[i];
    worst = std::max(worst, max_matching_size(crossing_edges(g, left)));
  }
  return worst;
}

/// Vertex separation of one ordering.
inline std::size_t ordering_vs(const Graph& g, const std::vector<Vertex>& seq) {
  std::size_t worst = 0;
  std::uint64_t left = 0;
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    left |= std::uint64_t{1} << seq[i];
    std::uint64_t boundary = 0;
    for (const Edge& e : crossing_edges(g, left)) {
      boundary |= std::uint64_t{1} << (((left >> e.first) & 1) ? e.first : e.second);
    }
    worst = std::max<std::size_t>(worst, std::size_t(__builtin_popcountll(boundary)));
  }
  return worst;
}

template <class Cost>
std::size_t min_over_permutations(std::size_t n, Cost cost) {
  std::vector<Vertex> seq(n);
  std::iota(seq.begin(), seq.end(), Vertex{0});
  std::size_t best = std::numeric_limits<std::size_t>::max();
  do {
    best = std::min(best, cost(seq));
  } while (std::next_permutation(seq.begin(), seq.end()));
  return n == 0 ? 0 : best;
}

inline std::size_t matching_width(const Graph& g) {
  return min_over_permutations(g.num_vertices(),
                               [&](const std::vector<Vertex>& s) { return ordering_mw(g, s); });
}

inline std::size_t vertex_separation(const Graph& g) {
  return min_over_permutations(g.num_vertices(),
                               [&](const std::vector<Vertex>& s) { return ordering_vs(g, s); });
}

/// Pathwidth as the least (max point load - 1) over interval models: each
/// vertex gets an interval of {0..n-1} and adjacent intervals must meet.
inline long interval_pathwidth(const Graph& g) {
  const std::size_t n = g.num_vertices();
  if (n == 0) return -1;
  std::vector<std::pair<std::size_t, std::size_t>> intervals;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) intervals.emplace_back(a, b);
  }
  std::vector<std::size_t> pick(n, 0);
  long best = long(n) - 1;
  auto go = [&](auto&& self, std::size_t v) -> void {
    if (v == n) {
      long load = 0;
      for (std::size_t x = 0; x < n; ++x) {
        long here = 0;
        for (std::size_t u = 0; u < n; ++u) {
          const auto [a, b] = intervals[pick[u]];
          if (a <= x && x <= b) ++here;
        }
        load = std::max(load, here);
      }
      best = std::min(best, load - 1);
      return;
    }
    for (std::size_t i = 0; i < intervals.size(); ++i) {
      pick[v] = i;
      bool ok = true;
      for (Vertex w : g.neighbors(Vertex(v))) {
        if (w >= v) continue;
        const auto [a, b] = intervals[i];
        const auto [c, d] = intervals[pick[w]];
        if (b < c || d < a) {
          ok = false;
          break;
        }
      }
      if (ok) self(self, v + 1);
    }
  };
  go(go, 0);
  return best;
}

/// Fewest contiguous blocks, each reading variables at strictly increasing
/// positions of `position`, that a label sequence splits into.
inline std::size_t min_ordered_blocks(const std::vector<Var>& vars,
                                      const std::vector<std::size_t>& position) {
  const std::size_t len = vars.size();
  std::vector<std::size_t> best(len + 1, std::numeric_limits<std::size_t>::max());
  best[0] = 0;
  for (std::size_t end = 1; end <= len; ++end) {
    for (std::size_t start = 0; start < end; ++start) {
      bool increasing = true;
      for (std::size_t i = start + 1; i < end; ++i) {
        if (position[vars[i]] <= position[vars[i - 1]]) increasing = false;
      }
      if (increasing && best[start] != std::numeric_limits<std::size_t>::max()) {
        best[end] = std::min(best[end], best[start] + 1);
      }
    }
  }
  return best[len];
}

/// Reduced OBDD size (decision nodes + 2 terminals) of f under `order`,
/// counted as distinct residual functions per level that depend on the
/// level's variable. Residuals are evaluated by clause scan.
inline std::size_t obdd_size(const Cnf& f, const std::vector<Var>& order) {
  const std::size_t m = f.num_vars();
  std::size_t decision = 0;
  Assignment s(m, false);
  for (std::size_t level = 0; level < m; ++level) {
    const std::size_t rest = m - level;
    std::set<std::vector<bool>> seen;
    for (std::uint64_t head = 0; head < (std::uint64_t{1} << level); ++head) {
      for (std::size_t i = 0; i < level; ++i) s[order[i]] = (head >> i) & 1;
      std::vector<bool> residual(std::size_t{1} << rest);
      for (std::uint64_t tail = 0; tail < residual.size(); ++tail) {
        for (std::size_t i = 0; i < rest; ++i) s[order[level + i]] = (tail >> i) & 1;
        residual[tail] = f.satisfied_by(s);
      }
      bool depends = false;
      for (std::uint64_t tail = 0; tail < residual.size() && !depends; tail += 2) {
        depends = residual[tail] != residual[tail + 1];
      }
      if (depends) seen.insert(residual);
    }
    decision += seen.size();
  }
  return decision + 2;
}

}  // namespace mwidth::oracle
