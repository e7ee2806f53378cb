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
#include <limits>
#include <map>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "mwidth/branching_program.hpp"
#include "mwidth/cnf.hpp"
#include "mwidth/errors.hpp"

namespace mwidth {

inline constexpr std::size_t kDefaultObddVarCap = 24;
inline constexpr std::size_t kDefaultOrderEnumerationCap = 10;
inline constexpr std::size_t kDefaultOrderDpCap = 16;

namespace detail {

using Table = std::vector<std::uint64_t>;

// Bits of a 64-bit block whose index has bit q set.
inline constexpr std::uint64_t kHighPattern[6] = {
    0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
    0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull};

inline std::size_t table_words(std::size_t vars) {
  return vars < 6 ? 1 : std::size_t{1} << (vars - 6);
}

inline std::uint64_t valid_mask(std::size_t vars) {
  return vars < 6 ? (std::uint64_t{1} << (std::size_t{1} << vars)) - 1 : ~std::uint64_t{0};
}

/// Truth table of `f`; variable x is bit `bit_of_var[x]` of the row index.
inline Table truth_table(const Cnf& f, const std::vector<std::size_t>& bit_of_var) {
  const std::size_t m = f.num_vars();
  const std::size_t words = table_words(m);
  Table t(words, 0);
  auto literal_word = [&](const Literal& l, std::size_t w) {
    const std::size_t b = bit_of_var[l.var];
    std::uint64_t x = b < 6 ? kHighPattern[b] : (((w >> (b - 6)) & 1) ? ~std::uint64_t{0} : 0);
    return l.positive ? x : ~x;
  };
  for (std::size_t w = 0; w < words; ++w) {
    std::uint64_t acc = ~std::uint64_t{0};
    for (const Clause& c : f.clauses()) {
      std::uint64_t cw = 0;
      for (const Literal& l : c) cw |= literal_word(l, w);
      acc &= cw;
    }
    t[w] = acc & valid_mask(m);
  }
  return t;
}

}  // namespace detail

/// Node of a reduced OBDD. Ids 0 and 1 are the false and true terminals.
struct ObddNode {
  Var var = 0;
  std::uint32_t lo = 0;
  std::uint32_t hi = 0;
};

/// Reduced ordered BDD. Size counts every decision node plus both
/// terminals, so a constant function has size 2.
class Obdd {
 public:
  static constexpr std::uint32_t kFalse = 0;
  static constexpr std::uint32_t kTrue = 1;

  Obdd(VarOrder order, std::vector<ObddNode> nodes, std::uint32_t root)
      : order_(std::move(order)), nodes_(std::move(nodes)), root_(root) {}

  const VarOrder& order() const noexcept { return order_; }
  const std::vector<ObddNode>& nodes() const noexcept { return nodes_; }
  std::uint32_t root() const noexcept { return root_; }
  std::size_t size() const noexcept { return nodes_.size(); }
  std::size_t decision_nodes() const noexcept { return nodes_.size() - 2; }

  bool evaluate(const Assignment& s) const {
    std::uint32_t v = root_;
    while (v > kTrue) v = s.at(nodes_[v].var) ? nodes_[v].hi : nodes_[v].lo;
    return v == kTrue;
  }

  /// The same function as a branching program with a single leaf: the true
  /// terminal becomes the leaf and edges into the false terminal are
  /// dropped. Decision nodes are numbered by level, then by creation.
  BranchingProgram program() const {
    if (root_ == kFalse) {
      throw PreconditionError("unsatisfiable function has no single-leaf program");
    }
    std::vector<std::uint32_t> ids;
    for (std::uint32_t v = 2; v < nodes_.size(); ++v) ids.push_back(v);
    std::stable_sort(ids.begin(), ids.end(), [&](std::uint32_t a, std::uint32_t b) {
      return order_.position(nodes_[a].var) < order_.position(nodes_[b].var);
    });
    const NodeId leaf = NodeId(ids.size());
    std::vector<NodeId> rename(nodes_.size(), 0);
    for (std::size_t i = 0; i < ids.size(); ++i) rename[ids[i]] = NodeId(i);
    rename[kTrue] = leaf;
    std::vector<BpEdge> edges;
    for (std::uint32_t v : ids) {
      const ObddNode& node = nodes_[v];
      if (node.lo != kFalse) edges.push_back({rename[v], rename[node.lo], neg(node.var)});
      if (node.hi != kFalse) edges.push_back({rename[v], rename[node.hi], pos(node.var)});
    }
    return BranchingProgram(ids.size() + 1, std::move(edges), rename[root_], leaf);
  }

 private:
  VarOrder order_;
  std::vector<ObddNode> nodes_;
  std::uint32_t root_;
};

/// Reduced OBDD of `f` under `order`, built from the truth table. Every
/// subtable is memoised by content at its level, so equal residual
/// functions share one node and a subtable equal in both halves is skipped.
inline Obdd build_obdd(const Cnf& f, const VarOrder& order,
                       std::size_t cap = kDefaultObddVarCap) {
  const std::size_t m = f.num_vars();
  if (m > cap) throw CapacityError("OBDD construction over variables", m, cap);
  if (order.size() != m) {
    throw MalformedInput("variable order has " + std::to_string(order.size()) +
                         " entries, CNF has " + std::to_string(m) + " variables");
  }
  std::vector<std::size_t> bit_of_var(m);
  for (std::size_t p = 0; p < m; ++p) bit_of_var[order[p]] = m - 1 - p;
  const detail::Table table = detail::truth_table(f, bit_of_var);

  std::vector<ObddNode> nodes(2);
  std::vector<std::unordered_map<std::string, std::uint32_t>> wide_memo(m + 1);
  std::vector<std::unordered_map<std::uint64_t, std::uint32_t>> narrow_memo(m + 1);

  auto build = [&](auto&& self, std::size_t level, std::uint64_t offset) -> std::uint32_t {
    const std::size_t len_log = m - level;
    std::string wide_key;
    std::uint64_t narrow_key = 0;
    bool all_zero = true, all_one = true;
    if (len_log >= 6) {
      const std::size_t first = offset / 64, count = std::size_t{1} << (len_log - 6);
      wide_key.assign(reinterpret_cast<const char*>(table.data() + first), count * 8);
      if (auto it = wide_memo[level].find(wide_key); it != wide_memo[level].end()) {
        return it->second;
      }
      for (std::size_t w = first; w < first + count; ++w) {
        all_zero = all_zero && table[w] == 0;
        all_one = all_one && table[w] == ~std::uint64_t{0};
      }
    } else {
      const std::uint64_t mask = detail::valid_mask(len_log);
      narrow_key = (table[offset / 64] >> (offset % 64)) & mask;
      if (auto it = narrow_memo[level].find(narrow_key); it != narrow_memo[level].end()) {
        return it->second;
      }
      all_zero = narrow_key == 0;
      all_one = narrow_key == mask;
    }
    std::uint32_t result;
    if (all_zero) {
      result = Obdd::kFalse;
    } else if (all_one) {
      result = Obdd::kTrue;
    } else {
      const std::uint64_t half = std::uint64_t{1} << (len_log - 1);
      const std::uint32_t lo = self(self, level + 1, offset);
      const std::uint32_t hi = self(self, level + 1, offset + half);
      if (lo == hi) {
        result = lo;
      } else {
        result = std::uint32_t(nodes.size());
        nodes.push_back({order[level], lo, hi});
      }
    }
    if (len_log >= 6) {
      wide_memo[level].emplace(std::move(wide_key), result);
    } else {
      narrow_memo[level].emplace(narrow_key, result);
    }
    return result;
  };
  const std::uint32_t root = build(build, 0, 0);
  return Obdd(order, std::move(nodes), root);
}

struct OrderSearchResult {
  std::size_t size = 0;
  VarOrder order;
  std::size_t orders_examined = 0;
};

/// Smallest OBDD over the given orders; ties keep the earliest.
inline OrderSearchResult min_obdd_size_over_orders(const Cnf& f,
                                                   std::span<const VarOrder> orders) {
  if (orders.empty()) throw ParameterError("empty order list");
  OrderSearchResult best;
  best.size = std::numeric_limits<std::size_t>::max();
  for (const VarOrder& order : orders) {
    const std::size_t size = build_obdd(f, order).size();
    ++best.orders_examined;
    if (size < best.size) {
      best.size = size;
      best.order = order;
    }
  }
  return best;
}

/// Smallest OBDD over all m! orders, enumerated lexicographically; the
/// lexicographically smallest optimal order is returned.
inline OrderSearchResult min_obdd_size_over_orders(
    const Cnf& f, std::size_t cap = kDefaultOrderEnumerationCap) {
  const std::size_t m = f.num_vars();
  if (m > cap) throw CapacityError("order enumeration over variables", m, cap);
  std::vector<Vertex> seq(m);
  for (std::size_t i = 0; i < m; ++i) seq[i] = Vertex(i);
  OrderSearchResult best;
  best.size = std::numeric_limits<std::size_t>::max();
  do {
    VarOrder order(seq);
    const std::size_t size = build_obdd(f, order).size();
    ++best.orders_examined;
    if (size < best.size) {
      best.size = size;
      best.order = std::move(order);
    }
  } while (std::next_permutation(seq.begin(), seq.end()));
  return best;
}

namespace detail {

// Bits of a 64-bit block whose index has bit q clear.
inline constexpr std::uint64_t kLowPattern[6] = {
    0x5555555555555555ull, 0x3333333333333333ull, 0x0F0F0F0F0F0F0F0Full,
    0x00FF00FF00FF00FFull, 0x0000FFFF0000FFFFull, 0x00000000FFFFFFFFull};

/// Whether a table over `vars` variables depends on the variable at bit q.
inline bool depends_on(const Table& g, std::size_t q, std::size_t vars) {
  if (q < 6) {
    const std::uint64_t mask = kLowPattern[q] & valid_mask(vars);
    const std::size_t shift = std::size_t{1} << q;
    for (std::uint64_t w : g) {
      if (((w >> shift) ^ w) & mask) return true;
    }
    return false;
  }
  const std::size_t block = std::size_t{1} << (q - 6);
  for (std::size_t base = 0; base < g.size(); base += 2 * block) {
    for (std::size_t i = 0; i < block; ++i) {
      if (g[base + i] != g[base + block + i]) return true;
    }
  }
  return false;
}

inline std::uint64_t insert_bit(std::uint64_t j, std::size_t q, std::uint64_t b) {
  const std::uint64_t low = j & ((std::uint64_t{1} << q) - 1);
  return ((j >> q) << (q + 1)) | (b << q) | low;
}

/// Restriction of g (over `vars` variables) with the variable at bit q set
/// to b; the result is over vars - 1 variables.
inline Table restrict(const Table& g, std::size_t q, std::uint64_t b, std::size_t vars) {
  const std::size_t out_vars = vars - 1;
  Table out(table_words(out_vars), 0);
  if (q >= 6) {
    const std::size_t block = std::size_t{1} << (q - 6);
    std::size_t o = 0;
    for (std::size_t base = 0; base < g.size(); base += 2 * block) {
      for (std::size_t i = 0; i < block; ++i) out[o++] = g[base + b * block + i];
    }
    return out;
  }
  const std::uint64_t rows = std::uint64_t{1} << out_vars;
  for (std::uint64_t j = 0; j < rows; ++j) {
    const std::uint64_t src = insert_bit(j, q, b);
    if ((g[src / 64] >> (src % 64)) & 1) out[j / 64] |= std::uint64_t{1} << (j % 64);
  }
  return out;
}

}  // namespace detail

/// Exact minimum OBDD size over all variable orders by a DP over variable
/// subsets. For a set S of already-read variables, the nodes labelled by
/// the next variable x are the distinct restrictions of f to assignments of
/// S that depend on x, so the node count of an order is a sum of terms each
/// fixed by (S, x). Ties go to the first improvement found scanning S and
/// x in ascending order.
inline OrderSearchResult min_obdd_size_exact(const Cnf& f,
                                             std::size_t cap = kDefaultOrderDpCap) {
  using Mask = std::uint32_t;
  const std::size_t m = f.num_vars();
  if (m > cap) throw CapacityError("order DP over variables", m, cap);
  if (m > 24) throw ParameterError("order DP supports at most 24 variables");

  std::vector<std::size_t> identity_bits(m);
  for (std::size_t x = 0; x < m; ++x) identity_bits[x] = x;

  const Mask all = Mask((std::uint64_t{1} << m) - 1);
  constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> best(std::size_t{1} << m, kInf);
  std::vector<std::int8_t> last(std::size_t{1} << m, -1);
  best[0] = 0;

  // Distinct restrictions of f for each set of the current layer, as
  // tables over the unread variables in ascending id order.
  std::map<Mask, std::vector<detail::Table>> layer;
  layer[0] = {detail::truth_table(f, identity_bits)};

  for (std::size_t k = 0; k < m; ++k) {
    std::map<Mask, std::vector<detail::Table>> next;
    for (const auto& [s, tables] : layer) {
      const std::size_t vars = m - k;
      std::size_t rank = 0;
      for (std::size_t x = 0; x < m; ++x) {
        if (s >> x & 1) continue;
        const std::size_t q = rank++;
        std::uint32_t cost = 0;
        for (const auto& g : tables) cost += detail::depends_on(g, q, vars) ? 1 : 0;
        const Mask s2 = s | Mask(1u << x);
        if (best[s] + cost < best[s2]) {
          best[s2] = best[s] + cost;
          last[s2] = std::int8_t(x);
        }
        if (next.find(s2) == next.end()) {
          std::vector<detail::Table> split;
          split.reserve(2 * tables.size());
          for (const auto& g : tables) {
            split.push_back(detail::restrict(g, q, 0, vars));
            split.push_back(detail::restrict(g, q, 1, vars));
          }
          std::sort(split.begin(), split.end());
          split.erase(std::unique(split.begin(), split.end()), split.end());
          next.emplace(s2, std::move(split));
        }
      }
    }
    layer = std::move(next);
  }

  std::vector<Vertex> seq(m);
  Mask s = all;
  for (std::size_t i = m; i-- > 0;) {
    seq[i] = Vertex(last[s]);
    s &= ~Mask(1u << last[s]);
  }
  OrderSearchResult result;
  result.size = std::size_t(best[all]) + 2;
  result.order = VarOrder(std::move(seq));
  result.orders_examined = 0;
  return result;
}

}  // namespace mwidth
