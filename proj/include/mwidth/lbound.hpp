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
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "mwidth/branching_program.hpp"
#include "mwidth/cnf.hpp"
#include "mwidth/errors.hpp"
#include "mwidth/graph.hpp"
#include "mwidth/matching.hpp"
#include "mwidth/obdd.hpp"
#include "mwidth/width.hpp"

namespace mwidth {

/// A prefix of a vertex ordering together with t matching edges that each
/// join a prefix vertex u_i to a vertex v_i outside the prefix.
struct WitnessCut {
  std::size_t prefix_length = 0;
  VertexSet prefix;
  /// (u_i, v_i) sorted by u_i.
  std::vector<CrossEdge> matching;

  std::size_t t() const noexcept { return matching.size(); }
};

/// Shortest prefix of `sv` whose cut has a matching of size t, with t of
/// its pairs. For t = 0 the empty prefix is returned.
inline WitnessCut witness_cut(const Graph& g, const Ordering& sv, std::size_t t) {
  require_ordering_of(g, sv);
  WitnessCut cut;
  if (t == 0) return cut;
  for (std::size_t i = 1; i < g.num_vertices(); ++i) {
    const Matching m = max_bipartite_matching(cut_graph(g, sv, i));
    if (m.size() >= t) {
      cut.prefix_length = i;
      cut.prefix = sv.prefix(i);
      cut.matching.assign(m.pairs.begin(), m.pairs.begin() + std::ptrdiff_t(t));
      return cut;
    }
  }
  throw NotFound("no prefix of the ordering has a cut matching of size " +
                 std::to_string(t));
}

inline constexpr std::size_t kMaxFamilyT = 20;

/// The 2^t assignments used by the size lower bound. Member b sets X_{u_i}
/// to bit i of b, X_{v_i} to its complement and X_{u_i,v_i} to false; every
/// other variable is true.
inline std::vector<Assignment> assignment_family(const Cnf& f, const WitnessCut& w) {
  const std::size_t t = w.t();
  if (t > kMaxFamilyT) throw CapacityError("assignment family exponent", t, kMaxFamilyT);
  struct Pair {
    Var u, v, uv;
  };
  std::vector<Pair> vars;
  for (const CrossEdge& e : w.matching) {
    auto u = f.vertex_var(e.left), v = f.vertex_var(e.right);
    auto uv = f.edge_var(e.left, e.right);
    if (!u || !v || !uv) {
      throw PreconditionError("CNF lacks the variables of matching edge {" +
                              std::to_string(e.left) + "," + std::to_string(e.right) + "}");
    }
    vars.push_back({*u, *v, *uv});
  }
  std::vector<Assignment> family;
  family.reserve(std::size_t{1} << t);
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << t); ++b) {
    Assignment s(f.num_vars(), true);
    for (std::size_t i = 0; i < t; ++i) {
      const bool up = (b >> i) & 1;
      s[vars[i].u] = up;
      s[vars[i].v] = !up;
      s[vars[i].uv] = false;
    }
    family.push_back(std::move(s));
  }
  return family;
}

/// Which side of a witness cut each variable's vertex lies on.
enum class VarSide : std::uint8_t { kNeither, kPrefix, kSuffix };

inline std::vector<VarSide> var_sides(const Cnf& f, const VertexSet& prefix) {
  std::vector<VarSide> sides(f.num_vars(), VarSide::kNeither);
  for (Var x = 0; x < f.num_vars(); ++x) {
    const VarRole& r = f.role(x);
    if (r.kind == VarRole::Kind::kVertex) {
      sides[x] = contains(prefix, r.u) ? VarSide::kPrefix : VarSide::kSuffix;
    }
  }
  return sides;
}

/// Vertex ordering induced by a variable order on the vertex variables.
inline Ordering vertex_ordering_from_var_order(const Cnf& f, const VarOrder& order,
                                               std::size_t num_vertices) {
  std::vector<Vertex> seq;
  for (Vertex x : order.sequence()) {
    const VarRole& r = f.role(x);
    if (r.kind == VarRole::Kind::kVertex) seq.push_back(r.u);
  }
  if (seq.size() != num_vertices) {
    throw PreconditionError("order does not cover every vertex variable");
  }
  return Ordering(std::move(seq));
}

struct SeparationVector {
  /// 2c - 1 program nodes, in path order.
  std::vector<NodeId> nodes;

  friend bool operator==(const SeparationVector&, const SeparationVector&) = default;
  friend auto operator<=>(const SeparationVector&, const SeparationVector&) = default;
};

/// Separation vector of a computational path.
///
/// The path is split greedily into at most c runs ordered by `order`
/// (missing runs are the single leaf node). Each run is cut once more: after
/// its last prefix-side vertex variable if it reads both sides, at its end
/// if it reads only prefix-side or no vertex variables, and at its start if
/// it reads only suffix-side ones. The vector lists the cut node and the
/// run end of every run, without the final leaf.
inline SeparationVector separation_vector(const BranchingProgram& z,
                                          const ComputationalPath& p, const VarOrder& order,
                                          const std::vector<VarSide>& sides, std::size_t c) {
  if (c < 1) throw ParameterError("c must be at least 1");
  const std::size_t length = p.edges.size();

  // Node indices (into p.nodes) where runs start.
  std::vector<std::size_t> starts{0};
  bool have_last = false;
  std::size_t last = 0;
  for (std::size_t k = 0; k < length; ++k) {
    const auto& label = z.edges()[p.edges[k]].label;
    if (!label) continue;
    if (label->var >= order.size()) throw MalformedInput("label outside the order");
    const std::size_t pos_k = order.position(label->var);
    if (have_last && pos_k <= last) starts.push_back(k);
    have_last = true;
    last = pos_k;
  }
  if (starts.size() > c) {
    throw PreconditionError("path needs " + std::to_string(starts.size()) +
                            " ordered runs, more than c = " + std::to_string(c));
  }

  auto side_of = [&](std::size_t k) {
    const auto& label = z.edges()[p.edges[k]].label;
    if (!label || label->var >= sides.size()) return VarSide::kNeither;
    return sides[label->var];
  };

  SeparationVector out;
  for (std::size_t i = 0; i < c; ++i) {
    const std::size_t a = i < starts.size() ? starts[i] : length;
    const std::size_t b = i + 1 < starts.size() ? starts[i + 1] : length;
    std::optional<std::size_t> last_prefix;
    bool has_suffix = false;
    for (std::size_t k = a; k < b; ++k) {
      const VarSide s = side_of(k);
      if (s == VarSide::kPrefix) {
        if (has_suffix) {
          throw PreconditionError("a suffix-side variable precedes a prefix-side one in a run");
        }
        last_prefix = k;
      } else if (s == VarSide::kSuffix) {
        has_suffix = true;
      }
    }
    std::size_t cut = b;
    if (last_prefix && has_suffix) {
      cut = *last_prefix + 1;
    } else if (!last_prefix && has_suffix) {
      cut = a;
    }
    out.nodes.push_back(p.nodes[cut]);
    if (i + 1 < c) out.nodes.push_back(p.nodes[b]);
  }
  return out;
}

/// Lexicographically smallest (by edge indices) root-leaf path of `z` whose
/// labels all hold under `s`, if any.
inline std::optional<ComputationalPath> first_accepting_path(const BranchingProgram& z,
                                                             const Assignment& s) {
  if (s.size() < z.variable_bound()) throw MalformedInput("assignment too short");
  std::vector<char> dead(z.num_nodes(), 0);
  ComputationalPath path;
  path.nodes.push_back(z.root());
  auto dfs = [&](auto&& self, NodeId v) -> bool {
    if (v == z.leaf()) return true;
    for (std::size_t i : z.out_edges(v)) {
      const BpEdge& e = z.edges()[i];
      if (e.label && s[e.label->var] != e.label->positive) continue;
      if (dead[e.head]) continue;
      path.edges.push_back(i);
      path.nodes.push_back(e.head);
      if (self(self, e.head)) return true;
      path.edges.pop_back();
      path.nodes.pop_back();
    }
    dead[v] = 1;
    return false;
  };
  if (!dfs(dfs, z.root())) return std::nullopt;
  for (std::size_t i : path.edges) {
    if (z.edges()[i].label) path.literals.push_back(*z.edges()[i].label);
  }
  std::sort(path.literals.begin(), path.literals.end());
  path.literals.erase(std::unique(path.literals.begin(), path.literals.end()),
                      path.literals.end());
  return path;
}

struct DistinctnessReport {
  bool distinct = true;
  std::vector<ComputationalPath> paths;
  std::vector<SeparationVector> vectors;
  /// First pair of family members with equal vectors.
  std::optional<std::pair<std::size_t, std::size_t>> collision;
};

/// Picks the first accepting path of every family member and compares
/// their separation vectors. A collision is reported, not thrown; a member
/// without an accepting path raises EquivalenceError.
inline DistinctnessReport check_distinctness(const BranchingProgram& z,
                                             const std::vector<Assignment>& family,
                                             const VarOrder& order,
                                             const std::vector<VarSide>& sides,
                                             std::size_t c) {
  DistinctnessReport report;
  for (std::size_t i = 0; i < family.size(); ++i) {
    auto path = first_accepting_path(z, family[i]);
    if (!path) {
      throw EquivalenceError("family member " + std::to_string(i) +
                             " satisfies the CNF but the program rejects it");
    }
    report.vectors.push_back(separation_vector(z, *path, order, sides, c));
    report.paths.push_back(std::move(*path));
  }
  std::vector<std::size_t> idx(family.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return report.vectors[a] < report.vectors[b];
  });
  for (std::size_t i = 1; i < idx.size(); ++i) {
    if (report.vectors[idx[i - 1]] == report.vectors[idx[i]]) {
      report.distinct = false;
      report.collision = std::minmax(idx[i - 1], idx[i]);
      break;
    }
  }
  return report;
}

/// Smallest integer s with s^exponent >= 2^t.
inline std::uint64_t required_size(std::uint64_t t, std::uint64_t exponent) {
  using boost::multiprecision::cpp_int;
  if (exponent == 0) throw ParameterError("exponent must be positive");
  const std::uint64_t ceil_log = t / exponent + (t % exponent != 0);
  if (ceil_log >= 64) throw RangeError("required size does not fit in 64 bits");
  const cpp_int target = cpp_int(1) << t;
  std::uint64_t lo = 1, hi = std::uint64_t{1} << ceil_log;
  while (lo < hi) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    if (boost::multiprecision::pow(cpp_int(mid), unsigned(exponent)) >= target) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return lo;
}

struct SizeBoundVerdict {
  bool pass = false;
  /// Smallest size meeting the bound.
  std::uint64_t required = 0;
};

/// size >= 2^(t / (2c - 1)), decided as size^(2c-1) >= 2^t.
inline SizeBoundVerdict verify_size_bound(std::uint64_t size, std::uint64_t t, std::uint64_t c) {
  if (c < 1) throw ParameterError("c must be at least 1");
  SizeBoundVerdict v;
  v.required = required_size(t, 2 * c - 1);
  v.pass = size >= v.required;
  return v;
}

/// size >= 2^(rk / (4c - 2)), decided as size^(4c-2) >= 2^(rk).
inline SizeBoundVerdict verify_frk_size_bound(std::uint64_t size, std::uint64_t r,
                                              std::uint64_t k, std::uint64_t c) {
  if (c < 1) throw ParameterError("c must be at least 1");
  SizeBoundVerdict v;
  v.required = required_size(r * k, 4 * c - 2);
  v.pass = size >= v.required;
  return v;
}

struct ExperimentOptions {
  std::size_t subset_cap = kDefaultSubsetCap;
  /// Variables up to this count use order enumeration, above it the DP.
  std::size_t enumeration_cap = 8;
  std::size_t order_dp_cap = kDefaultOrderDpCap;
};

struct ExperimentReport {
  std::string instance;
  std::size_t c = 1;
  /// Matching width of the graph.
  std::size_t t = 0;
  std::uint64_t bound = 0;
  std::size_t measured_size = 0;
  std::size_t program_nodes = 0;
  bool pass = false;
  std::string search;
  VarOrder order;
  WitnessCut cut;
  DistinctnessReport distinctness;
};

/// Minimum OBDD of CNF(g) against the bound from the matching width of g,
/// plus the separation vectors of the witness family on that OBDD.
inline ExperimentReport run_lower_bound_experiment(const Graph& g, std::string instance,
                                                   std::size_t c,
                                                   const ExperimentOptions& opts = {}) {
  if (c < 1) throw ParameterError("c must be at least 1");
  ExperimentReport report;
  report.instance = std::move(instance);
  report.c = c;
  report.t = matching_width_exact(g, opts.subset_cap).value;

  const Cnf f = cnf_of_graph(g);
  OrderSearchResult best;
  if (f.num_vars() <= opts.enumeration_cap) {
    best = min_obdd_size_over_orders(f, opts.enumeration_cap);
    report.search = "enumeration";
  } else {
    best = min_obdd_size_exact(f, opts.order_dp_cap);
    report.search = "subset-dp";
  }
  report.measured_size = best.size;
  report.order = best.order;
  const SizeBoundVerdict bound = verify_size_bound(best.size, report.t, c);
  report.bound = bound.required;
  report.pass = bound.pass;

  const Obdd obdd = build_obdd(f, best.order);
  if (obdd.size() != best.size) {
    throw InvariantViolation("rebuilt OBDD size differs from the search result");
  }
  const BranchingProgram z = obdd.program();
  report.program_nodes = z.num_nodes();
  const Ordering sv = vertex_ordering_from_var_order(f, best.order, g.num_vertices());
  report.cut = witness_cut(g, sv, report.t);
  report.distinctness = check_distinctness(z, assignment_family(f, report.cut), best.order,
                                           var_sides(f, report.cut.prefix), c);
  return report;
}

}  // namespace mwidth
