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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mwidth/errors.hpp"
#include "mwidth/graph.hpp"
#include "mwidth/instances.hpp"

namespace mwidth {

using Var = std::uint32_t;

struct Literal {
  Var var = 0;
  bool positive = true;

  Literal negated() const { return {var, !positive}; }
  /// Signed 1-based DIMACS form.
  long to_dimacs() const { return positive ? long(var) + 1 : -(long(var) + 1); }
  static Literal from_dimacs(long x) {
    if (x == 0) throw MalformedInput("0 is not a DIMACS literal");
    return x > 0 ? Literal{Var(x - 1), true} : Literal{Var(-x - 1), false};
  }

  friend bool operator==(const Literal&, const Literal&) = default;
  friend auto operator<=>(const Literal&, const Literal&) = default;
};

inline Literal pos(Var v) { return {v, true}; }
inline Literal neg(Var v) { return {v, false}; }

/// What a variable of a graph CNF stands for.
struct VarRole {
  enum class Kind : std::uint8_t { kPlain, kVertex, kEdge };
  Kind kind = Kind::kPlain;
  Vertex u = 0;
  Vertex v = 0;

  friend bool operator==(const VarRole&, const VarRole&) = default;
};

using Clause = std::vector<Literal>;

/// Full assignment; `assignment[v]` is the value of variable v.
using Assignment = std::vector<bool>;

class Cnf {
 public:
  Cnf() = default;

  Cnf(std::size_t num_vars, std::vector<Clause> clauses,
      std::vector<VarRole> roles = {})
      : num_vars_(num_vars), clauses_(std::move(clauses)), roles_(std::move(roles)) {
    if (roles_.empty()) roles_.resize(num_vars_);
    if (roles_.size() != num_vars_) {
      throw MalformedInput("role table does not match the variable count");
    }
    for (const Clause& c : clauses_) {
      for (const Literal& l : c) {
        if (l.var >= num_vars_) {
          throw MalformedInput("literal on variable " + std::to_string(l.var + 1) +
                               " beyond " + std::to_string(num_vars_));
        }
        for (const Literal& m : c) {
          if (m == l.negated()) {
            throw MalformedInput("clause contains variable " +
                                 std::to_string(l.var + 1) + " and its negation");
          }
        }
      }
    }
    for (Var x = 0; x < num_vars_; ++x) {
      const VarRole& r = roles_[x];
      if (r.kind == VarRole::Kind::kVertex) vertex_vars_[r.u] = x;
      if (r.kind == VarRole::Kind::kEdge) edge_vars_[Edge(r.u, r.v)] = x;
    }
  }

  std::size_t num_vars() const noexcept { return num_vars_; }
  const std::vector<Clause>& clauses() const noexcept { return clauses_; }
  const std::vector<VarRole>& roles() const noexcept { return roles_; }
  const VarRole& role(Var x) const { return roles_.at(x); }

  std::optional<Var> vertex_var(Vertex u) const {
    auto it = vertex_vars_.find(u);
    if (it == vertex_vars_.end()) return std::nullopt;
    return it->second;
  }

  /// X_{u,v}; the key is symmetric.
  std::optional<Var> edge_var(Vertex u, Vertex v) const {
    auto it = edge_vars_.find(Edge(u, v));
    if (it == edge_vars_.end()) return std::nullopt;
    return it->second;
  }

  bool satisfied_by(const Assignment& a) const {
    if (a.size() < num_vars_) {
      throw MalformedInput("assignment covers " + std::to_string(a.size()) +
                           " of " + std::to_string(num_vars_) + " variables");
    }
    for (const Clause& c : clauses_) {
      bool sat = false;
      for (const Literal& l : c) {
        if (a[l.var] == l.positive) {
          sat = true;
          break;
        }
      }
      if (!sat) return false;
    }
    return true;
  }

  /// Copy with clause `index` removed.
  Cnf without_clause(std::size_t index) const {
    std::vector<Clause> cs = clauses_;
    cs.erase(cs.begin() + std::ptrdiff_t(index));
    return Cnf(num_vars_, std::move(cs), roles_);
  }

 private:
  std::size_t num_vars_ = 0;
  std::vector<Clause> clauses_;
  std::vector<VarRole> roles_;
  std::map<Vertex, Var> vertex_vars_;
  std::map<Edge, Var> edge_vars_;
};

/// The monotone CNF with one clause (X_u | X_{u,v} | X_v) per edge.
///
/// Vertex u is variable u; the edge at index j of `g.edges()` (lexicographic
/// endpoint order) is variable |V| + j.
inline Cnf cnf_of_graph(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<VarRole> roles;
  roles.reserve(n + g.num_edges());
  for (std::size_t u = 0; u < n; ++u) {
    roles.push_back({VarRole::Kind::kVertex, Vertex(u), Vertex(u)});
  }
  std::vector<Clause> clauses;
  clauses.reserve(g.num_edges());
  for (std::size_t j = 0; j < g.num_edges(); ++j) {
    const Edge& e = g.edges()[j];
    roles.push_back({VarRole::Kind::kEdge, e.first, e.second});
    clauses.push_back({pos(e.first), pos(Var(n + j)), pos(e.second)});
  }
  return Cnf(n + g.num_edges(), std::move(clauses), std::move(roles));
}

inline Cnf f_rk(std::size_t r, std::size_t k) { return cnf_of_graph(ct_graph(r, k)); }

/// Graph on the variables of `f`, adjacent iff they share a clause.
inline Graph primal_graph(const Cnf& f) {
  Graph g(f.num_vars());
  for (const Clause& c : f.clauses()) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      for (std::size_t j = i + 1; j < c.size(); ++j) {
        if (c[i].var != c[j].var && !g.has_edge(c[i].var, c[j].var)) {
          g.add_edge(c[i].var, c[j].var);
        }
      }
    }
  }
  return g;
}

// Closed-form counts for the tree-of-cliques family.

inline std::uint64_t ct_vertex_count(std::uint64_t r, std::uint64_t k) {
  return ((std::uint64_t{1} << (r + 1)) - 1) * k;
}

inline std::uint64_t ct_edge_count(std::uint64_t r, std::uint64_t k) {
  const std::uint64_t nodes = (std::uint64_t{1} << (r + 1)) - 1;
  return nodes * (k * (k - 1) / 2) + (nodes - 1) * k * k;
}

/// Variables of F_{r,k}: k + C(k,2) per tree node plus k^2 per tree edge.
inline std::uint64_t f_rk_variable_count(std::uint64_t r, std::uint64_t k) {
  const std::uint64_t nodes = (std::uint64_t{1} << (r + 1)) - 1;
  return nodes * (k + k * (k - 1) / 2) + (nodes - 1) * k * k;
}

/// Upper bound 2^r * 6k^2 on the variable count of F_{r,k}.
inline std::uint64_t f_rk_variable_bound(std::uint64_t r, std::uint64_t k) {
  return (std::uint64_t{1} << r) * 6 * k * k;
}

/// Variables of F_{r,r} in the form 2^r (3r^2 + r) - (5r^2 + r) / 2.
inline std::int64_t f_rr_variable_count(std::int64_t r) {
  return (std::int64_t{1} << r) * (3 * r * r + r) - (5 * r * r + r) / 2;
}

}  // namespace mwidth
