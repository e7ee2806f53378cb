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

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "mwidth/cnf.hpp"
#include "mwidth/errors.hpp"
#include "mwidth/graph.hpp"

// DIMACS readers and writers. Ids are 1-based on disk and 0-based in memory.

namespace mwidth::dimacs {

inline constexpr const char* kGraphHeader = "c mwidth dimacs-graph v1";
inline constexpr const char* kCnfHeader = "c mwidth dimacs-cnf v1";

namespace detail {

inline bool skip_line(const std::string& line) {
  std::size_t i = line.find_first_not_of(" \t\r");
  return i == std::string::npos || line[i] == 'c';
}

inline long parse_id(std::istringstream& in, std::size_t limit, std::size_t ln,
                     const char* what) {
  long id = 0;
  if (!(in >> id)) throw ParseError(std::string("missing ") + what, ln);
  if (id < 1 || std::size_t(id) > limit) {
    throw ParseError(std::string(what) + " " + std::to_string(id) +
                         " outside 1.." + std::to_string(limit),
                     ln);
  }
  return id;
}

}  // namespace detail

/// Reads "p edge n m" followed by m "e u v" lines. Self-loops, repeated
/// edges and a wrong edge count are errors.
inline Graph read_graph(std::istream& in) {
  std::string line;
  std::size_t ln = 0;
  bool have_header = false;
  std::size_t declared_edges = 0;
  Graph g;
  while (std::getline(in, line)) {
    ++ln;
    if (detail::skip_line(line)) continue;
    std::istringstream iss(line);
    std::string tag;
    iss >> tag;
    if (tag == "p") {
      if (have_header) throw ParseError("second problem line", ln);
      std::string format;
      long n = -1, m = -1;
      iss >> format >> n >> m;
      if (!iss || (format != "edge" && format != "edges" && format != "col") ||
          n < 0 || m < 0) {
        throw ParseError("expected 'p edge <n> <m>'", ln);
      }
      g = Graph(std::size_t(n));
      declared_edges = std::size_t(m);
      have_header = true;
    } else if (tag == "e") {
      if (!have_header) throw ParseError("edge before problem line", ln);
      long u = detail::parse_id(iss, g.num_vertices(), ln, "vertex");
      long v = detail::parse_id(iss, g.num_vertices(), ln, "vertex");
      try {
        g.add_edge(Vertex(u - 1), Vertex(v - 1));
      } catch (const Error& e) {
        throw ParseError(e.what(), ln);
      }
    } else {
      throw ParseError("unexpected line '" + line + "'", ln);
    }
  }
  if (!have_header) throw ParseError("missing problem line");
  if (g.num_edges() != declared_edges) {
    throw ParseError("header declares " + std::to_string(declared_edges) +
                     " edges, found " + std::to_string(g.num_edges()));
  }
  return g;
}

inline void write_graph(std::ostream& out, const Graph& g) {
  out << kGraphHeader << '\n';
  out << "p edge " << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) {
    out << "e " << e.first + 1 << ' ' << e.second + 1 << '\n';
  }
}

/// Writes "p cnf" with one comment line per variable naming its role.
inline void write_cnf(std::ostream& out, const Cnf& f) {
  out << kCnfHeader << '\n';
  for (Var x = 0; x < f.num_vars(); ++x) {
    const VarRole& r = f.role(x);
    if (r.kind == VarRole::Kind::kVertex) {
      out << "c var " << x + 1 << " vertex " << r.u + 1 << '\n';
    } else if (r.kind == VarRole::Kind::kEdge) {
      out << "c var " << x + 1 << " edge " << r.u + 1 << ' ' << r.v + 1 << '\n';
    }
  }
  out << "p cnf " << f.num_vars() << ' ' << f.clauses().size() << '\n';
  for (const Clause& c : f.clauses()) {
    for (const Literal& l : c) out << l.to_dimacs() << ' ';
    out << "0\n";
  }
}

/// Reads a DIMACS CNF. Role comments in the format of write_cnf are
/// restored; other comments are ignored.
inline Cnf read_cnf(std::istream& in) {
  std::string line;
  std::size_t ln = 0;
  bool have_header = false;
  std::size_t vars = 0, declared = 0;
  std::vector<VarRole> roles;
  std::vector<Clause> clauses;
  Clause current;
  while (std::getline(in, line)) {
    ++ln;
    std::istringstream iss(line);
    std::string tag;
    if (!(iss >> tag)) continue;
    if (tag == "c") {
      std::string word;
      if (iss >> word && word == "var") {
        long x = 0, u = 0, v = 0;
        std::string kind;
        iss >> x >> kind >> u;
        if (!iss) throw ParseError("malformed role comment", ln);
        VarRole role;
        role.u = Vertex(u - 1);
        role.v = role.u;
        if (kind == "vertex") {
          role.kind = VarRole::Kind::kVertex;
        } else if (kind == "edge") {
          if (!(iss >> v)) throw ParseError("edge role needs two vertices", ln);
          role.kind = VarRole::Kind::kEdge;
          role.v = Vertex(v - 1);
        } else {
          throw ParseError("unknown role '" + kind + "'", ln);
        }
        if (x < 1) throw ParseError("role for variable " + std::to_string(x), ln);
        if (roles.size() < std::size_t(x)) roles.resize(std::size_t(x));
        roles[std::size_t(x) - 1] = role;
      }
      continue;
    }
    if (tag == "p") {
      if (have_header) throw ParseError("second problem line", ln);
      std::string format;
      long nv = -1, nc = -1;
      iss >> format >> nv >> nc;
      if (!iss || format != "cnf" || nv < 0 || nc < 0) {
        throw ParseError("expected 'p cnf <vars> <clauses>'", ln);
      }
      vars = std::size_t(nv);
      declared = std::size_t(nc);
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError("clause before problem line", ln);
    std::istringstream body(line);
    long x = 0;
    while (body >> x) {
      if (x == 0) {
        clauses.push_back(std::move(current));
        current.clear();
        continue;
      }
      if (std::size_t(x < 0 ? -x : x) > vars) {
        throw ParseError("literal " + std::to_string(x) + " beyond " +
                             std::to_string(vars) + " variables",
                         ln);
      }
      current.push_back(Literal::from_dimacs(x));
    }
    if (!body.eof()) throw ParseError("non-numeric token in clause", ln);
  }
  if (!have_header) throw ParseError("missing problem line");
  if (!current.empty()) throw ParseError("last clause lacks terminating 0");
  if (clauses.size() != declared) {
    throw ParseError("header declares " + std::to_string(declared) +
                     " clauses, found " + std::to_string(clauses.size()));
  }
  if (roles.size() > vars) throw ParseError("role comment beyond variable count");
  roles.resize(vars);
  try {
    return Cnf(vars, std::move(clauses), std::move(roles));
  } catch (const MalformedInput& e) {
    throw ParseError(e.what());
  }
}

}  // namespace mwidth::dimacs
