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

#include "mwidth/decomposition.hpp"
#include "mwidth/errors.hpp"

// PACE tree decomposition format:
//   s td <bags> <largest bag size> <vertices>
//   b <bag id> <vertex>...
//   <bag id> <bag id>        (one line per tree edge)
// Bag ids and vertices are 1-based.

namespace mwidth::pace {

inline constexpr const char* kHeader = "c mwidth pace-td v1";

inline void write_td(std::ostream& out, const TreeDecomposition& td,
                     std::size_t num_vertices) {
  out << kHeader << '\n';
  out << "s td " << td.bags.size() << ' ' << td.width() + 1 << ' '
      << num_vertices << '\n';
  for (std::size_t i = 0; i < td.bags.size(); ++i) {
    out << "b " << i + 1;
    for (Vertex v : td.bags[i]) out << ' ' << v + 1;
    out << '\n';
  }
  for (auto [a, b] : td.tree_edges) out << a + 1 << ' ' << b + 1 << '\n';
}

/// Writes a path decomposition, merging runs of identical consecutive bags.
inline void write_pd(std::ostream& out, const PathDecomposition& pd,
                     std::size_t num_vertices) {
  PathDecomposition merged;
  for (const VertexSet& bag : pd.bags) {
    if (merged.bags.empty() || merged.bags.back() != bag) merged.bags.push_back(bag);
  }
  write_td(out, merged.as_tree(), num_vertices);
}

struct ParsedTd {
  TreeDecomposition td;
  std::size_t num_vertices = 0;
};

inline ParsedTd read_td(std::istream& in) {
  ParsedTd out;
  std::string line;
  std::size_t ln = 0;
  bool have_header = false;
  std::size_t declared_bags = 0;
  long declared_size = 0;
  std::vector<char> seen;
  while (std::getline(in, line)) {
    ++ln;
    std::istringstream iss(line);
    std::string tag;
    if (!(iss >> tag) || tag == "c") continue;
    if (tag == "s") {
      std::string td;
      long bags = -1, size = -1, n = -1;
      iss >> td >> bags >> size >> n;
      if (!iss || td != "td" || bags < 0 || size < 0 || n < 0) {
        throw ParseError("expected 's td <bags> <size> <vertices>'", ln);
      }
      if (have_header) throw ParseError("second solution line", ln);
      have_header = true;
      declared_bags = std::size_t(bags);
      declared_size = size;
      out.num_vertices = std::size_t(n);
      out.td.bags.assign(declared_bags, {});
      seen.assign(declared_bags, 0);
      continue;
    }
    if (!have_header) throw ParseError("content before solution line", ln);
    if (tag == "b") {
      long id = 0;
      if (!(iss >> id) || id < 1 || std::size_t(id) > declared_bags) {
        throw ParseError("bad bag id", ln);
      }
      if (seen[std::size_t(id) - 1]) throw ParseError("bag listed twice", ln);
      seen[std::size_t(id) - 1] = 1;
      VertexSet bag;
      long v = 0;
      while (iss >> v) {
        if (v < 1 || std::size_t(v) > out.num_vertices) {
          throw ParseError("vertex " + std::to_string(v) + " out of range", ln);
        }
        bag.push_back(Vertex(v - 1));
      }
      if (!iss.eof()) throw ParseError("non-numeric token in bag", ln);
      out.td.bags[std::size_t(id) - 1] = make_vertex_set(std::move(bag));
      continue;
    }
    std::istringstream edge(line);
    long a = 0, b = 0;
    if (!(edge >> a >> b) || a < 1 || b < 1 || std::size_t(a) > declared_bags ||
        std::size_t(b) > declared_bags) {
      throw ParseError("bad tree edge '" + line + "'", ln);
    }
    out.td.tree_edges.emplace_back(std::size_t(a) - 1, std::size_t(b) - 1);
  }
  if (!have_header) throw ParseError("missing solution line");
  for (std::size_t i = 0; i < declared_bags; ++i) {
    if (!seen[i]) throw ParseError("bag " + std::to_string(i + 1) + " not listed");
  }
  if (out.td.width() + 1 != declared_size) {
    throw ParseError("declared bag size " + std::to_string(declared_size) +
                     " differs from largest bag " + std::to_string(out.td.width() + 1));
  }
  return out;
}

}  // namespace mwidth::pace
