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

#include <gtest/gtest.h>

#include <sstream>

#include "mwidth/branching_program.hpp"
#include "mwidth/cnf.hpp"
#include "mwidth/decomposition.hpp"
#include "mwidth/dimacs.hpp"
#include "mwidth/errors.hpp"
#include "mwidth/instances.hpp"
#include "mwidth/pace.hpp"
#include "support/corpus.hpp"

namespace mwidth {
namespace {

Graph graph_from(const std::string& text) {
  std::istringstream in(text);
  return dimacs::read_graph(in);
}

std::size_t graph_error_line(const std::string& text) {
  try {
    graph_from(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  ADD_FAILURE() << "no parse error for:\n" << text;
  return 0;
}

TEST(DimacsGraphTest, RoundTripsCorpus) {
  for (const auto& entry : testing::random_corpus()) {
    std::ostringstream out;
    dimacs::write_graph(out, entry.g);
    EXPECT_EQ(out.str().rfind(dimacs::kGraphHeader, 0), 0u);
    ASSERT_EQ(graph_from(out.str()), entry.g) << "graph " << entry.index;
  }
}

TEST(DimacsGraphTest, WrittenForm) {
  std::ostringstream out;
  dimacs::write_graph(out, path_graph(3));
  EXPECT_EQ(out.str(), "c mwidth dimacs-graph v1\np edge 3 2\ne 1 2\ne 2 3\n");
}

TEST(DimacsGraphTest, AcceptsCommentsAndBlankLines) {
  EXPECT_EQ(graph_from("c hi\n\np edge 2 1\n  c inner\ne 2 1\n"), Graph(2, {{0, 1}}));
}

TEST(DimacsGraphTest, ErrorsCarryLineNumbers) {
  EXPECT_EQ(graph_error_line("p edge 2 1\ne 1 3\n"), 2u);
  EXPECT_EQ(graph_error_line("p edge 2 1\ne 1 1\n"), 2u);
  EXPECT_EQ(graph_error_line("c x\np edge 3 2\ne 1 2\ne 2 1\n"), 4u);
  EXPECT_EQ(graph_error_line("e 1 2\n"), 1u);
  EXPECT_EQ(graph_error_line("p edge 2 1\np edge 2 1\n"), 2u);
  EXPECT_EQ(graph_error_line("p graph 2 1\n"), 1u);
  EXPECT_EQ(graph_error_line("p edge 2 1\nx 1 2\n"), 2u);
  EXPECT_EQ(graph_error_line("p edge 2 1\ne 1\n"), 2u);
  EXPECT_THROW(graph_from("p edge 3 2\ne 1 2\n"), ParseError);
  EXPECT_THROW(graph_from(""), ParseError);
}

TEST(DimacsCnfTest, RoundTripKeepsRoles) {
  const Cnf f = cnf_of_graph(cycle_graph(4));
  std::ostringstream out;
  dimacs::write_cnf(out, f);
  std::istringstream in(out.str());
  const Cnf g = dimacs::read_cnf(in);
  EXPECT_EQ(g.num_vars(), f.num_vars());
  EXPECT_EQ(g.clauses(), f.clauses());
  EXPECT_EQ(g.roles(), f.roles());
  EXPECT_EQ(g.edge_var(3, 0), f.edge_var(0, 3));
}

TEST(DimacsCnfTest, WrittenForm) {
  std::ostringstream out;
  dimacs::write_cnf(out, cnf_of_graph(Graph(2, {{0, 1}})));
  EXPECT_EQ(out.str(),
            "c mwidth dimacs-cnf v1\n"
            "c var 1 vertex 1\nc var 2 vertex 2\nc var 3 edge 1 2\n"
            "p cnf 3 1\n1 3 2 0\n");
}

TEST(DimacsCnfTest, PlainCnfAndClausesAcrossLines) {
  std::istringstream in("c plain\np cnf 3 2\n1 -2\n 0 3 0\n");
  const Cnf f = dimacs::read_cnf(in);
  ASSERT_EQ(f.clauses().size(), 2u);
  EXPECT_EQ(f.clauses()[0], (Clause{pos(0), neg(1)}));
  EXPECT_EQ(f.role(0).kind, VarRole::Kind::kPlain);
}

TEST(DimacsCnfTest, Errors) {
  auto read = [](const std::string& s) {
    std::istringstream in(s);
    return dimacs::read_cnf(in);
  };
  EXPECT_THROW(read("p cnf 2 1\n1 3 0\n"), ParseError);
  EXPECT_THROW(read("p cnf 2 1\n1 2\n"), ParseError);
  EXPECT_THROW(read("p cnf 2 2\n1 2 0\n"), ParseError);
  EXPECT_THROW(read("p cnf 2 1\n1 -1 0\n"), ParseError);
  EXPECT_THROW(read("1 2 0\n"), ParseError);
  EXPECT_THROW(read("p cnf 2 1\n1 a 0\n"), ParseError);
  EXPECT_THROW(read("c var 1 colour 1\np cnf 1 0\n"), ParseError);
  EXPECT_THROW(read("c var 3 vertex 1\np cnf 1 0\n"), ParseError);
}

TEST(PaceTest, TreeDecompositionRoundTrip) {
  const CtreeDecomposition d = ctree_decomposition(2, 2);
  const Graph g = ct_graph(2, 2);
  std::ostringstream out;
  pace::write_td(out, d.base, g.num_vertices());
  std::istringstream in(out.str());
  const pace::ParsedTd parsed = pace::read_td(in);
  EXPECT_EQ(parsed.num_vertices, g.num_vertices());
  EXPECT_EQ(parsed.td.bags, d.base.bags);
  EXPECT_EQ(parsed.td.tree_edges, d.base.tree_edges);
  EXPECT_TRUE(validate_decomposition(g, parsed.td).valid);
}

TEST(PaceTest, PathDecompositionMergesRepeatedBags) {
  PathDecomposition pd{{{0, 1}, {0, 1}, {1, 2}}};
  std::ostringstream out;
  pace::write_pd(out, pd, 3);
  EXPECT_EQ(out.str(), "c mwidth pace-td v1\ns td 2 2 3\nb 1 1 2\nb 2 2 3\n1 2\n");
}

TEST(PaceTest, Errors) {
  auto read = [](const std::string& s) {
    std::istringstream in(s);
    return pace::read_td(in);
  };
  EXPECT_THROW(read("s td 1 2 2\nb 1 1 3\n"), ParseError);
  EXPECT_THROW(read("s td 2 2 2\nb 1 1 2\n"), ParseError);
  EXPECT_THROW(read("s td 1 3 2\nb 1 1 2\n"), ParseError);
  EXPECT_THROW(read("b 1 1\n"), ParseError);
  EXPECT_THROW(read("s td 2 1 2\nb 1 1\nb 2 2\n1 3\n"), ParseError);
  EXPECT_THROW(read("s td 1 1 1\nb 1 1\nb 1 1\n"), ParseError);
  EXPECT_NO_THROW(read("s td 1 2 2\nb 1 2 1\n"));
}

TEST(BpTextTest, RoundTrip) {
  BranchingProgram z(3, {{0, 1, pos(0)}, {0, 2, neg(0)}, {1, 2, std::nullopt}}, 0, 2);
  std::ostringstream out;
  bptext::write(out, z);
  EXPECT_EQ(out.str(), "c mwidth branching-program v1\np bp 3 3 0 2\n0 1 1\n0 2 -1\n1 2\n");
  std::istringstream in(out.str());
  EXPECT_EQ(bptext::read(in), z);
}

TEST(BpTextTest, Errors) {
  auto read = [](const std::string& s) {
    std::istringstream in(s);
    return bptext::read(in);
  };
  EXPECT_THROW(read("p bp 2 1 0 1\n0 1 0\n"), ParseError);
  EXPECT_THROW(read("p bp 2 2 0 1\n0 1\n"), ParseError);
  EXPECT_THROW(read("0 1\n"), ParseError);
  EXPECT_THROW(read("p bp 2 1 0 1\n1 0\n"), ParseError);
  EXPECT_THROW(read("p bp 2 1 0 1\n0 1 2 junk\n"), ParseError);
  EXPECT_THROW(read("p bp 2 1 0 1\np bp 2 1 0 1\n0 1\n"), ParseError);
}

}  // namespace
}  // namespace mwidth
