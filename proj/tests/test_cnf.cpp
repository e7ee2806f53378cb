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

#include "mwidth/cnf.hpp"
#include "mwidth/errors.hpp"
#include "mwidth/instances.hpp"

namespace mwidth {
namespace {

TEST(LiteralTest, DimacsConversion) {
  EXPECT_EQ(pos(0).to_dimacs(), 1);
  EXPECT_EQ(neg(4).to_dimacs(), -5);
  EXPECT_EQ(Literal::from_dimacs(-3), neg(2));
  EXPECT_EQ(Literal::from_dimacs(7), pos(6));
  EXPECT_THROW(Literal::from_dimacs(0), MalformedInput);
  EXPECT_EQ(pos(3).negated(), neg(3));
}

TEST(CnfTest, GraphCnfNumbering) {
  const Graph g(3, {{1, 2}, {0, 1}});
  const Cnf f = cnf_of_graph(g);
  ASSERT_EQ(f.num_vars(), 5u);
  ASSERT_EQ(f.clauses().size(), 2u);
  // Edge {0,1} comes first in lexicographic order, so it is variable 3.
  EXPECT_EQ(f.clauses()[0], (Clause{pos(0), pos(3), pos(1)}));
  EXPECT_EQ(f.clauses()[1], (Clause{pos(1), pos(4), pos(2)}));
  EXPECT_EQ(f.vertex_var(2), Var(2));
  EXPECT_EQ(f.edge_var(1, 0), Var(3));
  EXPECT_EQ(f.edge_var(2, 1), Var(4));
  EXPECT_FALSE(f.edge_var(0, 2).has_value());
  EXPECT_EQ(f.role(4).kind, VarRole::Kind::kEdge);
}

TEST(CnfTest, EdgelessGraphIsTautology) {
  const Cnf f = cnf_of_graph(Graph(3));
  EXPECT_EQ(f.num_vars(), 3u);
  EXPECT_TRUE(f.clauses().empty());
  EXPECT_TRUE(f.satisfied_by(Assignment(3, false)));
}

TEST(CnfTest, SatisfactionByClauseScan) {
  const Cnf f = cnf_of_graph(Graph(2, {{0, 1}}));
  EXPECT_TRUE(f.satisfied_by({true, false, false}));
  EXPECT_TRUE(f.satisfied_by({false, true, false}));
  EXPECT_FALSE(f.satisfied_by({false, false, false}));
  EXPECT_THROW(f.satisfied_by({true, true}), MalformedInput);
}

TEST(CnfTest, ValidatesClauses) {
  EXPECT_THROW(Cnf(2, {{pos(0), pos(2)}}), MalformedInput);
  EXPECT_THROW(Cnf(2, {{pos(0), neg(0)}}), MalformedInput);
  EXPECT_THROW(Cnf(2, {}, std::vector<VarRole>(3)), MalformedInput);
  EXPECT_NO_THROW(Cnf(2, {{pos(0), pos(0)}}));
}

TEST(CnfTest, WithoutClause) {
  const Cnf f = cnf_of_graph(path_graph(3));
  const Cnf g = f.without_clause(0);
  EXPECT_EQ(g.clauses().size(), 1u);
  EXPECT_EQ(g.num_vars(), f.num_vars());
  EXPECT_EQ(g.roles(), f.roles());
}

TEST(CnfTest, PrimalGraphOfGraphCnf) {
  const Graph g = path_graph(3);
  const Graph primal = primal_graph(cnf_of_graph(g));
  EXPECT_EQ(primal.num_vertices(), 5u);
  // Each clause is a triangle; the two triangles share vertex 1.
  EXPECT_EQ(primal.num_edges(), 6u);
  EXPECT_TRUE(primal.has_edge(0, 1));
  EXPECT_TRUE(primal.has_edge(0, 3));
  EXPECT_TRUE(primal.has_edge(1, 4));
  EXPECT_FALSE(primal.has_edge(0, 2));
}

TEST(CnfTest, FrkIsCnfOfCliqueTree) {
  const Cnf f = f_rk(1, 2);
  const Graph ct = ct_graph(1, 2);
  EXPECT_EQ(f.num_vars(), ct.num_vertices() + ct.num_edges());
  EXPECT_EQ(f.clauses().size(), ct.num_edges());
}

}  // namespace
}  // namespace mwidth
