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
#include "support/corpus.hpp"

namespace mwidth {
namespace {

TEST(TreeTest, HeapNumbering) {
  const Graph t = complete_binary_tree(2);
  EXPECT_EQ(t.num_vertices(), 7u);
  EXPECT_EQ(t.num_edges(), 6u);
  EXPECT_TRUE(t.has_edge(0, 1));
  EXPECT_TRUE(t.has_edge(2, 6));
  EXPECT_EQ(tree_parent(5), 2u);
  EXPECT_EQ(complete_binary_tree(0).num_vertices(), 1u);
  EXPECT_THROW(complete_binary_tree(25), ParameterError);
}

TEST(CliqueTreeTest, Structure) {
  const Graph g = ct_graph(1, 2);
  EXPECT_EQ(g.num_vertices(), 6u);
  // Three 2-cliques plus two complete joins of 4 edges.
  EXPECT_EQ(g.num_edges(), 3u + 8u);
  EXPECT_TRUE(g.has_edge(ct_vertex(0, 0, 2), ct_vertex(0, 1, 2)));
  EXPECT_TRUE(g.has_edge(ct_vertex(0, 1, 2), ct_vertex(2, 0, 2)));
  EXPECT_FALSE(g.has_edge(ct_vertex(1, 0, 2), ct_vertex(2, 0, 2)));
  EXPECT_EQ(ct_graph(2, 1), complete_binary_tree(2));
  EXPECT_THROW(ct_graph(1, 0), ParameterError);
}

TEST(CliqueTreeTest, ClosedFormCounts) {
  for (std::size_t r = 0; r <= 4; ++r) {
    for (std::size_t k = 1; k <= 4; ++k) {
      const Graph g = ct_graph(r, k);
      EXPECT_EQ(g.num_vertices(), ct_vertex_count(r, k));
      EXPECT_EQ(g.num_edges(), ct_edge_count(r, k));
    }
  }
}

TEST(FamilyTest, SmallGraphs) {
  EXPECT_EQ(path_graph(1).num_edges(), 0u);
  EXPECT_EQ(path_graph(5).num_edges(), 4u);
  EXPECT_EQ(cycle_graph(5).num_edges(), 5u);
  EXPECT_THROW(cycle_graph(2), ParameterError);
  EXPECT_EQ(complete_graph(5).num_edges(), 10u);
  EXPECT_EQ(grid_graph(2, 3).num_edges(), 7u);
  EXPECT_THROW(grid_graph(0, 3), ParameterError);
  EXPECT_EQ(disjoint_edges(2), Graph(4, {{0, 1}, {2, 3}}));
}

TEST(RandomGraphTest, SeededAndBounded) {
  EXPECT_EQ(random_graph(8, 0.5, 42), random_graph(8, 0.5, 42));
  EXPECT_EQ(random_graph(6, 0.0, 1).num_edges(), 0u);
  EXPECT_EQ(random_graph(6, 1.0, 1).num_edges(), 15u);
  EXPECT_THROW(random_graph(4, 1.5, 0), ParameterError);
  EXPECT_THROW(random_graph(4, -0.1, 0), ParameterError);
}

// Pins the generator stream so corpus-based results stay comparable.
TEST(RandomGraphTest, FrozenCorpusSample) {
  const auto& corpus = testing::random_corpus();
  ASSERT_EQ(corpus.size(), 200u);
  EXPECT_EQ(corpus[7].n, 8u);
  EXPECT_DOUBLE_EQ(corpus[7].p, 0.2);
  EXPECT_EQ(corpus[15].n, 8u);
  EXPECT_DOUBLE_EQ(corpus[15].p, 0.35);
  std::size_t total_edges = 0;
  for (const auto& c : corpus) total_edges += c.g.num_edges();
  EXPECT_GT(total_edges, 0u);
  EXPECT_EQ(corpus[199].seed, 1199u);
}

TEST(GenerateGraphTest, NamedKinds) {
  GraphParams p;
  p.n = 4;
  EXPECT_EQ(generate_graph(parse_graph_kind("path"), p), path_graph(4));
  EXPECT_EQ(generate_graph(parse_graph_kind("complete"), p), complete_graph(4));
  EXPECT_EQ(generate_graph(parse_graph_kind("matching"), p), disjoint_edges(4));
  EXPECT_EQ(generate_graph(parse_graph_kind("empty"), p), Graph(4));
  p.r = 1;
  p.k = 2;
  EXPECT_EQ(generate_graph(parse_graph_kind("ct"), p), ct_graph(1, 2));
  EXPECT_EQ(generate_graph(parse_graph_kind("tree"), p), complete_binary_tree(1));
  p.rows = 2;
  p.cols = 2;
  EXPECT_EQ(generate_graph(parse_graph_kind("grid"), p), grid_graph(2, 2));
  p.p = 0.5;
  EXPECT_EQ(generate_graph(GraphKind::kRandom, p, 9), random_graph(4, 0.5, 9));
  EXPECT_THROW(parse_graph_kind("petersen"), ParameterError);
}

TEST(VariableCountTest, ClosedFormsAgreeWithConstruction) {
  for (std::uint64_t r = 0; r <= 5; ++r) {
    for (std::uint64_t k = 1; k <= 5; ++k) {
      const std::uint64_t count = f_rk_variable_count(r, k);
      EXPECT_EQ(count, ct_vertex_count(r, k) + ct_edge_count(r, k));
      EXPECT_LE(count, f_rk_variable_bound(r, k)) << r << "," << k;
      if (r <= 3 && k <= 3) {
        EXPECT_EQ(f_rk(r, k).num_vars(), count);
      }
    }
  }
  for (std::int64_t r = 1; r <= 4; ++r) {
    EXPECT_EQ(std::uint64_t(f_rr_variable_count(r)), f_rk_variable_count(r, r));
  }
  // F_{1,1} is CNF(P_3): 3 vertex and 2 edge variables.
  EXPECT_EQ(f_rr_variable_count(1), 5);
}

}  // namespace
}  // namespace mwidth
