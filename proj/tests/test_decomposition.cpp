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
#include "mwidth/decomposition.hpp"
#include "mwidth/errors.hpp"
#include "mwidth/instances.hpp"
#include "mwidth/width.hpp"
#include "support/corpus.hpp"

namespace mwidth {
namespace {

TEST(ValidateTest, AcceptsPathDecompositionOfPath) {
  const Graph g = path_graph(4);
  PathDecomposition pd{{{0, 1}, {1, 2}, {2, 3}}};
  const auto v = validate_decomposition(g, pd);
  EXPECT_TRUE(v.valid);
  EXPECT_EQ(v.describe(), "valid");
  EXPECT_EQ(pd.width(), 1);
}

TEST(ValidateTest, ReportsMissingVertex) {
  const Graph g = path_graph(4);
  PathDecomposition pd{{{0, 1}, {1, 2}}};
  const auto v = validate_decomposition(g, pd);
  EXPECT_FALSE(v.valid);
  EXPECT_EQ(v.violated, DecompositionProperty::kUnion);
  EXPECT_EQ(v.witness_vertex, Vertex(3));
}

TEST(ValidateTest, ReportsUncoveredEdge) {
  const Graph g = cycle_graph(4);
  PathDecomposition pd{{{0, 1}, {1, 2}, {2, 3}}};
  const auto v = validate_decomposition(g, pd);
  EXPECT_FALSE(v.valid);
  EXPECT_EQ(v.violated, DecompositionProperty::kContainment);
  EXPECT_EQ(v.witness_edge, Edge(0, 3));
  EXPECT_NE(v.describe().find("edge {0,3}"), std::string::npos);
}

TEST(ValidateTest, ReportsDisconnectedOccurrences) {
  const Graph g = path_graph(3);
  PathDecomposition pd{{{0, 1}, {1, 2}, {0}}};
  const auto v = validate_decomposition(g, pd);
  EXPECT_FALSE(v.valid);
  EXPECT_EQ(v.violated, DecompositionProperty::kConnectedness);
  EXPECT_EQ(v.witness_vertex, Vertex(0));
}

TEST(ValidateTest, DuplicateVertexInsideBagIsHarmless) {
  const Graph g = path_graph(2);
  PathDecomposition pd{{{0, 1, 1}}};
  EXPECT_TRUE(validate_decomposition(g, pd).valid);
}

TEST(ValidateTest, StructuralErrorsThrow) {
  const Graph g = path_graph(3);
  TreeDecomposition cyc{{{0, 1}, {1, 2}, {0, 2}}, {{0, 1}, {1, 2}, {2, 0}}};
  EXPECT_THROW(validate_decomposition(g, cyc), MalformedInput);
  TreeDecomposition forest{{{0, 1}, {1, 2}, {2}}, {{0, 1}}};
  EXPECT_THROW(validate_decomposition(g, forest), MalformedInput);
  TreeDecomposition looped{{{0, 1}, {1, 2}}, {{0, 0}}};
  EXPECT_THROW(validate_decomposition(g, looped), MalformedInput);
  TreeDecomposition foreign{{{0, 1, 7}, {1, 2}}, {{0, 1}}};
  EXPECT_THROW(validate_decomposition(g, foreign), MalformedInput);
  TreeDecomposition dangling{{{0, 1}, {1, 2}}, {{0, 5}}};
  EXPECT_THROW(validate_decomposition(g, dangling), MalformedInput);
}

TEST(ValidateTest, EmptyGraph) {
  EXPECT_TRUE(validate_decomposition(Graph(0), PathDecomposition{}).valid);
  EXPECT_FALSE(validate_decomposition(Graph(1), PathDecomposition{}).valid);
  EXPECT_EQ(PathDecomposition{}.width(), -1);
}

TEST(CtreeTest, WidthAndValidity) {
  for (std::size_t r = 0; r <= 3; ++r) {
    for (std::size_t k = 1; k <= 4; ++k) {
      const CtreeDecomposition d = ctree_decomposition(r, k);
      EXPECT_TRUE(validate_decomposition(ct_graph(r, k), d.base).valid) << r << "," << k;
      const auto v = validate_decomposition(primal_graph(f_rk(r, k)), d.extended);
      EXPECT_TRUE(v.valid) << r << "," << k << ": " << v.describe();
      // Edge bags have three vertices, so the 2k-1 bound needs k >= 2.
      if (k >= 2) {
        EXPECT_LE(d.extended.width(), long(2 * k - 1));
      }
      if (r > 0) {
        EXPECT_EQ(d.base.width(), long(2 * k - 1));
      }
    }
  }
  EXPECT_EQ(ctree_decomposition(1, 2).extended.width(), 3);
  EXPECT_THROW(ctree_decomposition(1, 0), ParameterError);
}

TEST(ConversionTest, OrderingFromPathDecomposition) {
  const Graph g = path_graph(4);
  PathDecomposition pd{{{2, 3}, {1, 2}, {0, 1}}};
  EXPECT_EQ(ordering_from_path_decomposition(g, pd), Ordering({2, 3, 1, 0}));
  PathDecomposition bad{{{2, 3}, {0, 1}}};
  EXPECT_THROW(ordering_from_path_decomposition(g, bad), ValidationError);
}

TEST(ConversionTest, PathDecompositionFromInterleavedOrdering) {
  const Graph g = path_graph(10);
  const Ordering sv = testing::interleaved_path_order(10);
  const PathDecomposition pd = path_decomposition_from_ordering(g, sv);
  EXPECT_EQ(pd.bags.size(), 10u);
  EXPECT_TRUE(validate_decomposition(g, pd).valid);
  EXPECT_LE(pd.width(), 2 * long(mw_of_ordering(g, sv).value));
}

TEST(ConversionTest, SingleVertexAndEmpty) {
  EXPECT_EQ(path_decomposition_from_ordering(Graph(1), Ordering::identity(1)).bags.size(), 1u);
  EXPECT_TRUE(path_decomposition_from_ordering(Graph(0), Ordering::identity(0)).bags.empty());
}

TEST(ConversionProperty, RoundTripsOnCorpus) {
  for (const auto& entry : testing::random_corpus()) {
    const Graph& g = entry.g;
    const WidthReport mw = matching_width_exact(g);
    const PathDecomposition from_mw = path_decomposition_from_ordering(g, *mw.witness_ordering);
    ASSERT_TRUE(validate_decomposition(g, from_mw).valid) << "graph " << entry.index;
    ASSERT_LE(from_mw.width(), 2 * long(mw.value));

    const PathDecomposition opt = optimal_path_decomposition(g);
    ASSERT_TRUE(validate_decomposition(g, opt).valid);
    const long pw = long(pathwidth_exact(g).value);
    ASSERT_EQ(opt.width(), pw);
    const Ordering back = ordering_from_path_decomposition(g, opt);
    ASSERT_LE(long(mw_of_ordering(g, back).value), pw + 1) << "graph " << entry.index;

    // Any ordering gives a valid decomposition, not only optimal ones.
    std::vector<Vertex> rev(entry.n);
    std::iota(rev.rbegin(), rev.rend(), Vertex{0});
    const PathDecomposition from_rev = path_decomposition_from_ordering(g, Ordering(rev));
    ASSERT_TRUE(validate_decomposition(g, from_rev).valid);
    ASSERT_LE(from_rev.width(), 2 * long(mw_of_ordering(g, Ordering(rev)).value));
  }
}

TEST(ConversionProperty, LayoutDecompositionWidthIsVertexSeparation) {
  for (const auto& entry : testing::random_corpus()) {
    if (entry.n == 0) continue;
    const Ordering sv = Ordering::identity(entry.n);
    const PathDecomposition pd = path_decomposition_from_layout(entry.g, sv);
    ASSERT_TRUE(validate_decomposition(entry.g, pd).valid);
    ASSERT_EQ(pd.width(), long(vertex_separation_of_ordering(entry.g, sv).value));
  }
}

}  // namespace
}  // namespace mwidth
