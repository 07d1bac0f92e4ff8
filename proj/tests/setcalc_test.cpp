// Copyright 2026 The foldkappa Authors
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


#include "foldkappa/setcalc.hpp"

#include <gtest/gtest.h>

#include <random>
#include <stdexcept>
#include <vector>

#include "foldkappa/closedform.hpp"
#include "oracles.hpp"

namespace foldkappa {
namespace {

Topology fq(int n) { return Topology::build(Kind::folded, n); }

TEST(SetcalcTest, NeighborhoodExamples) {
  EXPECT_EQ(neighborhood(fq(5), VertexSet::of(5, {0, 1})).size(), 10u);
  EXPECT_EQ(neighborhood(fq(4), VertexSet::of(4, {0b0000, 0b0011})).size(), 8u);
  EXPECT_TRUE(neighborhood(fq(4), VertexSet(4)).empty());
}

TEST(SetcalcTest, ClosedNeighborhoodExamples) {
  const Topology t = fq(4);
  EXPECT_EQ(closed_neighborhood(t, VertexSet::of(4, {0})).size(), 6u);
  EXPECT_TRUE(closed_neighborhood(t, VertexSet(4)).empty());
  EXPECT_EQ(closed_neighborhood(t, VertexSet::full(4)), VertexSet::full(4));
}

TEST(SetcalcTest, RandomSetsNeighborhoodInvariants) {
  std::mt19937_64 rng(1234);
  for (int n = 2; n <= 10; ++n) {
    for (const Kind kind : {Kind::hypercube, Kind::folded}) {
      const Topology t = Topology::build(kind, n);
      for (int trial = 0; trial < 20; ++trial) {
        VertexSet a(n);
        const int k = static_cast<int>(rng() % 12);
        for (int i = 0; i < k; ++i) a.insert(static_cast<VertexId>(rng() % t.vertex_count()));
        const VertexSet open = neighborhood(t, a);
        EXPECT_FALSE(open.intersects(a));
        EXPECT_EQ(closed_neighborhood(t, a), open | a);
        // Every member of N(a) has a neighbour in a.
        open.for_each([&](VertexId u) {
          EXPECT_TRUE(t.neighbors(u).intersects(a));
        });
      }
    }
  }
}

TEST(SetcalcTest, CommonNeighborExamples) {
  const Topology t = fq(4);
  EXPECT_EQ(common_neighbors(t, 0b0000, 0b0011).to_vector(), std::vector<VertexId>({1, 2}));
  EXPECT_EQ(common_neighbors(t, 0b0000, 0b0111).to_vector(), std::vector<VertexId>({8, 15}));
  EXPECT_TRUE(common_neighbors(t, 0b0000, 0b0001).empty());
  EXPECT_THROW(common_neighbors(t, 3, 3), std::invalid_argument);
}

// Exhaustive over all pairs: two common neighbours at distance 2, none
// otherwise, compared with the brute-force adjacency matrix.
TEST(SetcalcTest, CommonNeighborsAllPairs) {
  for (int n : {4, 5}) {
    const Topology t = fq(n);
    const oracle::Graph g = oracle::make_graph(true, n);
    const auto d = oracle::floyd_warshall(g);
    for (VertexId u = 0; u < t.vertex_count(); ++u) {
      for (VertexId v = u + 1; v < t.vertex_count(); ++v) {
        int brute = 0;
        for (int w = 0; w < g.vertex_count; ++w) brute += g.adj[u][w] && g.adj[v][w];
        const auto got = static_cast<int>(common_neighbors(t, u, v).size());
        ASSERT_EQ(got, brute);
        ASSERT_EQ(got, d[u][v] == 2 ? 2 : 0) << "n=" << n << " u=" << u << " v=" << v;
      }
    }
  }
}

TEST(SetcalcTest, PrivateNeighborExamples) {
  const Topology t = fq(4);
  EXPECT_EQ(private_neighbors(t, 5, VertexSet::of(4, {5})), t.neighbors(5));
  EXPECT_EQ(private_neighbors(t, 0, VertexSet::of(4, {0b0000, 0b0011})).to_vector(),
            std::vector<VertexId>({0b0100, 0b1000, 0b1111}));
  EXPECT_EQ(private_neighbors(t, 0, VertexSet::of(4, {0b0000, 0b0001})).to_vector(),
            std::vector<VertexId>({0b0010, 0b0100, 0b1000, 0b1111}));
  EXPECT_THROW(private_neighbors(t, 1, VertexSet::of(4, {0})), std::invalid_argument);
}

TEST(SetcalcTest, PrivateNeighborsMatchDefinition) {
  std::mt19937_64 rng(99);
  for (int n = 3; n <= 8; ++n) {
    const Topology t = fq(n);
    for (int trial = 0; trial < 50; ++trial) {
      VertexSet vp(n);
      const int k = 1 + static_cast<int>(rng() % 6);
      for (int i = 0; i < k; ++i) vp.insert(static_cast<VertexId>(rng() % t.vertex_count()));
      vp.for_each([&](VertexId v) {
        const VertexSet pn = private_neighbors(t, v, vp);
        VertexSet rest = vp;
        rest.erase(v);
        EXPECT_TRUE(pn.is_subset_of(t.neighbors(v)));
        EXPECT_FALSE(pn.intersects(vp));
        EXPECT_FALSE(pn.intersects(neighborhood(t, rest)));
        EXPECT_EQ(pn, t.neighbors(v) - neighborhood(t, rest) - vp);
      });
    }
  }
}

TEST(SetcalcTest, StarSetShapeAndRange) {
  const Topology t = fq(8);
  EXPECT_EQ(star_set(t, 77, 1), VertexSet::of(8, {77}));
  const VertexSet s = star_set(t, 0, 3);
  EXPECT_EQ(s.to_vector(), std::vector<VertexId>({0, 1, 2}));
  EXPECT_THROW(star_set(t, 0, 0), std::out_of_range);
  EXPECT_THROW(star_set(t, 0, 11), std::out_of_range);
}

TEST(SetcalcTest, StarSetExamples) {
  EXPECT_EQ(neighborhood(fq(5), star_set(fq(5), 0, 3)).size(), 13u);
  EXPECT_EQ(neighborhood(fq(8), star_set(fq(8), 0, 3)).size(), 22u);
}

// |N(star)| = f for every vertex, 1 <= g <= n+2, n = 5..10.
TEST(SetcalcTest, StarNeighborhoodMatchesFormulaEverywhere) {
  for (int n = 5; n <= 10; ++n) {
    const Topology t = fq(n);
    for (int g = 1; g <= n + 2; ++g) {
      const auto want = static_cast<std::size_t>(oracle::f_value(n, g));
      ASSERT_EQ(want, static_cast<std::size_t>(closedform::f(n, g).value));
      for (VertexId v = 0; v < t.vertex_count(); ++v) {
        ASSERT_EQ(neighborhood(t, star_set(t, v, g)).size(), want)
            << "n=" << n << " g=" << g << " v=" << v;
      }
    }
  }
}

}  // namespace
}  // namespace foldkappa
