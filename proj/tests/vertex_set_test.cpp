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


#include "foldkappa/vertex_set.hpp"

#include <gtest/gtest.h>

#include <stdexcept>
#include <vector>

namespace foldkappa {
namespace {

TEST(VertexSetTest, InsertEraseKeepsCount) {
  VertexSet s(4);
  EXPECT_TRUE(s.empty());
  s.insert(3);
  s.insert(3);
  s.insert(15);
  EXPECT_EQ(s.size(), 2u);
  EXPECT_TRUE(s.contains(15));
  EXPECT_FALSE(s.contains(16));
  s.erase(3);
  s.erase(3);
  EXPECT_EQ(s.size(), 1u);
  EXPECT_EQ(s.to_vector(), std::vector<VertexId>({15}));
}

TEST(VertexSetTest, RejectsLabelsOutsideUniverse) {
  VertexSet s(3);
  EXPECT_THROW(s.insert(8), std::out_of_range);
  EXPECT_THROW(s.erase(8), std::out_of_range);
}

TEST(VertexSetTest, SetAlgebraAcrossWordBoundary) {
  const VertexSet a = VertexSet::of(8, {1, 63, 64, 200});
  const VertexSet b = VertexSet::of(8, {63, 64, 65});
  EXPECT_EQ((a | b).to_vector(), std::vector<VertexId>({1, 63, 64, 65, 200}));
  EXPECT_EQ((a & b).to_vector(), std::vector<VertexId>({63, 64}));
  EXPECT_EQ((a - b).to_vector(), std::vector<VertexId>({1, 200}));
  EXPECT_EQ((a | b).size(), 5u);
  EXPECT_TRUE((a & b).is_subset_of(a));
  EXPECT_FALSE(a.is_subset_of(b));
  EXPECT_TRUE(a.intersects(b));
  EXPECT_FALSE((a - b).intersects(b));
}

TEST(VertexSetTest, FullSetCountsEveryLabel) {
  for (int n = 0; n <= 12; ++n) {
    const VertexSet s = VertexSet::full(n);
    EXPECT_EQ(s.size(), std::size_t{1} << n) << "n=" << n;
    EXPECT_TRUE(s.contains((VertexId{1} << n) - 1));
  }
}

TEST(VertexSetTest, MismatchedDimensionsThrow) {
  VertexSet a(3);
  const VertexSet b(4);
  EXPECT_THROW(a |= b, std::invalid_argument);
  EXPECT_THROW((void)a.is_subset_of(b), std::invalid_argument);
}

TEST(VertexSetTest, ForEachVisitsAscending) {
  const VertexSet s = VertexSet::of(7, {90, 2, 64, 0});
  std::vector<VertexId> seen;
  s.for_each([&](VertexId v) { seen.push_back(v); });
  EXPECT_EQ(seen, std::vector<VertexId>({0, 2, 64, 90}));
}

TEST(VertexSetTest, EqualityIgnoresConstructionOrder) {
  EXPECT_EQ(VertexSet::of(5, {4, 1, 9}), VertexSet::of(5, {9, 4, 1}));
  EXPECT_FALSE(VertexSet::of(5, {4}) == VertexSet::of(5, {5}));
}

}  // namespace
}  // namespace foldkappa
