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


#include "foldkappa/extremal.hpp"

#include <gtest/gtest.h>

#include <stdexcept>
#include <vector>

#include "foldkappa/closedform.hpp"
#include "foldkappa/setcalc.hpp"
#include "oracles.hpp"

namespace foldkappa {
namespace {

Topology fq(int n) { return Topology::build(Kind::folded, n); }
Topology q(int n) { return Topology::build(Kind::hypercube, n); }

std::vector<int> as_ints(const VertexSet& s) {
  std::vector<int> out;
  s.for_each([&](VertexId v) { out.push_back(static_cast<int>(v)); });
  return out;
}

// Frozen from oracle::naive_theta: exhaustive over every g-subset.
constexpr int kThetaQ4[] = {4, 6, 7, 7, 6, 7};
constexpr int kThetaFQ4[] = {5, 8, 9, 8, 9, 8};
constexpr int kThetaFQ5[] = {6, 10, 12, 12, 14, 14, 15};

TEST(ExtremalTest, OracleReproducesFrozenValues) {
  const oracle::Graph q4 = oracle::make_graph(false, 4);
  const oracle::Graph fq4 = oracle::make_graph(true, 4);
  const oracle::Graph fq5 = oracle::make_graph(true, 5);
  for (int g = 1; g <= 6; ++g) {
    EXPECT_EQ(oracle::naive_theta(q4, g).value, kThetaQ4[g - 1]) << "g=" << g;
    EXPECT_EQ(oracle::naive_theta(fq4, g).value, kThetaFQ4[g - 1]) << "g=" << g;
  }
  for (int g = 1; g <= 7; ++g) {
    EXPECT_EQ(oracle::naive_theta(fq5, g).value, kThetaFQ5[g - 1]) << "g=" << g;
  }
}

TEST(ExtremalTest, MatchesBruteForce) {
  for (int n : {4, 5}) {
    for (const bool folded : {false, true}) {
      const Topology t = Topology::build(folded ? Kind::folded : Kind::hypercube, n);
      const oracle::Graph g = oracle::make_graph(folded, n);
      for (int size = 1; size <= 6; ++size) {
        const ThetaResult r = theta_exact(t, size);
        const oracle::ThetaAnswer want = oracle::naive_theta(g, size);
        EXPECT_TRUE(r.exhaustive);
        EXPECT_EQ(r.value, want.value) << "n=" << n << " folded=" << folded << " g=" << size;
        EXPECT_EQ(r.witness.size(), static_cast<std::size_t>(size));
        EXPECT_EQ(static_cast<int>(neighborhood(t, r.witness).size()), r.value);
      }
    }
  }
}

TEST(ExtremalTest, FrozenValues) {
  for (int g = 1; g <= 6; ++g) EXPECT_EQ(theta_exact(q(4), g).value, kThetaQ4[g - 1]);
  for (int g = 1; g <= 7; ++g) EXPECT_EQ(theta_exact(fq(5), g).value, kThetaFQ5[g - 1]);
}

TEST(ExtremalTest, HypercubeMatchesClosedFormBothBranches) {
  for (int g = 1; g <= 6; ++g) {
    const ThetaResult r = theta_exact(q(4), g);
    ASSERT_TRUE(r.exhaustive);
    EXPECT_EQ(r.value, closedform::theta_qn(4, g).value) << "g=" << g;
  }
}

TEST(ExtremalTest, Examples) {
  const ThetaResult pair = theta_exact(fq(5), 2);
  EXPECT_EQ(pair.value, 10);
  EXPECT_TRUE(pair.exhaustive);
  EXPECT_EQ(theta_exact(fq(4), 1).value, 5);
}

// The folded 5-cube beats the star set at g = 3: {0, 3, 12} has a
// neighbourhood of 12 while f_5(3) = 13.
TEST(ExtremalTest, FoldedFiveTripleBelowStar) {
  const ThetaResult r = theta_exact(fq(5), 3);
  EXPECT_EQ(r.value, 12);
  EXPECT_EQ(as_ints(r.witness), std::vector<int>({0, 3, 12}));
  EXPECT_EQ(closedform::f(5, 3).value, 13);
  EXPECT_EQ(theta_star_upper(fq(5), 3), 13);
}

TEST(ExtremalTest, WitnessIsLexSmallestMinimiser) {
  const oracle::Graph g = oracle::make_graph(true, 4);
  for (int size = 1; size <= 5; ++size) {
    EXPECT_EQ(as_ints(theta_exact(fq(4), size).witness), oracle::naive_theta(g, size).witness)
        << "g=" << size;
  }
}

TEST(ExtremalTest, StarUpperBoundsTheta) {
  for (int n = 3; n <= 6; ++n) {
    const Topology t = fq(n);
    for (int g = 1; g <= t.degree() + 1; ++g) {
      SearchBudget b;
      b.max_nodes = 200000;
      EXPECT_LE(theta_exact(t, g, b).value, theta_star_upper(t, g)) << "n=" << n << " g=" << g;
    }
  }
}

TEST(ExtremalTest, StarUpperExamples) {
  EXPECT_EQ(theta_star_upper(fq(8), 9), 37);
  EXPECT_EQ(theta_star_upper(fq(5), 1), 6);
  EXPECT_EQ(theta_star_upper(fq(6), 4), 19);
  EXPECT_THROW(theta_star_upper(fq(5), 8), std::out_of_range);
}

TEST(ExtremalTest, RangeChecks) {
  EXPECT_THROW(theta_exact(fq(4), 0), std::out_of_range);
  EXPECT_THROW(theta_exact(fq(4), 16), std::out_of_range);
  EXPECT_NO_THROW(theta_exact(fq(4), 15));
}

TEST(ExtremalTest, WorkerCountDoesNotChangeResult) {
  for (int g = 2; g <= 7; ++g) {
    SearchBudget one;
    SearchBudget many;
    many.workers = 8;
    const ThetaResult a = theta_exact(fq(6), g, one);
    const ThetaResult b = theta_exact(fq(6), g, many);
    EXPECT_EQ(a.value, b.value);
    EXPECT_EQ(a.witness, b.witness);
    EXPECT_EQ(a.exhaustive, b.exhaustive);
  }
}

TEST(ExtremalTest, BudgetExhaustionKeepsValidWitness) {
  SearchBudget tiny;
  tiny.max_nodes = 10;
  const ThetaResult r = theta_exact(fq(7), 8, tiny);
  EXPECT_FALSE(r.exhaustive);
  EXPECT_EQ(r.witness.size(), 8u);
  EXPECT_EQ(static_cast<int>(neighborhood(fq(7), r.witness).size()), r.value);
}

TEST(ExtremalTest, LargeGraphFallsBackToUpperBound) {
  const ThetaResult r = theta_exact(fq(11), 3);
  EXPECT_FALSE(r.exhaustive);
  EXPECT_EQ(r.value, theta_star_upper(fq(11), 3));
}

// Counts frozen from oracle::private_neighbor_condition over every g-set
// containing vertex 0.
TEST(PrivateNeighborTest, ExhaustiveFoldedFive) {
  const oracle::Graph g = oracle::make_graph(true, 5);
  const int expected_failures[] = {0, 0, 45, 15, 0, 0};
  for (int size = 1; size <= 6; ++size) {
    int failures = 0;
    int checked = 0;
    const std::uint64_t limit = std::uint64_t{1} << 32;
    for (std::uint64_t s = (std::uint64_t{1} << size) - 1; s < limit;
         s = oracle::next_combination(s)) {
      if ((s & 1U) == 0) continue;
      ++checked;
      if (!oracle::private_neighbor_condition(g, s)) ++failures;
    }
    ASSERT_EQ(failures, expected_failures[size - 1]) << "g=" << size;
    const Report r = check_private_neighbor_lemma(fq(5), size, SamplingMode::exhaustive);
    EXPECT_EQ(r.computed["counterexamples"], failures);
    EXPECT_EQ(r.computed["sets_checked"], checked);
    EXPECT_EQ(r.verdict, failures == 0 ? Verdict::pass : Verdict::fail) << "g=" << size;
    if (failures > 0) {
      ASSERT_TRUE(r.witness.has_value());
      EXPECT_FALSE(r.witness->empty());
    }
  }
}

TEST(PrivateNeighborTest, CounterexampleListsTheTriple) {
  const Report r = check_private_neighbor_lemma(fq(5), 3, SamplingMode::exhaustive);
  ASSERT_EQ(r.verdict, Verdict::fail);
  bool found = false;
  for (const auto& set : *r.witness) found = found || set == nlohmann::json({0, 3, 12});
  EXPECT_TRUE(found);
}

TEST(PrivateNeighborTest, SampledPassesOnSixAndSeven) {
  for (int n : {6, 7}) {
    for (int g = 2; g <= n + 1; ++g) {
      const Report r = check_private_neighbor_lemma(fq(n), g, SamplingMode::sampled, 42, 5000);
      EXPECT_EQ(r.verdict, Verdict::pass) << "n=" << n << " g=" << g;
      EXPECT_EQ(r.seed, std::optional<std::uint64_t>(42));
    }
  }
}

TEST(PrivateNeighborTest, SampledIsDeterministicAcrossWorkers) {
  const Report a = check_private_neighbor_lemma(fq(7), 5, SamplingMode::sampled, 42, 20000, 1);
  const Report b = check_private_neighbor_lemma(fq(7), 5, SamplingMode::sampled, 42, 20000, 4);
  EXPECT_EQ(a.computed, b.computed);
  EXPECT_EQ(a.verdict, b.verdict);
}

TEST(PrivateNeighborTest, Preconditions) {
  EXPECT_THROW(check_private_neighbor_lemma(fq(4), 2, SamplingMode::exhaustive),
               std::invalid_argument);
  EXPECT_THROW(check_private_neighbor_lemma(q(5), 2, SamplingMode::exhaustive),
               std::invalid_argument);
  EXPECT_THROW(check_private_neighbor_lemma(fq(5), 7, SamplingMode::exhaustive),
               std::out_of_range);
  EXPECT_THROW(check_private_neighbor_lemma(fq(5), 0, SamplingMode::exhaustive),
               std::out_of_range);
}

}  // namespace
}  // namespace foldkappa
