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

// Minimum neighbourhood size over all g-vertex sets, theta_G(g).

#ifndef FOLDKAPPA_EXTREMAL_HPP_
#define FOLDKAPPA_EXTREMAL_HPP_

#include <cstdint>

#include "foldkappa/report.hpp"
#include "foldkappa/search_budget.hpp"
#include "foldkappa/topology.hpp"
#include "foldkappa/vertex_set.hpp"

namespace foldkappa {

struct ThetaResult {
  int g = 0;
  int value = 0;
  VertexSet witness;       // |witness| = g and |N(witness)| = value
  bool exhaustive = false;  // value is theta_G(g), not just an upper bound
  std::uint64_t nodes = 0;
};

// Branch and bound over g-subsets. Sets are reduced under the label maps
// x -> pi(x) xor a (pi a bit permutation): each candidate contains 0 and
// 2^w − 1, where w is the smallest Hamming weight of a pairwise xor in the
// set, and every other member keeps all pairwise xor weights >= w. Partial
// sets P are cut once |C(P)| − g reaches the incumbent, since adding
// members only grows the closed neighbourhood.
//
// Throws std::out_of_range unless 1 <= g <= 2^n − 1. Graphs above 1024
// vertices, or a spent budget, give exhaustive = false with a valid witness.
ThetaResult theta_exact(const Topology& t, int g, const SearchBudget& budget = {});

// |N(star_set(0, g))|. Throws std::out_of_range unless 1 <= g <= degree + 1.
int theta_star_upper(const Topology& t, int g);

enum class SamplingMode { exhaustive, sampled };

// For every tested g-set V' (all sets containing vertex 0 when exhaustive,
// uniform draws when sampled), require some v in V' with either a neighbour
// in V' and |PN(v)| >= n − g + 2, or no neighbour in V' and
// |PN(v)| >= n − g + 1. Counterexamples are listed verbatim (the first 20)
// in the report witness.
//
// Throws std::invalid_argument unless t is folded with n >= 5, and
// std::out_of_range unless 1 <= g <= n + 1.
Report check_private_neighbor_lemma(const Topology& t, int g, SamplingMode mode,
                                    std::uint64_t seed = 0,
                                    std::uint64_t samples = 100000, int workers = 1);

}  // namespace foldkappa

#endif  // FOLDKAPPA_EXTREMAL_HPP_
