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

// Component structure under vertex deletion, g-component cuts, and exact
// g-component connectivity.

#ifndef FOLDKAPPA_CUTFINDER_HPP_
#define FOLDKAPPA_CUTFINDER_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "foldkappa/report.hpp"
#include "foldkappa/search_budget.hpp"
#include "foldkappa/topology.hpp"
#include "foldkappa/vertex_set.hpp"

namespace foldkappa {

struct ComponentProfile {
  std::size_t component_count = 0;
  std::vector<std::uint64_t> sizes;  // descending
  std::uint64_t largest = 0;
  std::size_t singleton_count = 0;
};

struct CutWitness {
  VertexSet cut;
  ComponentProfile profile;
  int target_g = 0;
  bool certified = false;  // profile.component_count >= target_g
};

// Components of t − removed, by BFS over the surviving vertices.
ComponentProfile components(const Topology& t, const VertexSet& removed);

// Throws std::out_of_range for g < 2.
CutWitness is_g_component_cut(const Topology& t, const VertexSet& f, int g);

// N(S) for S the g lowest-labelled neighbours of v, checked against g + 1.
// Throws std::invalid_argument for a hypercube and std::out_of_range unless
// 1 <= g <= n + 1.
CutWitness star_cut(const Topology& t, VertexId v, int g);

struct CkappaOptions {
  SearchBudget budget;
  // Largest union U tried by the union search; 0 means n + 3.
  int max_union = 0;
};

struct CkappaResult {
  std::optional<int> value;           // empty: no g-component cut was found
  std::optional<CutWitness> witness;  // always certified when present
  bool exhaustive = false;
  // How exactness was established: "union-coverage", "cut-enumeration",
  // or "none".
  std::string certificate = "none";
  std::uint64_t nodes = 0;
};

// cκ_g(t) as min |N(U)| over vertex sets U that induce at least g − 1
// components and leave V − C(U) non-empty. U is enumerated (containing
// vertex 0, ascending labels, |U| <= max_union) with pruning by the
// incumbent and by a table of exact theta values. The result is exact when
// max_union covers every union of the g − 1 smallest components of a cut,
// that is max_union >= floor((g−1)(2^n − 1)/g); otherwise, budget
// permitting, every cut F containing vertex 0 with |F| below the incumbent
// is enumerated to settle it.
//
// Throws std::out_of_range for g < 2.
CkappaResult ckappa_exact(const Topology& t, int g, const CkappaOptions& options = {});

// Hypercube large-component property: for |F| below the closed-form theta
// of Q_n, the components other than the largest have total order at most
// g − 1 (g <= n−3 or n+2 <= g <= 2n−4) or n + 1 (n−2 <= g <= n+1), and
// exactly one component has order at least 2^n − |F| − bound. The two
// conditions are reported separately.
//
// Throws std::invalid_argument unless t is a hypercube with n >= 4, and
// std::out_of_range when g is outside [1, 2n−4] or |F| is not below the
// theta value.
Report large_component_check(const Topology& t, const VertexSet& f, int g);

// The same check over `trials` uniformly random F of the given size.
Report large_component_sweep(const Topology& t, int g, std::uint64_t fault_count,
                             std::uint64_t trials, std::uint64_t seed);

// Bound on the non-largest components' total order used above.
std::uint64_t large_component_remainder_bound(int n, int g);

}  // namespace foldkappa

#endif  // FOLDKAPPA_CUTFINDER_HPP_
