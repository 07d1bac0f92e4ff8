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


// Uniform random vertex faults and the component structure they leave.

#ifndef FOLDKAPPA_FAULTSIM_HPP_
#define FOLDKAPPA_FAULTSIM_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "foldkappa/report.hpp"
#include "foldkappa/topology.hpp"
#include "foldkappa/vertex_set.hpp"

namespace foldkappa {

struct FaultTrialStats {
  int n = 0;
  Kind kind = Kind::folded;
  std::uint64_t fault_count = 0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  // component count -> number of trials
  std::map<std::uint64_t, std::uint64_t> component_count_histogram;
  // Per trial, in trial order.
  std::vector<std::uint64_t> component_counts;
  std::vector<std::uint64_t> largest_sizes;
  std::uint64_t largest_p50 = 0;  // nearest-rank quantiles
  std::uint64_t largest_p99 = 0;
  // Entry g − 1 is the fraction of trials with at least g components, for
  // g = 1 .. (most components seen) + 1.
  std::vector<double> prob_at_least;
  // Trials whose component orders do not add up to 2^n − fault_count.
  std::uint64_t mass_violations = 0;

  double prob_at_least_g(std::uint64_t g) const;
  // Index of the first trial with at least g components, or trials.
  std::uint64_t first_trial_with_at_least(std::uint64_t g) const;
};

// The fault set used by trial `trial`; simulate() draws exactly this set.
VertexSet fault_set_for_trial(const Topology& t, std::uint64_t fault_count, std::uint64_t seed,
                              std::uint64_t trial);

// Throws std::out_of_range when fault_count >= 2^n or trials == 0. The
// result depends only on (t, fault_count, trials, seed).
FaultTrialStats simulate(const Topology& t, std::uint64_t fault_count, std::uint64_t trials,
                         std::uint64_t seed, int workers = 1);

// One row per g in stats.prob_at_least.
std::string to_csv(const FaultTrialStats& stats, bool header = true);

// For g = 1 .. g_max, samples fault counts f(n,g) − 1, f(n,g) and
// f(n,g) + 1 and tabulates the probability of at least g + 1 components.
// On a folded graph with n >= 8 and g <= n − 1 the cell below f(n,g) must be
// exactly zero; any sampled counterexample makes the report FAIL. Without
// such cells the verdict is FINDING.
Report threshold_report(const Topology& t, int g_max, std::uint64_t trials, std::uint64_t seed,
                        int workers = 1);

}  // namespace foldkappa

#endif  // FOLDKAPPA_FAULTSIM_HPP_
