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


// Report builders for the theta and cκ computations, and the property
// suites behind `foldkappa verify`.

#ifndef FOLDKAPPA_VERIFY_HPP_
#define FOLDKAPPA_VERIFY_HPP_

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string_view>

#include "foldkappa/cutfinder.hpp"
#include "foldkappa/report.hpp"
#include "foldkappa/search_budget.hpp"
#include "foldkappa/topology.hpp"

namespace foldkappa {

enum class ThetaMode { exact, star, formula };
enum class CkappaMode { exact, upper, formula };

std::optional<ThetaMode> parse_theta_mode(std::string_view name);
std::optional<CkappaMode> parse_ckappa_mode(std::string_view name);

// exact: theta_exact compared with f (folded, n >= 5, g <= n+2) or the
// hypercube closed form (g <= 2n); anything else is FINDING, and a spent
// budget is UPPER_BOUND_ONLY. star: the star-set upper bound. formula: the
// closed form alone.
//
// Throws std::out_of_range for g outside the mode's domain.
Report theta_report(const Topology& t, int g, ThetaMode mode, const SearchBudget& budget = {});

// Reports on cuts leaving at least g + 1 components. exact: ckappa_exact,
// compared with f on folded graphs with n >= 8 and g <= n−1, or with the
// hypercube closed form on its domain. upper: star_cut (folded only).
// formula: the closed form alone.
Report ckappa_report(const Topology& t, int g, CkappaMode mode, const CkappaOptions& options = {});

enum class Suite { lemmas, theta, ckappa, structure, all };

std::optional<Suite> parse_suite(std::string_view name);

struct VerifyOptions {
  int n_first = 4;
  int n_last = 5;
  std::uint64_t seed = 0;
  SearchBudget budget{20'000'000, std::chrono::milliseconds{0}, 1};
  std::uint64_t samples = 100000;    // private-neighbour draws for n >= 6
  std::uint64_t sweep_trials = 200;  // random fault sets per large-component cell
};

struct VerifySummary {
  std::map<Verdict, std::uint64_t> counts;
  std::uint64_t failures() const;
};

using ReportSink = std::function<void(const Report&)>;

// Runs every claim of the suite for n in [n_first, n_last], handing each
// Report to the sink as soon as it is ready. Claims whose dimension floor is
// not met are skipped.
VerifySummary run_verify(Suite suite, const VerifyOptions& options, const ReportSink& sink);

}  // namespace foldkappa

#endif  // FOLDKAPPA_VERIFY_HPP_
