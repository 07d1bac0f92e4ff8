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

#ifndef FOLDKAPPA_SEARCH_BUDGET_HPP_
#define FOLDKAPPA_SEARCH_BUDGET_HPP_

#include <chrono>
#include <cstdint>

namespace foldkappa {

// Limits for the exhaustive searches. Running out degrades a result to a
// certified upper bound instead of failing. Results are identical for any
// worker count as long as neither limit is reached.
struct SearchBudget {
  std::uint64_t max_nodes = 2'000'000'000;
  std::chrono::milliseconds time_limit{0};  // zero: no wall-clock ceiling
  int workers = 1;
};

}  // namespace foldkappa

#endif  // FOLDKAPPA_SEARCH_BUDGET_HPP_
