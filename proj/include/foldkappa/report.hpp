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

#ifndef FOLDKAPPA_REPORT_HPP_
#define FOLDKAPPA_REPORT_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "foldkappa/vertex_set.hpp"
#include "json.hpp"

namespace foldkappa {

inline constexpr std::string_view kToolVersion = "0.1.0";

enum class Verdict { pass, fail, upper_bound_only, out_of_range, finding };

std::string_view verdict_name(Verdict v);

// One verified (or refuted) claim. Serialised as a single JSON line whose
// layout is described by schema/report.schema.json.
struct Report {
  std::string claim_id;
  nlohmann::json parameters = nlohmann::json::object();
  nlohmann::json expected;  // null when there is nothing to compare against
  nlohmann::json computed;
  Verdict verdict = Verdict::finding;
  std::optional<nlohmann::json> witness;
  double elapsed_ms = 0.0;
  std::optional<std::uint64_t> seed;
  std::string note;

  nlohmann::json to_json() const;
  std::string to_json_line() const;
};

// FAIL always carries a counterexample; this is the only way to build one.
Report make_fail(std::string claim_id, nlohmann::json parameters,
                 nlohmann::json expected, nlohmann::json computed,
                 nlohmann::json counterexample, std::string note = {});

// Sorted decimal label array.
nlohmann::json set_to_json(const VertexSet& s);

}  // namespace foldkappa

#endif  // FOLDKAPPA_REPORT_HPP_
