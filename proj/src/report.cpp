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

#include "foldkappa/report.hpp"

#include <cmath>

namespace foldkappa {

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "PASS";
    case Verdict::fail:
      return "FAIL";
    case Verdict::upper_bound_only:
      return "UPPER_BOUND_ONLY";
    case Verdict::out_of_range:
      return "OUT_OF_RANGE";
    case Verdict::finding:
      return "FINDING";
  }
  return "FINDING";
}

nlohmann::json Report::to_json() const {
  nlohmann::json j = {
      {"claim_id", claim_id},
      {"parameters", parameters},
      {"expected", expected},
      {"computed", computed},
      {"verdict", verdict_name(verdict)},
      {"witness", witness ? *witness : nlohmann::json()},
      // Whole microseconds keep the line stable in width and precision.
      {"elapsed_ms", std::round(elapsed_ms * 1000.0) / 1000.0},
      {"tool_version", kToolVersion},
  };
  if (seed) j["seed"] = *seed;
  if (!note.empty()) j["note"] = note;
  return j;
}

std::string Report::to_json_line() const { return to_json().dump(); }

Report make_fail(std::string claim_id, nlohmann::json parameters,
                 nlohmann::json expected, nlohmann::json computed,
                 nlohmann::json counterexample, std::string note) {
  Report r;
  r.claim_id = std::move(claim_id);
  r.parameters = std::move(parameters);
  r.expected = std::move(expected);
  r.computed = std::move(computed);
  r.verdict = Verdict::fail;
  r.witness = std::move(counterexample);
  r.note = std::move(note);
  return r;
}

nlohmann::json set_to_json(const VertexSet& s) { return s.to_vector(); }

}  // namespace foldkappa
