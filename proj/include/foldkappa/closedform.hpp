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

// Closed forms for the extremal neighbourhood and component connectivity of
// Q_n and FQ_n. All evaluation goes through twice-the-value integers so the
// half coefficients cancel exactly.

#ifndef FOLDKAPPA_CLOSEDFORM_HPP_
#define FOLDKAPPA_CLOSEDFORM_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace foldkappa::closedform {

enum class Family { f_n_g, theta_qn, ckappa_qn };

struct FormulaValue {
  Family family;
  int n;
  int g;
  std::int64_t value;
  // 1 or 2 for the piecewise families, always 1 for f.
  int branch;
  // Only ever set for f: the inputs lie outside 1 <= g <= n+2.
  bool outside_domain = false;
};

// f_n(g) = g(n+1) − g(g+1)/2 + 1. Any integers are accepted; values outside
// 1 <= g <= n+2 (including g = 0, where the value is 1) come back flagged.
FormulaValue f(int n, int g);

// Extremal neighbourhood of Q_n. Branch 1 for 1 <= g <= n+1, branch 2 for
// n+2 <= g <= 2n. Throws std::out_of_range outside [1, 2n] or for n < 1.
FormulaValue theta_qn(int n, int g);

// (g+1)-component connectivity of Q_n. Branch 1 for 1 <= g <= n with n >= 3,
// branch 2 for n+1 <= g <= 2n−5 with n >= 6. Throws std::out_of_range
// anywhere else.
FormulaValue ckappa_qn(int n, int g);

struct StructureFacts {
  int n = 0;
  bool strictly_increasing = true;   // f(g) < f(g+1), 1 <= g <= n−1
  bool maximum_pair = true;          // f(n) = f(n+1) = n(n+1)/2 + 1
  bool mirror_pair = true;           // f(n−1) = f(n+2)
  bool dominance = true;             // f(n+2) < f(n); f(g) < f(n−1) for g <= n−2
  std::vector<std::string> failures;

  bool all() const {
    return strictly_increasing && maximum_pair && mirror_pair && dominance;
  }
};

// Monotonicity and maximum facts of f over 1 <= g <= n+2. Throws
// std::out_of_range for n < 2.
StructureFacts f_structure_facts(int n);

}  // namespace foldkappa::closedform

#endif  // FOLDKAPPA_CLOSEDFORM_HPP_
