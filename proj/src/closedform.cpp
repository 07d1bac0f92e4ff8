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

#include "foldkappa/closedform.hpp"

#include <stdexcept>

namespace foldkappa::closedform {

namespace {

std::int64_t halve_exact(std::int64_t twice, const char* family) {
  if (twice % 2 != 0) {
    throw std::logic_error(std::string("non-integral value in ") + family);
  }
  return twice / 2;
}

[[noreturn]] void out_of_domain(const char* family, int n, int g) {
  throw std::out_of_range(std::string(family) + " undefined at n = " +
                          std::to_string(n) + ", g = " + std::to_string(g));
}

}  // namespace

FormulaValue f(int n, int g) {
  const std::int64_t nn = n;
  const std::int64_t gg = g;
  const std::int64_t twice = 2 * gg * (nn + 1) - gg * (gg + 1) + 2;
  return FormulaValue{Family::f_n_g, n,
                      g,     halve_exact(twice, "f"),
                      1,     n < 1 || g < 1 || g > n + 2};
}

FormulaValue theta_qn(int n, int g) {
  if (n < 1 || g < 1 || g > 2 * n) out_of_domain("theta_qn", n, g);
  const std::int64_t nn = n;
  const std::int64_t gg = g;
  if (g <= n + 1) {
    // −g²/2 + (n − 1/2)g + 1
    const std::int64_t twice = -gg * gg + (2 * nn - 1) * gg + 2;
    return FormulaValue{Family::theta_qn, n, g, halve_exact(twice, "theta_qn"), 1};
  }
  // −g²/2 + (2n − 3/2)g − n² + 2
  const std::int64_t twice = -gg * gg + (4 * nn - 3) * gg - 2 * nn * nn + 4;
  return FormulaValue{Family::theta_qn, n, g, halve_exact(twice, "theta_qn"), 2};
}

FormulaValue ckappa_qn(int n, int g) {
  const std::int64_t nn = n;
  const std::int64_t gg = g;
  if (n >= 3 && g >= 1 && g <= n) {
    const std::int64_t twice = -gg * gg + (2 * nn - 1) * gg + 2;
    return FormulaValue{Family::ckappa_qn, n, g, halve_exact(twice, "ckappa_qn"), 1};
  }
  if (n >= 6 && g >= n + 1 && g <= 2 * n - 5) {
    // −g²/2 + (2n − 5/2)g − n² + 2n + 1
    const std::int64_t twice =
        -gg * gg + (4 * nn - 5) * gg - 2 * nn * nn + 4 * nn + 2;
    return FormulaValue{Family::ckappa_qn, n, g, halve_exact(twice, "ckappa_qn"), 2};
  }
  out_of_domain("ckappa_qn", n, g);
}

StructureFacts f_structure_facts(int n) {
  if (n < 2) out_of_domain("f_structure_facts", n, 0);
  StructureFacts facts;
  facts.n = n;
  auto fv = [n](int g) { return f(n, g).value; };
  auto note = [&facts](std::string what) { facts.failures.push_back(std::move(what)); };

  for (int g = 1; g <= n - 1; ++g) {
    if (!(fv(g) < fv(g + 1))) {
      facts.strictly_increasing = false;
      note("f(" + std::to_string(g) + ") >= f(" + std::to_string(g + 1) + ")");
    }
  }
  const std::int64_t peak = static_cast<std::int64_t>(n) * (n + 1) / 2 + 1;
  if (fv(n) != peak || fv(n + 1) != peak) {
    facts.maximum_pair = false;
    note("f(n) or f(n+1) differs from n(n+1)/2 + 1");
  }
  if (fv(n - 1) != fv(n + 2)) {
    facts.mirror_pair = false;
    note("f(n-1) != f(n+2)");
  }
  if (!(fv(n + 2) < fv(n))) {
    facts.dominance = false;
    note("f(n+2) >= f(n)");
  }
  for (int g = 1; g <= n - 2; ++g) {
    if (!(fv(g) < fv(n - 1))) {
      facts.dominance = false;
      note("f(" + std::to_string(g) + ") >= f(n-1)");
    }
  }
  return facts;
}

}  // namespace foldkappa::closedform
