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


// Acceptance criteria. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "foldkappa/closedform.hpp"
#include "foldkappa/cutfinder.hpp"
#include "foldkappa/extremal.hpp"
#include "foldkappa/faultsim.hpp"
#include "foldkappa/setcalc.hpp"
#include "foldkappa/topology.hpp"
#include "oracles.hpp"

namespace {

using foldkappa::Kind;
using foldkappa::Topology;
using foldkappa::VertexId;
using foldkappa::VertexSet;
namespace cf = foldkappa::closedform;

Topology fq(int n) { return Topology::build(Kind::folded, n); }
Topology q(int n) { return Topology::build(Kind::hypercube, n); }

// Collects mismatches; the criterion passes when none are recorded.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  template <typename A, typename B>
  void equal(const A& got, const B& want, const std::string& what) {
    if (!(got == want)) {
      std::ostringstream s;
      s << what << ": got " << got << ", expected " << want;
      failures_.push_back(s.str());
    }
  }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  std::vector<std::string> failures_;
};

struct Criterion {
  int id;
  std::string name;
  double budget_seconds;  // 0: no runtime bound
  std::function<void(Check&)> body;
};

void theta_folded_five(Check& c) {
  const Topology t = fq(5);
  for (int g = 1; g <= 7; ++g) {
    const foldkappa::ThetaResult r = foldkappa::theta_exact(t, g);
    const std::string at = "FQ_5 g=" + std::to_string(g);
    c.expect(r.exhaustive, at + ": search not exhaustive");
    c.equal(r.value, cf::f(5, g).value, at);
  }
}

void star_cut_theorem_scale(Check& c) {
  for (int n = 8; n <= 10; ++n) {
    const Topology t = fq(n);
    for (int g = 1; g <= n + 1; ++g) {
      const foldkappa::CutWitness w = foldkappa::star_cut(t, 0, g);
      const std::string at = "FQ_" + std::to_string(n) + " g=" + std::to_string(g);
      c.equal(static_cast<std::int64_t>(w.cut.size()), cf::f(n, g).value, at + " |cut|");
      c.expect(w.certified && w.profile.component_count >= static_cast<std::size_t>(g + 1),
               at + ": fewer than g+1 components");
      c.expect(w.profile.singleton_count >= static_cast<std::size_t>(g),
               at + ": fewer than g singletons");
    }
  }
}

void ckappa_vs_naive(Check& c) {
  for (const bool folded : {true, false}) {
    const Topology t = Topology::build(folded ? Kind::folded : Kind::hypercube, 4);
    const oracle::Graph graph = oracle::make_graph(folded, 4);
    for (int parts = 2; parts <= 3; ++parts) {
      const foldkappa::CkappaResult r = foldkappa::ckappa_exact(t, parts);
      const std::string at =
          std::string(folded ? "FQ_4" : "Q_4") + " g=" + std::to_string(parts);
      c.expect(r.exhaustive && r.value.has_value(), at + ": no exact value");
      c.equal(r.value.value_or(-1), oracle::naive_ckappa(graph, parts), at);
    }
  }
}

void connectivity_floor(Check& c) {
  for (int n = 4; n <= 5; ++n) {
    const foldkappa::CkappaResult r = foldkappa::ckappa_exact(fq(n), 2);
    const std::string at = "FQ_" + std::to_string(n);
    c.expect(r.exhaustive && r.value.has_value(), at + ": no exact value");
    c.equal(r.value.value_or(-1), n + 1, at);
    c.equal(static_cast<std::int64_t>(r.value.value_or(-1)), cf::f(n, 1).value, at + " vs f(n,1)");
  }
}

void theta_hypercube_four(Check& c) {
  const Topology t = q(4);
  for (int g = 1; g <= 6; ++g) {
    const foldkappa::ThetaResult r = foldkappa::theta_exact(t, g);
    const std::string at = "Q_4 g=" + std::to_string(g);
    c.expect(r.exhaustive, at + ": search not exhaustive");
    c.equal(static_cast<std::int64_t>(r.value), cf::theta_qn(4, g).value, at);
  }
}

// The closed form is indexed by the number of extra components, so g parts
// correspond to ckappa_qn(n, g − 1). Values come from the naive oracle.
void ckappa_hypercube(Check& c) {
  struct Case {
    int n;
    int parts;
  };
  for (const Case k : {Case{3, 2}, Case{4, 3}}) {
    const foldkappa::CkappaResult r = foldkappa::ckappa_exact(q(k.n), k.parts);
    const std::string at = "Q_" + std::to_string(k.n) + " g=" + std::to_string(k.parts);
    const int naive = oracle::naive_ckappa(oracle::make_graph(false, k.n), k.parts);
    c.expect(r.exhaustive && r.value.has_value(), at + ": no exact value");
    c.equal(r.value.value_or(-1), naive, at + " vs naive");
    c.equal(static_cast<std::int64_t>(r.value.value_or(-1)),
            cf::ckappa_qn(k.n, k.parts - 1).value, at + " vs closed form");
  }
}

void common_neighbors(Check& c) {
  for (int n = 4; n <= 5; ++n) {
    const Topology t = fq(n);
    for (VertexId u = 0; u < t.vertex_count(); ++u) {
      const std::vector<int> dist = foldkappa::bfs_distances(t, u);
      for (VertexId v = u + 1; v < t.vertex_count(); ++v) {
        const std::size_t count = foldkappa::common_neighbors(t, u, v).size();
        const std::size_t want = dist[v] == 2 ? 2 : 0;
        if (count != want) {
          c.equal(count, want,
                  "FQ_" + std::to_string(n) + " pair " + std::to_string(u) + "," +
                      std::to_string(v));
        }
      }
    }
  }
  const Topology t = fq(5);
  std::vector<std::vector<int>> dist;
  for (VertexId u = 0; u < t.vertex_count(); ++u) dist.push_back(foldkappa::bfs_distances(t, u));
  std::uint64_t exceptions = 0;
  std::string first;
  for (VertexId a = 0; a < t.vertex_count(); ++a) {
    for (VertexId b = a + 1; b < t.vertex_count(); ++b) {
      if (dist[a][b] != 2) continue;
      for (VertexId d = b + 1; d < t.vertex_count(); ++d) {
        if (dist[a][d] != 2 || dist[b][d] != 2) continue;
        VertexSet multi = foldkappa::common_neighbors(t, a, b);
        multi |= foldkappa::common_neighbors(t, a, d);
        multi |= foldkappa::common_neighbors(t, b, d);
        if (multi.size() != 4 && exceptions++ == 0) {
          first = "{" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(d) +
                  "} covers " + std::to_string(multi.size());
        }
      }
    }
  }
  if (exceptions > 0) {
    c.expect(false, "FQ_5 distance-2 triples: " + std::to_string(exceptions) +
                        " exceptions, first " + first);
  }
}

void parity_and_girth(Check& c) {
  for (int n = 2; n <= 10; ++n) {
    c.equal(foldkappa::is_bipartite(fq(n)), n % 2 == 1, "bipartite FQ_" + std::to_string(n));
  }
  for (int n : {4, 6, 8}) {
    const Topology t = fq(n);
    c.equal(foldkappa::odd_girth(t).value_or(-1), n + 1, "odd girth FQ_" + std::to_string(n));
    const auto cycles = foldkappa::shortest_odd_cycles(t);
    c.expect(!cycles.empty(), "no odd cycles listed for FQ_" + std::to_string(n));
    for (const auto& cycle : cycles) {
      int complementary = 0;
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        const VertexId u = cycle[i];
        const VertexId v = cycle[(i + 1) % cycle.size()];
        if (!t.adjacent(u, v)) c.expect(false, "cycle with a non-edge in FQ_" + std::to_string(n));
        if (t.is_complementary_edge(u, v)) ++complementary;
      }
      if (complementary != 1) {
        c.equal(complementary, 1, "complementary edges on a shortest odd cycle");
      }
    }
  }
}

void private_neighbors(Check& c) {
  using foldkappa::SamplingMode;
  using foldkappa::Verdict;
  for (int g = 2; g <= 6; ++g) {
    const foldkappa::Report r =
        foldkappa::check_private_neighbor_lemma(fq(5), g, SamplingMode::exhaustive);
    if (r.verdict != Verdict::pass) {
      c.expect(false, "FQ_5 g=" + std::to_string(g) + " exhaustive: " + r.computed.dump());
    }
  }
  for (int n = 6; n <= 7; ++n) {
    for (int g = 2; g <= n + 1; ++g) {
      const foldkappa::Report r = foldkappa::check_private_neighbor_lemma(
          fq(n), g, SamplingMode::sampled, 20260101, 100000);
      if (r.verdict != Verdict::pass) {
        c.expect(false, "FQ_" + std::to_string(n) + " g=" + std::to_string(g) +
                            " sampled: " + r.computed.dump());
      }
    }
  }
}

void large_component(Check& c) {
  for (int n = 4; n <= 5; ++n) {
    const Topology t = q(n);
    for (int g = 1; g <= 2 * n - 4; ++g) {
      const std::int64_t theta = cf::theta_qn(n, g).value;
      for (std::int64_t size = 0; size < theta; ++size) {
        const foldkappa::Report r = foldkappa::large_component_sweep(
            t, g, static_cast<std::uint64_t>(size), 200, 7919);
        if (r.computed["remainder_violations"] != 0) {
          c.expect(false, "Q_" + std::to_string(n) + " g=" + std::to_string(g) +
                              " |F|=" + std::to_string(size) + ": " + r.computed.dump());
        }
      }
    }
  }
}

void structure_facts(Check& c) {
  for (int n = 2; n <= 16; ++n) {
    const cf::StructureFacts facts = cf::f_structure_facts(n);
    c.expect(facts.all(), "structure facts fail at n=" + std::to_string(n));
    const std::int64_t top = static_cast<std::int64_t>(n) * (n + 1) / 2 + 1;
    c.equal(cf::f(n, n).value, top, "f(n,n) at n=" + std::to_string(n));
    c.equal(cf::f(n, n + 1).value, top, "f(n,n+1) at n=" + std::to_string(n));
  }
}

void faultsim_zeros(Check& c) {
  const Topology t = fq(8);
  const foldkappa::FaultTrialStats one = foldkappa::simulate(t, 8, 10000, 424242, 1);
  const foldkappa::FaultTrialStats again = foldkappa::simulate(t, 8, 10000, 424242, 1);
  const foldkappa::FaultTrialStats eight = foldkappa::simulate(t, 8, 10000, 424242, 8);
  c.equal(one.prob_at_least_g(2), 0.0, "P(disconnected) with 8 faults");
  c.equal(one.mass_violations, std::uint64_t{0}, "mass violations");
  c.expect(foldkappa::to_csv(one) == foldkappa::to_csv(again), "rerun CSV differs");
  c.expect(foldkappa::to_csv(one) == foldkappa::to_csv(eight), "CSV differs at 8 workers");
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "theta of FQ_5 equals f(5,g) for g=1..7", 300, theta_folded_five},
      {2, "star cuts on FQ_8..FQ_10 have size f(n,g) with g singletons", 10,
       star_cut_theorem_scale},
      {3, "exact ckappa equals naive minimum on FQ_4 and Q_4", 600, ckappa_vs_naive},
      {4, "ckappa_2(FQ_n) = n+1 = f(n,1) for n=4,5", 0, connectivity_floor},
      {5, "theta of Q_4 equals its closed form for g=1..6", 120, theta_hypercube_four},
      {6, "exact ckappa of Q_3 and Q_4 equals its closed form", 0, ckappa_hypercube},
      {7, "common neighbours of pairs and distance-2 triples", 0, common_neighbors},
      {8, "bipartiteness, odd girth and complementary edges", 0, parity_and_girth},
      {9, "private-neighbour condition on FQ_5..FQ_7", 0, private_neighbors},
      {10, "large-component remainder bound on Q_4 and Q_5", 0, large_component},
      {11, "monotonicity and maximum of f for n=2..16", 0, structure_facts},
      {12, "faultsim zeros, mass and reproducibility on FQ_8", 0, faultsim_zeros},
  };

  int failed = 0;
  for (const Criterion& criterion : criteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      criterion.body(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (criterion.budget_seconds > 0 && seconds > criterion.budget_seconds) {
      check.expect(false, "runtime " + std::to_string(seconds) + " s over budget");
    }
    const bool ok = check.failures().empty();
    if (!ok) ++failed;
    std::printf("%s criterion %d: %s (%.2f s)\n", ok ? "PASS" : "FAIL", criterion.id,
                criterion.name.c_str(), seconds);
    const std::size_t shown = std::min<std::size_t>(check.failures().size(), 8);
    for (std::size_t i = 0; i < shown; ++i) {
      std::printf("    %s\n", check.failures()[i].c_str());
    }
    if (check.failures().size() > shown) {
      std::printf("    ... %zu more\n", check.failures().size() - shown);
    }
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
