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

#include "foldkappa/cutfinder.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>

#include "detail/bits.hpp"
#include "detail/parallel.hpp"
#include "detail/rng.hpp"
#include "foldkappa/closedform.hpp"
#include "foldkappa/extremal.hpp"
#include "foldkappa/setcalc.hpp"

namespace foldkappa {

namespace {

using Clock = std::chrono::steady_clock;
using detail::Bits;
using detail::NodeTicker;
using detail::run_tasks;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void check_dimension(const Topology& t, const VertexSet& s) {
  if (s.dimension() != t.dimension()) {
    throw std::invalid_argument("vertex set dimension does not match topology");
  }
}

}  // namespace

ComponentProfile components(const Topology& t, const VertexSet& removed) {
  check_dimension(t, removed);
  const std::uint64_t count = t.vertex_count();
  std::vector<char> seen(count, 0);
  removed.for_each([&](VertexId v) { seen[v] = 1; });
  std::vector<VertexId> queue;
  queue.reserve(count);
  ComponentProfile profile;
  for (VertexId start = 0; start < count; ++start) {
    if (seen[start]) continue;
    queue.clear();
    queue.push_back(start);
    seen[start] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      t.for_each_neighbor(queue[head], [&](VertexId u) {
        if (!seen[u]) {
          seen[u] = 1;
          queue.push_back(u);
        }
      });
    }
    profile.sizes.push_back(queue.size());
  }
  std::sort(profile.sizes.begin(), profile.sizes.end(), std::greater<>());
  profile.component_count = profile.sizes.size();
  profile.largest = profile.sizes.empty() ? 0 : profile.sizes.front();
  profile.singleton_count = static_cast<std::size_t>(
      std::count(profile.sizes.begin(), profile.sizes.end(), std::uint64_t{1}));
  return profile;
}

CutWitness is_g_component_cut(const Topology& t, const VertexSet& f, int g) {
  if (g < 2) throw std::out_of_range("a g-component cut needs g >= 2");
  CutWitness w;
  w.cut = f;
  w.profile = components(t, f);
  w.target_g = g;
  w.certified = w.profile.component_count >= static_cast<std::size_t>(g);
  return w;
}

CutWitness star_cut(const Topology& t, VertexId v, int g) {
  if (t.kind() != Kind::folded) {
    throw std::invalid_argument("star_cut is defined on the folded hypercube");
  }
  if (g < 1 || g > t.dimension() + 1) {
    throw std::out_of_range("star_cut needs 1 <= g <= n + 1, got g = " + std::to_string(g));
  }
  // star_set(v, g + 1) minus v is exactly the g lowest neighbours of v.
  VertexSet leaves = star_set(t, v, g + 1);
  leaves.erase(v);
  return is_g_component_cut(t, neighborhood(t, leaves), g + 1);
}

namespace {

std::uint64_t saturating_binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  long double r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * static_cast<long double>(n - k + i) / static_cast<long double>(i);
  }
  constexpr long double kCap = 1e18L;
  return r >= kCap ? static_cast<std::uint64_t>(kCap) : static_cast<std::uint64_t>(r + 0.5L);
}

struct CutCandidate {
  int value = std::numeric_limits<int>::max();
  std::vector<VertexId> members;  // U for the union search, F for cut enumeration

  void offer(int v, std::vector<VertexId> m) {
    if (v < value || (v == value && m < members)) {
      value = v;
      members = std::move(m);
    }
  }
};

template <std::size_t W>
class CkappaSearch {
 public:
  CkappaSearch(const Topology& t, int g, int cap, const CkappaOptions& options,
               std::optional<int> incumbent)
      : t_(t),
        graph_(t),
        g_(g),
        cap_(cap),
        options_(options),
        meter_(options.budget),
        incumbent_(incumbent) {}

  CkappaResult run() {
    CkappaResult result;
    build_theta_table();
    const CutCandidate from_unions = union_search();
    int best = incumbent_.value_or(std::numeric_limits<int>::max());
    std::optional<Bits<W>> best_cut;
    if (!from_unions.members.empty() && from_unions.value < best) {
      best = from_unions.value;
      Bits<W> u;
      Bits<W> closed;
      for (VertexId v : from_unions.members) {
        u.set(v);
        closed |= graph_.closed[v];
      }
      closed.remove(u);
      best_cut = closed;
    }

    const std::uint64_t V = graph_.vertex_count;
    const std::uint64_t max_union =
        static_cast<std::uint64_t>(g_ - 1) * (V - 1) / static_cast<std::uint64_t>(g_);
    bool exhaustive = false;
    if (!meter_.stopped() && static_cast<std::uint64_t>(cap_) >= max_union) {
      exhaustive = true;
      result.certificate = "union-coverage";
    } else if (!meter_.stopped()) {
      const std::uint64_t limit =
          best == std::numeric_limits<int>::max() ? V : static_cast<std::uint64_t>(best);
      std::uint64_t cost = 0;
      for (std::uint64_t s = 1; s < limit; ++s) {
        cost += saturating_binomial(V - 1, s - 1);
        if (cost > meter_.remaining()) break;
      }
      if (cost <= meter_.remaining()) {
        const CutCandidate from_cuts = cut_enumeration(limit);
        if (!meter_.stopped()) {
          exhaustive = true;
          result.certificate = "cut-enumeration";
          if (!from_cuts.members.empty()) {
            best = from_cuts.value;
            Bits<W> f;
            for (VertexId v : from_cuts.members) f.set(v);
            best_cut = f;
          }
        }
      }
    }

    result.exhaustive = exhaustive;
    result.nodes = meter_.nodes() + theta_nodes_;
    if (best_cut) {
      result.value = best;
      result.witness = is_g_component_cut(t_, detail::to_vertex_set(t_.dimension(), *best_cut), g_);
    }
    return result;
  }

  bool union_search_was_cut_short() const { return meter_.stopped(); }

 private:
  // theta_lb_[m] is theta_G(m) when an exhaustive search settled it, else 0.
  void build_theta_table() {
    theta_lb_.assign(static_cast<std::size_t>(cap_) + 1, 0);
    SearchBudget small = options_.budget;
    small.max_nodes = std::min<std::uint64_t>(2'000'000, options_.budget.max_nodes / 8 + 1);
    for (int m = 1; m <= cap_ && static_cast<std::uint64_t>(m) < graph_.vertex_count; ++m) {
      const ThetaResult r = theta_exact(t_, m, small);
      theta_nodes_ += r.nodes;
      if (r.exhaustive) theta_lb_[static_cast<std::size_t>(m)] = r.value;
    }
  }

  int lower_bound(int size, int closed_count) const {
    int lb = std::numeric_limits<int>::max();
    for (int m = size; m <= cap_; ++m) {
      lb = std::min(lb, std::max(closed_count - m, theta_lb_[static_cast<std::size_t>(m)]));
    }
    return lb;
  }

  struct UnionState {
    std::vector<VertexId> members;
    CutCandidate best;
    NodeTicker* ticker = nullptr;
    bool aborted = false;
  };

  CutCandidate union_search() {
    const VertexId V = graph_.vertex_count;
    // Task 0 is U = {0}; task s >= 1 covers every U whose second label is s.
    std::vector<CutCandidate> found(V);
    run_tasks(V, options_.budget.workers, [&](std::size_t task) {
      NodeTicker ticker(meter_);
      UnionState st;
      st.ticker = &ticker;
      st.best.value = incumbent_.value_or(std::numeric_limits<int>::max());
      Bits<W> u;
      u.set(0);
      st.members.push_back(0);
      if (task == 0) {
        visit(st, u, graph_.closed[0], /*expand=*/false);
      } else {
        const VertexId s = static_cast<VertexId>(task);
        if (cap_ < 2) return;
        u.set(s);
        st.members.push_back(s);
        visit(st, u, graph_.closed[0] | graph_.closed[s], /*expand=*/true);
      }
      if (!st.best.members.empty()) found[task] = std::move(st.best);
    });
    CutCandidate best;
    for (CutCandidate& c : found) {
      if (!c.members.empty()) best.offer(c.value, std::move(c.members));
    }
    return best;
  }

  void visit(UnionState& st, Bits<W>& u, const Bits<W>& closed, bool expand) {
    if (st.aborted) return;
    if (!st.ticker->tick()) {
      st.aborted = true;
      return;
    }
    const int size = static_cast<int>(st.members.size());
    const int closed_count = closed.count();
    if (lower_bound(size, closed_count) >= st.best.value) return;
    const int value = closed_count - size;
    if (size >= g_ - 1 && value < st.best.value && !(closed == graph_.everything) &&
        graph_.count_components(u, g_ - 1) >= g_ - 1) {
      st.best.value = value;
      st.best.members = st.members;
    }
    if (!expand || size >= cap_) return;
    for (VertexId y = st.members.back() + 1; y < graph_.vertex_count; ++y) {
      u.set(y);
      st.members.push_back(y);
      visit(st, u, closed | graph_.closed[y], true);
      st.members.pop_back();
      u.reset(y);
      if (st.aborted) return;
    }
  }

  // Smallest F containing vertex 0 with |F| < limit whose removal leaves at
  // least g components; sizes ascend, so the first size with a hit is exact.
  CutCandidate cut_enumeration(std::uint64_t limit) {
    const VertexId V = graph_.vertex_count;
    for (std::uint64_t s = 1; s < limit; ++s) {
      if (V - s < static_cast<std::uint64_t>(g_)) break;
      const int size = static_cast<int>(s);
      std::vector<CutCandidate> found(s == 1 ? 1 : V);
      run_tasks(found.size(), options_.budget.workers, [&](std::size_t task) {
        NodeTicker ticker(meter_);
        std::vector<VertexId> members{0};
        Bits<W> alive = graph_.everything;
        alive.reset(0);
        bool hit = false;
        bool aborted = false;
        auto rec = [&](auto&& self, VertexId from) -> void {
          if (hit || aborted) return;
          if (!ticker.tick()) {
            aborted = true;
            return;
          }
          if (static_cast<int>(members.size()) == size) {
            if (graph_.count_components(alive, g_) >= g_) {
              hit = true;
              found[task].offer(size, members);
            }
            return;
          }
          const VertexId need = static_cast<VertexId>(size - static_cast<int>(members.size()));
          for (VertexId y = from; y + need <= V; ++y) {
            members.push_back(y);
            alive.reset(y);
            self(self, y + 1);
            alive.set(y);
            members.pop_back();
            if (hit || aborted) return;
          }
        };
        if (s == 1) {
          rec(rec, 1);
        } else {
          const VertexId second = static_cast<VertexId>(task);
          if (second == 0 || second + static_cast<VertexId>(size - 2) >= V) return;
          members.push_back(second);
          alive.reset(second);
          rec(rec, second + 1);
        }
      });
      if (meter_.stopped()) return {};
      CutCandidate best;
      for (CutCandidate& c : found) {
        if (!c.members.empty()) best.offer(c.value, std::move(c.members));
      }
      if (!best.members.empty()) return best;
    }
    return {};
  }

  const Topology& t_;
  detail::DenseGraph<W> graph_;
  int g_;
  int cap_;
  CkappaOptions options_;
  detail::SearchMeter meter_;
  std::optional<int> incumbent_;
  std::vector<int> theta_lb_;
  std::uint64_t theta_nodes_ = 0;
};

}  // namespace

CkappaResult ckappa_exact(const Topology& t, int g, const CkappaOptions& options) {
  if (g < 2) throw std::out_of_range("g-component connectivity needs g >= 2");
  const int n = t.dimension();
  const std::uint64_t V = t.vertex_count();
  int cap = options.max_union > 0 ? options.max_union : n + 3;
  cap = std::max(cap, g - 1);
  cap = static_cast<int>(std::min<std::uint64_t>(static_cast<std::uint64_t>(cap), V - 1));

  // Starting point: g − 1 neighbours of vertex 0 cut off by their
  // neighbourhood.
  std::optional<CutWitness> start;
  if (g - 1 <= t.degree()) {
    VertexSet leaves = star_set(t, 0, g);
    leaves.erase(0);
    CutWitness w = is_g_component_cut(t, neighborhood(t, leaves), g);
    if (w.certified) start = std::move(w);
  }

  CkappaResult result;
  if (V > detail::kMaxDenseVertices) {
    if (start) {
      result.value = static_cast<int>(start->cut.size());
      result.witness = std::move(start);
    }
    return result;
  }
  std::optional<int> incumbent;
  if (start) incumbent = static_cast<int>(start->cut.size());
  result = detail::with_mask_width(V, [&](auto width) {
    constexpr std::size_t W = decltype(width)::value;
    return CkappaSearch<W>(t, g, cap, options, incumbent).run();
  });
  if (!result.witness && start) {
    result.value = static_cast<int>(start->cut.size());
    result.witness = std::move(start);
  }
  return result;
}

std::uint64_t large_component_remainder_bound(int n, int g) {
  if (g <= n - 3) return static_cast<std::uint64_t>(g - 1);
  if (g <= n + 1) return static_cast<std::uint64_t>(n + 1);
  return static_cast<std::uint64_t>(g - 1);
}

namespace {

void check_large_component_preconditions(const Topology& t, int g,
                                         std::uint64_t fault_count) {
  const int n = t.dimension();
  if (t.kind() != Kind::hypercube || n < 4) {
    throw std::invalid_argument("large-component check is stated for Q_n with n >= 4");
  }
  if (g < 1 || g > 2 * n - 4) {
    throw std::out_of_range("large-component check needs 1 <= g <= 2n - 4");
  }
  const std::int64_t theta = closedform::theta_qn(n, g).value;
  if (static_cast<std::int64_t>(fault_count) >= theta) {
    throw std::out_of_range("|F| = " + std::to_string(fault_count) +
                            " is not below theta_Qn(g) = " + std::to_string(theta));
  }
}

struct LargeComponentOutcome {
  bool remainder_ok = false;
  bool unique_large = false;
  std::uint64_t remainder = 0;
  std::size_t large_components = 0;

  bool ok() const { return remainder_ok && unique_large; }
};

LargeComponentOutcome evaluate_large_component(const Topology& t, const VertexSet& f,
                                               std::uint64_t bound) {
  const ComponentProfile p = components(t, f);
  const std::uint64_t alive = t.vertex_count() - f.size();
  LargeComponentOutcome out;
  out.remainder = alive - p.largest;
  const std::uint64_t threshold = alive > bound ? alive - bound : 0;
  out.large_components = static_cast<std::size_t>(std::count_if(
      p.sizes.begin(), p.sizes.end(), [&](std::uint64_t s) { return s >= threshold; }));
  out.remainder_ok = out.remainder <= bound;
  out.unique_large = out.large_components == 1;
  return out;
}

}  // namespace

Report large_component_check(const Topology& t, const VertexSet& f, int g) {
  check_dimension(t, f);
  check_large_component_preconditions(t, g, f.size());
  const auto start = Clock::now();
  const int n = t.dimension();
  const std::uint64_t bound = large_component_remainder_bound(n, g);
  const LargeComponentOutcome out = evaluate_large_component(t, f, bound);
  const nlohmann::json params = {{"kind", "q"}, {"n", n}, {"g", g}, {"fault_count", f.size()}};
  const nlohmann::json expected = {{"max_remainder", bound}, {"large_components", 1}};
  const nlohmann::json computed = {{"remainder", out.remainder},
                                   {"large_components", out.large_components},
                                   {"remainder_within_bound", out.remainder_ok}};
  const std::string claim = "large-component/n=" + std::to_string(n) + "/g=" + std::to_string(g);
  Report r;
  if (!out.ok()) {
    r = make_fail(claim, params, expected, computed, set_to_json(f));
  } else {
    r.claim_id = claim;
    r.parameters = params;
    r.expected = expected;
    r.computed = computed;
    r.verdict = Verdict::pass;
  }
  r.elapsed_ms = ms_since(start);
  return r;
}

Report large_component_sweep(const Topology& t, int g, std::uint64_t fault_count,
                             std::uint64_t trials, std::uint64_t seed) {
  check_large_component_preconditions(t, g, fault_count);
  const auto start = Clock::now();
  const int n = t.dimension();
  const std::uint64_t bound = large_component_remainder_bound(n, g);
  std::uint64_t remainder_violations = 0;
  std::uint64_t uniqueness_violations = 0;
  std::uint64_t worst = 0;
  std::optional<VertexSet> first_violation;
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    detail::StreamRng rng(seed, trial);
    const std::vector<VertexId> drawn = detail::sample_subset(rng, t.vertex_count(), fault_count);
    const VertexSet f = VertexSet::of(n, drawn);
    const LargeComponentOutcome out = evaluate_large_component(t, f, bound);
    worst = std::max(worst, out.remainder);
    if (!out.remainder_ok) ++remainder_violations;
    if (!out.unique_large) ++uniqueness_violations;
    if (!out.ok() && !first_violation) first_violation = f;
  }
  const nlohmann::json params = {
      {"kind", "q"}, {"n", n}, {"g", g}, {"fault_count", fault_count}, {"trials", trials}};
  const nlohmann::json expected = {
      {"max_remainder", bound}, {"remainder_violations", 0}, {"uniqueness_violations", 0}};
  const nlohmann::json computed = {{"worst_remainder", worst},
                                   {"remainder_violations", remainder_violations},
                                   {"uniqueness_violations", uniqueness_violations}};
  const std::string claim = "large-component/n=" + std::to_string(n) + "/g=" +
                            std::to_string(g) + "/f=" + std::to_string(fault_count);
  Report r;
  if (first_violation) {
    r = make_fail(claim, params, expected, computed, set_to_json(*first_violation));
  } else {
    r.claim_id = claim;
    r.parameters = params;
    r.expected = expected;
    r.computed = computed;
    r.verdict = Verdict::pass;
  }
  r.seed = seed;
  r.elapsed_ms = ms_since(start);
  return r;
}

}  // namespace foldkappa
