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

#include "foldkappa/extremal.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "detail/bits.hpp"
#include "detail/parallel.hpp"
#include "detail/rng.hpp"
#include "foldkappa/setcalc.hpp"

namespace foldkappa {

namespace {

using Clock = std::chrono::steady_clock;
using detail::NodeTicker;
using detail::run_tasks;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// First g vertices in BFS order from 0: always available as an upper bound.
VertexSet bfs_prefix(const Topology& t, int g) {
  VertexSet s(t.dimension());
  std::vector<VertexId> queue{0};
  s.insert(0);
  for (std::size_t head = 0; head < queue.size() && s.size() < static_cast<std::size_t>(g);
       ++head) {
    t.for_each_neighbor(queue[head], [&](VertexId u) {
      if (s.size() < static_cast<std::size_t>(g) && !s.contains(u)) {
        s.insert(u);
        queue.push_back(u);
      }
    });
  }
  return s;
}

struct Incumbent {
  int value = std::numeric_limits<int>::max();
  std::vector<VertexId> members;  // sorted

  void offer(int v, std::vector<VertexId> m) {
    std::sort(m.begin(), m.end());
    if (v < value || (v == value && m < members)) {
      value = v;
      members = std::move(m);
    }
  }
};

Incumbent initial_upper_bound(const Topology& t, int g) {
  Incumbent inc;
  auto offer = [&](const VertexSet& s) {
    inc.offer(static_cast<int>(neighborhood(t, s).size()), s.to_vector());
  };
  if (g <= t.degree() + 1) offer(star_set(t, 0, g));
  offer(bfs_prefix(t, g));
  return inc;
}

template <std::size_t W>
class ThetaSearch {
 public:
  ThetaSearch(const Topology& t, int g, const SearchBudget& budget, int upper)
      : t_(t), graph_(t), g_(g), budget_(budget), meter_(budget), upper_(upper) {
    const int n = t.dimension();
    candidates_.resize(static_cast<std::size_t>(n) + 1);
    for (int w = 1; w <= n; ++w) {
      const VertexId base = (VertexId{1} << w) - 1;
      for (VertexId y = 1; y < graph_.vertex_count; ++y) {
        if (y == base) continue;
        if (std::popcount(y) >= w && std::popcount(y ^ base) >= w) {
          candidates_[static_cast<std::size_t>(w)].push_back(y);
        }
      }
      const auto& list = candidates_[static_cast<std::size_t>(w)];
      if (g_ == 2) {
        tasks_.push_back({w, -1});
      } else {
        for (std::size_t i = 0; i < list.size(); ++i) {
          if (list.size() - i < static_cast<std::size_t>(g_ - 2)) break;
          tasks_.push_back({w, static_cast<int>(i)});
        }
      }
    }
  }

  ThetaResult run() {
    std::vector<Incumbent> found(tasks_.size());
    run_tasks(tasks_.size(), budget_.workers,
              [&](std::size_t i) { found[i] = run_task(tasks_[i]); });
    Incumbent best;
    for (Incumbent& inc : found) {
      if (!inc.members.empty()) best.offer(inc.value, std::move(inc.members));
    }
    ThetaResult result;
    result.g = g_;
    result.nodes = meter_.nodes();
    result.exhaustive = !meter_.stopped();
    if (!best.members.empty()) {
      result.value = best.value;
      result.witness = VertexSet::of(t_.dimension(), best.members);
    }
    return result;
  }

 private:
  struct Task {
    int w;
    int third;  // index into candidates_[w]; -1 when g == 2
  };

  struct TaskState {
    const std::vector<VertexId>* list = nullptr;
    int w = 0;
    std::vector<VertexId> members;
    Incumbent best;
    NodeTicker* ticker = nullptr;
    bool aborted = false;
  };

  Incumbent run_task(const Task& task) {
    NodeTicker ticker(meter_);
    TaskState st;
    st.list = &candidates_[static_cast<std::size_t>(task.w)];
    st.w = task.w;
    st.ticker = &ticker;
    st.best.value = upper_ + 1;
    st.members.assign(static_cast<std::size_t>(g_), 0);
    const VertexId base = (VertexId{1} << task.w) - 1;
    st.members[0] = 0;
    st.members[1] = base;
    detail::Bits<W> closed = graph_.closed[0] | graph_.closed[base];
    if (task.third < 0) {
      dfs(st, 2, closed, 0);
    } else {
      const VertexId y = (*st.list)[static_cast<std::size_t>(task.third)];
      st.members[2] = y;
      dfs(st, 3, closed | graph_.closed[y], static_cast<std::size_t>(task.third) + 1);
    }
    if (st.best.value > upper_) st.best.members.clear();
    return st.best;
  }

  void dfs(TaskState& st, int depth, const detail::Bits<W>& closed, std::size_t next) {
    if (st.aborted) return;
    if (!st.ticker->tick()) {
      st.aborted = true;
      return;
    }
    const int lower = closed.count() - g_;
    if (depth == g_) {
      if (lower < st.best.value) {
        st.best.value = lower;
        st.best.members.assign(st.members.begin(), st.members.end());
        std::sort(st.best.members.begin(), st.best.members.end());
      }
      return;
    }
    if (lower >= st.best.value) return;
    const std::vector<VertexId>& list = *st.list;
    const std::size_t need = static_cast<std::size_t>(g_ - depth);
    for (std::size_t j = next; j < list.size() && list.size() - j >= need; ++j) {
      const VertexId y = list[j];
      bool compatible = true;
      for (int k = 2; k < depth; ++k) {
        if (std::popcount(y ^ st.members[static_cast<std::size_t>(k)]) < st.w) {
          compatible = false;
          break;
        }
      }
      if (!compatible) continue;
      st.members[static_cast<std::size_t>(depth)] = y;
      dfs(st, depth + 1, closed | graph_.closed[y], j + 1);
      if (st.aborted) return;
    }
  }

  const Topology& t_;
  detail::DenseGraph<W> graph_;
  int g_;
  SearchBudget budget_;
  detail::SearchMeter meter_;
  int upper_;
  std::vector<std::vector<VertexId>> candidates_;
  std::vector<Task> tasks_;
};

}  // namespace

ThetaResult theta_exact(const Topology& t, int g, const SearchBudget& budget) {
  if (g < 1 || static_cast<std::uint64_t>(g) >= t.vertex_count()) {
    throw std::out_of_range("theta needs 1 <= g <= 2^n - 1, got g = " + std::to_string(g));
  }
  const Incumbent upper = initial_upper_bound(t, g);
  ThetaResult fallback;
  fallback.g = g;
  fallback.value = upper.value;
  fallback.witness = VertexSet::of(t.dimension(), upper.members);
  fallback.exhaustive = false;

  if (g == 1) {
    // Regular graph: every singleton has degree-many neighbours.
    fallback.exhaustive = true;
    return fallback;
  }
  if (t.vertex_count() > detail::kMaxDenseVertices) return fallback;

  ThetaResult result = detail::with_mask_width(t.vertex_count(), [&](auto width) {
    constexpr std::size_t W = decltype(width)::value;
    return ThetaSearch<W>(t, g, budget, upper.value).run();
  });
  if (result.witness.empty()) {
    // Nothing strictly below upper + 1 was reached: the budget ran out first.
    fallback.nodes = result.nodes;
    fallback.exhaustive = result.exhaustive;
    return fallback;
  }
  return result;
}

int theta_star_upper(const Topology& t, int g) {
  if (g < 1 || g > t.degree() + 1) {
    throw std::out_of_range("star size g = " + std::to_string(g) + " outside [1, " +
                            std::to_string(t.degree() + 1) + "]");
  }
  return static_cast<int>(neighborhood(t, star_set(t, 0, g)).size());
}

namespace {

struct LemmaTally {
  std::uint64_t checked = 0;
  std::uint64_t counterexamples = 0;
  std::vector<std::vector<VertexId>> listed;
};

constexpr std::size_t kListedCounterexamples = 20;

// Whether some member of `members` satisfies either private-neighbour clause.
template <std::size_t W>
bool private_neighbor_clause_holds(const detail::DenseGraph<W>& graph,
                                   std::span<const VertexId> members, int n) {
  const int g = static_cast<int>(members.size());
  detail::Bits<W> set;
  for (VertexId v : members) set.set(v);
  // prefix[i] = union of open[members[0..i)], suffix likewise from the back.
  std::vector<detail::Bits<W>> prefix(members.size() + 1);
  std::vector<detail::Bits<W>> suffix(members.size() + 1);
  for (std::size_t i = 0; i < members.size(); ++i) {
    prefix[i + 1] = prefix[i] | graph.open[members[i]];
  }
  for (std::size_t i = members.size(); i > 0; --i) {
    suffix[i - 1] = suffix[i] | graph.open[members[i - 1]];
  }
  for (std::size_t i = 0; i < members.size(); ++i) {
    const VertexId v = members[i];
    detail::Bits<W> others = prefix[i] | suffix[i + 1];
    detail::Bits<W> pn = graph.open[v];
    pn.remove(set);
    pn.remove(others);
    const bool has_inner_neighbor = (graph.open[v] & set).any();
    const int bound = has_inner_neighbor ? n - g + 2 : n - g + 1;
    if (pn.count() >= bound) return true;
  }
  return false;
}

template <std::size_t W>
LemmaTally private_neighbor_exhaustive(const Topology& t, int g, int workers) {
  const detail::DenseGraph<W> graph(t);
  const int n = t.dimension();
  const VertexId count = graph.vertex_count;
  std::vector<LemmaTally> tallies(count);

  auto visit = [&](LemmaTally& tally, std::span<const VertexId> members) {
    ++tally.checked;
    if (!private_neighbor_clause_holds(graph, members, n)) {
      ++tally.counterexamples;
      if (tally.listed.size() < kListedCounterexamples) {
        tally.listed.emplace_back(members.begin(), members.end());
      }
    }
  };

  if (g == 1) {
    const VertexId only[] = {0};
    visit(tallies[0], only);
  } else {
    // Sets {0, second, ...} with ascending labels; one task per second label.
    run_tasks(count, workers, [&](std::size_t task) {
      const VertexId second = static_cast<VertexId>(task);
      if (second == 0) return;
      LemmaTally& tally = tallies[task];
      std::vector<VertexId> members{0, second};
      members.resize(static_cast<std::size_t>(g));
      auto rec = [&](auto&& self, int depth, VertexId from) -> void {
        if (depth == g) {
          visit(tally, members);
          return;
        }
        for (VertexId y = from; y + static_cast<VertexId>(g - depth) <= count; ++y) {
          members[static_cast<std::size_t>(depth)] = y;
          self(self, depth + 1, y + 1);
        }
      };
      rec(rec, 2, second + 1);
    });
  }
  LemmaTally total;
  for (LemmaTally& t1 : tallies) {
    total.checked += t1.checked;
    total.counterexamples += t1.counterexamples;
    for (auto& m : t1.listed) {
      if (total.listed.size() < kListedCounterexamples) total.listed.push_back(std::move(m));
    }
  }
  return total;
}

template <std::size_t W>
LemmaTally private_neighbor_sampled(const Topology& t, int g, std::uint64_t seed,
                                    std::uint64_t samples, int workers) {
  const detail::DenseGraph<W> graph(t);
  const int n = t.dimension();
  constexpr std::uint64_t kChunk = 4096;
  const std::uint64_t chunks = (samples + kChunk - 1) / kChunk;
  std::vector<LemmaTally> tallies(chunks);
  run_tasks(chunks, workers, [&](std::size_t c) {
    LemmaTally& tally = tallies[c];
    const std::uint64_t end = std::min<std::uint64_t>(samples, (c + 1) * kChunk);
    for (std::uint64_t draw = c * kChunk; draw < end; ++draw) {
      detail::StreamRng rng(seed, draw);
      std::vector<VertexId> members =
          detail::sample_subset(rng, t.vertex_count(), static_cast<std::uint64_t>(g));
      std::sort(members.begin(), members.end());
      ++tally.checked;
      if (!private_neighbor_clause_holds(graph, std::span<const VertexId>(members), n)) {
        ++tally.counterexamples;
        if (tally.listed.size() < kListedCounterexamples) tally.listed.push_back(members);
      }
    }
  });
  LemmaTally total;
  for (LemmaTally& t1 : tallies) {
    total.checked += t1.checked;
    total.counterexamples += t1.counterexamples;
    for (auto& m : t1.listed) {
      if (total.listed.size() < kListedCounterexamples) total.listed.push_back(std::move(m));
    }
  }
  return total;
}

}  // namespace

Report check_private_neighbor_lemma(const Topology& t, int g, SamplingMode mode,
                                    std::uint64_t seed, std::uint64_t samples,
                                    int workers) {
  const int n = t.dimension();
  if (t.kind() != Kind::folded || n < 5) {
    throw std::invalid_argument("private-neighbour bound is stated for folded n >= 5");
  }
  if (g < 1 || g > n + 1) {
    throw std::out_of_range("private-neighbour bound needs 1 <= g <= n + 1");
  }
  if (mode == SamplingMode::sampled && samples == 0) {
    throw std::invalid_argument("sampled mode needs at least one draw");
  }
  const auto start = Clock::now();
  const LemmaTally tally = detail::with_mask_width(t.vertex_count(), [&](auto width) {
    constexpr std::size_t W = decltype(width)::value;
    return mode == SamplingMode::exhaustive
               ? private_neighbor_exhaustive<W>(t, g, workers)
               : private_neighbor_sampled<W>(t, g, seed, samples, workers);
  });

  nlohmann::json params = {{"kind", kind_name(t.kind())},
                           {"n", n},
                           {"g", g},
                           {"mode", mode == SamplingMode::exhaustive ? "exhaustive" : "sampled"}};
  if (mode == SamplingMode::sampled) params["samples"] = samples;
  const nlohmann::json expected = {{"counterexamples", 0}};
  const nlohmann::json computed = {{"counterexamples", tally.counterexamples},
                                   {"sets_checked", tally.checked}};
  const std::string claim = "private-neighbor-bound/n=" + std::to_string(n) +
                            "/g=" + std::to_string(g);
  Report r;
  if (tally.counterexamples > 0) {
    r = make_fail(claim, params, expected, computed, tally.listed,
                  "sets with no member meeting either private-neighbour clause");
  } else {
    r.claim_id = claim;
    r.parameters = params;
    r.expected = expected;
    r.computed = computed;
    r.verdict = Verdict::pass;
    r.note = mode == SamplingMode::exhaustive
                 ? "every g-set containing vertex 0 (all sets up to translation)"
                 : "uniform random g-sets";
  }
  if (mode == SamplingMode::sampled) r.seed = seed;
  r.elapsed_ms = ms_since(start);
  return r;
}

}  // namespace foldkappa
