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

#ifndef FOLDKAPPA_DETAIL_PARALLEL_HPP_
#define FOLDKAPPA_DETAIL_PARALLEL_HPP_

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "foldkappa/search_budget.hpp"

namespace foldkappa::detail {

// Runs fn(i) for every i in [0, count) on up to `workers` threads. Tasks
// write into caller-owned per-index slots, so the merged result never
// depends on scheduling. The first exception thrown is rethrown.
template <class Fn>
void run_tasks(std::size_t count, int workers, Fn&& fn) {
  const std::size_t threads =
      std::min<std::size_t>(count, static_cast<std::size_t>(std::max(1, workers)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (std::size_t t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (std::thread& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

// Shared node/time accounting for one search. Workers batch their node
// counts locally and publish every kFlushEvery nodes.
class SearchMeter {
 public:
  static constexpr std::uint64_t kFlushEvery = 4096;

  explicit SearchMeter(const SearchBudget& budget)
      : max_nodes_(budget.max_nodes),
        time_limit_(budget.time_limit),
        start_(std::chrono::steady_clock::now()) {}

  bool stopped() const { return stopped_.load(std::memory_order_relaxed); }
  std::uint64_t nodes() const { return nodes_.load(std::memory_order_relaxed); }

  // Adds to the global count; returns false once the budget is spent.
  bool publish(std::uint64_t local) {
    const std::uint64_t total = nodes_.fetch_add(local) + local;
    if (total > max_nodes_) stopped_.store(true);
    if (time_limit_.count() > 0 &&
        std::chrono::steady_clock::now() - start_ > time_limit_) {
      stopped_.store(true);
    }
    return !stopped();
  }

  std::uint64_t remaining() const {
    const std::uint64_t used = nodes();
    return used >= max_nodes_ ? 0 : max_nodes_ - used;
  }

 private:
  std::uint64_t max_nodes_;
  std::chrono::milliseconds time_limit_;
  std::chrono::steady_clock::time_point start_;
  std::atomic<std::uint64_t> nodes_{0};
  std::atomic<bool> stopped_{false};
};

// Per-worker counter in front of a SearchMeter.
class NodeTicker {
 public:
  explicit NodeTicker(SearchMeter& meter) : meter_(meter) {}
  ~NodeTicker() { flush(); }
  NodeTicker(const NodeTicker&) = delete;
  NodeTicker& operator=(const NodeTicker&) = delete;

  // Returns false when the search should stop.
  bool tick() {
    if (++local_ >= SearchMeter::kFlushEvery) return flush();
    return !meter_.stopped();
  }
  bool flush() {
    const bool ok = meter_.publish(local_);
    local_ = 0;
    return ok;
  }

 private:
  SearchMeter& meter_;
  std::uint64_t local_ = 0;
};

}  // namespace foldkappa::detail

#endif  // FOLDKAPPA_DETAIL_PARALLEL_HPP_
