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

// Reproducible randomness. Every random draw is addressed by (seed, index):
// the per-index stream is an mt19937_64 seeded from a splitmix64 mix of the
// pair, so any partition of indices over threads yields the same draws.

#ifndef FOLDKAPPA_DETAIL_RNG_HPP_
#define FOLDKAPPA_DETAIL_RNG_HPP_

#include <cstdint>
#include <random>
#include <unordered_map>
#include <vector>

#include "foldkappa/vertex_set.hpp"

namespace foldkappa::detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(splitmix64(seed) ^ splitmix64(index + 0x632be59bd9b4e019ULL));
}

class StreamRng {
 public:
  StreamRng(std::uint64_t seed, std::uint64_t index) : engine_(derive_seed(seed, index)) {}

  // Uniform on [0, bound) by rejection; independent of the standard
  // library's distribution implementations.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t r = engine_();
      if (r >= threshold) return r % bound;
    }
  }

 private:
  std::mt19937_64 engine_;
};

// Uniform k-subset of [0, universe) by a partial Fisher-Yates shuffle over a
// sparse permutation, O(k) time and memory. Returned in draw order.
inline std::vector<VertexId> sample_subset(StreamRng& rng, std::uint64_t universe,
                                           std::uint64_t k) {
  std::unordered_map<std::uint64_t, std::uint64_t> swapped;
  swapped.reserve(static_cast<std::size_t>(2 * k));
  auto at = [&](std::uint64_t i) {
    auto it = swapped.find(i);
    return it == swapped.end() ? i : it->second;
  };
  std::vector<VertexId> out;
  out.reserve(static_cast<std::size_t>(k));
  for (std::uint64_t i = 0; i < k; ++i) {
    const std::uint64_t j = i + rng.below(universe - i);
    const std::uint64_t vi = at(i);
    const std::uint64_t vj = at(j);
    swapped[j] = vi;
    swapped[i] = vj;
    out.push_back(static_cast<VertexId>(vj));
  }
  return out;
}

}  // namespace foldkappa::detail

#endif  // FOLDKAPPA_DETAIL_RNG_HPP_
