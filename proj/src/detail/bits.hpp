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

// Fixed-width vertex masks for the exhaustive searches. The word count is a
// template parameter so the inner loops unroll; with_mask_width() picks it
// from the vertex count at runtime.

#ifndef FOLDKAPPA_DETAIL_BITS_HPP_
#define FOLDKAPPA_DETAIL_BITS_HPP_

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <type_traits>
#include <vector>

#include "foldkappa/error.hpp"
#include "foldkappa/topology.hpp"

namespace foldkappa::detail {

template <std::size_t W>
struct Bits {
  std::array<std::uint64_t, W> w{};

  void set(VertexId v) { w[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void reset(VertexId v) { w[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  bool test(VertexId v) const { return ((w[v >> 6] >> (v & 63)) & 1U) != 0; }

  int count() const {
    int c = 0;
    for (std::uint64_t x : w) c += std::popcount(x);
    return c;
  }
  bool any() const {
    for (std::uint64_t x : w) {
      if (x != 0) return true;
    }
    return false;
  }
  // Lowest member; undefined when empty.
  VertexId lowest() const {
    for (std::size_t i = 0; i < W; ++i) {
      if (w[i] != 0) return static_cast<VertexId>(i * 64 + std::countr_zero(w[i]));
    }
    return 0;
  }

  Bits& operator|=(const Bits& o) {
    for (std::size_t i = 0; i < W; ++i) w[i] |= o.w[i];
    return *this;
  }
  Bits& operator&=(const Bits& o) {
    for (std::size_t i = 0; i < W; ++i) w[i] &= o.w[i];
    return *this;
  }
  // this &= ~o
  Bits& remove(const Bits& o) {
    for (std::size_t i = 0; i < W; ++i) w[i] &= ~o.w[i];
    return *this;
  }
  friend Bits operator|(Bits a, const Bits& b) { return a |= b; }
  friend Bits operator&(Bits a, const Bits& b) { return a &= b; }
  friend bool operator==(const Bits&, const Bits&) = default;

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t i = 0; i < W; ++i) {
      std::uint64_t x = w[i];
      while (x != 0) {
        fn(static_cast<VertexId>(i * 64 + std::countr_zero(x)));
        x &= x - 1;
      }
    }
  }
};

// Open and closed neighbourhood masks of every vertex.
template <std::size_t W>
struct DenseGraph {
  std::uint32_t vertex_count = 0;
  Bits<W> everything;
  std::vector<Bits<W>> open;
  std::vector<Bits<W>> closed;

  explicit DenseGraph(const Topology& t)
      : vertex_count(static_cast<std::uint32_t>(t.vertex_count())),
        open(t.vertex_count()),
        closed(t.vertex_count()) {
    for (VertexId v = 0; v < vertex_count; ++v) {
      everything.set(v);
      t.for_each_neighbor(v, [&](VertexId u) { open[v].set(u); });
      closed[v] = open[v];
      closed[v].set(v);
    }
  }

  // Number of connected components of the subgraph induced on `alive`,
  // stopping early once `stop_at` components have been seen.
  int count_components(Bits<W> alive, int stop_at) const {
    int components = 0;
    while (alive.any()) {
      Bits<W> frontier;
      frontier.set(alive.lowest());
      alive.remove(frontier);
      while (frontier.any()) {
        Bits<W> next;
        frontier.for_each([&](VertexId v) { next |= open[v]; });
        next &= alive;
        alive.remove(next);
        frontier = next;
      }
      if (++components >= stop_at) return components;
    }
    return components;
  }
};

inline constexpr std::uint64_t kMaxDenseVertices = 1024;

// Calls fn(std::integral_constant<std::size_t, W>{}) with the smallest
// supported word count that holds vertex_count bits.
template <class Fn>
decltype(auto) with_mask_width(std::uint64_t vertex_count, Fn&& fn) {
  if (vertex_count <= 64) return fn(std::integral_constant<std::size_t, 1>{});
  if (vertex_count <= 128) return fn(std::integral_constant<std::size_t, 2>{});
  if (vertex_count <= 256) return fn(std::integral_constant<std::size_t, 4>{});
  if (vertex_count <= 512) return fn(std::integral_constant<std::size_t, 8>{});
  if (vertex_count <= kMaxDenseVertices) {
    return fn(std::integral_constant<std::size_t, 16>{});
  }
  throw ResourceExhausted("exhaustive search supports at most 1024 vertices");
}

template <std::size_t W>
VertexSet to_vertex_set(int dimension, const Bits<W>& b) {
  VertexSet s(dimension);
  b.for_each([&](VertexId v) { s.insert(v); });
  return s;
}

}  // namespace foldkappa::detail

#endif  // FOLDKAPPA_DETAIL_BITS_HPP_
