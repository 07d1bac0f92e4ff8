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

#ifndef FOLDKAPPA_VERTEX_SET_HPP_
#define FOLDKAPPA_VERTEX_SET_HPP_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace foldkappa {

// An n-bit vertex label. Bit i set means coordinate i is 1.
using VertexId = std::uint32_t;

// Dense membership bitset over the 2^n labels of one dimension. The
// cardinality is cached so size() is O(1).
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int dimension);

  static VertexSet full(int dimension);
  static VertexSet of(int dimension, std::initializer_list<VertexId> labels);
  static VertexSet of(int dimension, std::span<const VertexId> labels);

  int dimension() const { return dimension_; }
  std::uint64_t universe_size() const { return std::uint64_t{1} << dimension_; }

  bool contains(VertexId v) const {
    return v < universe_size() && ((words_[v >> 6] >> (v & 63)) & 1U) != 0;
  }
  // Both throw std::out_of_range for labels outside [0, 2^n).
  void insert(VertexId v);
  void erase(VertexId v);

  std::size_t size() const { return count_; }
  bool empty() const { return count_ == 0; }

  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator&=(const VertexSet& other);
  // Set difference.
  VertexSet& operator-=(const VertexSet& other);

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.dimension_ == b.dimension_ && a.words_ == b.words_;
  }

  bool is_subset_of(const VertexSet& other) const;
  bool intersects(const VertexSet& other) const;

  // Members in ascending label order.
  std::vector<VertexId> to_vector() const;

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        fn(static_cast<VertexId>(w * 64 + std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  std::span<const std::uint64_t> words() const { return words_; }

 private:
  void check_compatible(const VertexSet& other) const;
  void recount();

  int dimension_ = 0;
  std::vector<std::uint64_t> words_ = std::vector<std::uint64_t>(1, 0);
  std::size_t count_ = 0;
};

}  // namespace foldkappa

#endif  // FOLDKAPPA_VERTEX_SET_HPP_
