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

#include "foldkappa/vertex_set.hpp"

#include <stdexcept>
#include <string>

namespace foldkappa {

namespace {

constexpr int kMaxDimension = 30;

std::size_t word_count(int dimension) {
  const std::uint64_t bits = std::uint64_t{1} << dimension;
  return static_cast<std::size_t>((bits + 63) / 64);
}

}  // namespace

VertexSet::VertexSet(int dimension) : dimension_(dimension) {
  if (dimension < 0 || dimension > kMaxDimension) {
    throw std::invalid_argument("vertex set dimension out of range: " +
                                std::to_string(dimension));
  }
  words_.assign(word_count(dimension), 0);
}

VertexSet VertexSet::full(int dimension) {
  VertexSet s(dimension);
  const std::uint64_t n = s.universe_size();
  for (std::size_t w = 0; w < s.words_.size(); ++w) {
    const std::uint64_t lo = w * 64;
    const std::uint64_t span = n - lo < 64 ? n - lo : 64;
    s.words_[w] = span == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << span) - 1);
  }
  s.count_ = static_cast<std::size_t>(n);
  return s;
}

VertexSet VertexSet::of(int dimension, std::initializer_list<VertexId> labels) {
  return of(dimension, std::span<const VertexId>(labels.begin(), labels.size()));
}

VertexSet VertexSet::of(int dimension, std::span<const VertexId> labels) {
  VertexSet s(dimension);
  for (VertexId v : labels) s.insert(v);
  return s;
}

void VertexSet::insert(VertexId v) {
  if (v >= universe_size()) {
    throw std::out_of_range("vertex label " + std::to_string(v) +
                            " outside dimension " + std::to_string(dimension_));
  }
  std::uint64_t& word = words_[v >> 6];
  const std::uint64_t bit = std::uint64_t{1} << (v & 63);
  if ((word & bit) == 0) {
    word |= bit;
    ++count_;
  }
}

void VertexSet::erase(VertexId v) {
  if (v >= universe_size()) {
    throw std::out_of_range("vertex label " + std::to_string(v) +
                            " outside dimension " + std::to_string(dimension_));
  }
  std::uint64_t& word = words_[v >> 6];
  const std::uint64_t bit = std::uint64_t{1} << (v & 63);
  if ((word & bit) != 0) {
    word &= ~bit;
    --count_;
  }
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  check_compatible(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  recount();
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  check_compatible(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  recount();
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  check_compatible(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  recount();
  return *this;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  check_compatible(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

bool VertexSet::intersects(const VertexSet& other) const {
  check_compatible(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & other.words_[i]) != 0) return true;
  }
  return false;
}

std::vector<VertexId> VertexSet::to_vector() const {
  std::vector<VertexId> out;
  out.reserve(count_);
  for_each([&](VertexId v) { out.push_back(v); });
  return out;
}

void VertexSet::check_compatible(const VertexSet& other) const {
  if (other.dimension_ != dimension_) {
    throw std::invalid_argument("vertex sets of different dimensions (" +
                                std::to_string(dimension_) + " vs " +
                                std::to_string(other.dimension_) + ")");
  }
}

void VertexSet::recount() {
  std::size_t c = 0;
  for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
  count_ = c;
}

}  // namespace foldkappa
