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

// Hypercube Q_n and folded hypercube FQ_n. Vertices are n-bit integers;
// every structural query is answered from bit arithmetic, nothing is stored
// per vertex.

#ifndef FOLDKAPPA_TOPOLOGY_HPP_
#define FOLDKAPPA_TOPOLOGY_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "foldkappa/vertex_set.hpp"

namespace foldkappa {

enum class Kind { hypercube, folded };

// "q" / "fq".
std::string_view kind_name(Kind kind);
std::optional<Kind> parse_kind(std::string_view name);

inline constexpr std::uint64_t kDefaultVertexBudget = std::uint64_t{1} << 24;

class Topology {
 public:
  // Throws std::invalid_argument for n < 1 (and for folded n < 2, where the
  // complement of a vertex coincides with its only bit-flip neighbour), and
  // ResourceExhausted when 2^n exceeds vertex_budget.
  static Topology build(Kind kind, int n,
                        std::uint64_t vertex_budget = kDefaultVertexBudget);

  Kind kind() const { return kind_; }
  int dimension() const { return n_; }
  std::uint64_t vertex_count() const { return std::uint64_t{1} << n_; }
  int degree() const { return kind_ == Kind::folded ? n_ + 1 : n_; }
  std::uint64_t edge_count() const {
    return vertex_count() / 2 * static_cast<std::uint64_t>(degree());
  }
  VertexId all_ones() const { return static_cast<VertexId>(vertex_count() - 1); }
  VertexId complement(VertexId v) const { return v ^ all_ones(); }

  bool is_valid(VertexId v) const { return v < vertex_count(); }
  // Throws std::out_of_range.
  void check_vertex(VertexId v) const;

  bool adjacent(VertexId u, VertexId v) const;
  // True iff {u, v} is a complementary (matching) edge of FQ_n.
  bool is_complementary_edge(VertexId u, VertexId v) const {
    return kind_ == Kind::folded && (u ^ v) == all_ones();
  }

  // Bit-flip neighbours first (dimension 0 upward), then the complement.
  template <class Fn>
  void for_each_neighbor(VertexId v, Fn&& fn) const {
    for (int i = 0; i < n_; ++i) fn(v ^ (VertexId{1} << i));
    if (kind_ == Kind::folded) fn(complement(v));
  }

  std::vector<VertexId> sorted_neighbors(VertexId v) const;
  VertexSet neighbors(VertexId v) const;
  VertexSet empty_set() const { return VertexSet(n_); }
  VertexSet all_vertices() const { return VertexSet::full(n_); }

 private:
  Topology(Kind kind, int n) : kind_(kind), n_(n) {}

  Kind kind_;
  int n_;
};

// BFS distances from source; unreachable entries are -1.
std::vector<int> bfs_distances(const Topology& t, VertexId source);
int distance(const Topology& t, VertexId u, VertexId v);

bool is_bipartite(const Topology& t);

// Length of a shortest odd cycle, std::nullopt when the graph is bipartite.
std::optional<int> odd_girth(const Topology& t);

// One shortest odd cycle per root vertex (as an open vertex sequence whose
// closing edge runs from the last vertex back to the first). Empty when
// bipartite.
std::vector<std::vector<VertexId>> shortest_odd_cycles(const Topology& t);

// Number of cycle edges that join a vertex to its complement. The sequence
// may repeat its first vertex at the end. Throws std::invalid_argument unless
// it is a simple cycle of t with at least three vertices.
int count_complementary_edges_on_cycle(const Topology& t,
                                       std::span<const VertexId> cycle);

// "# kind=<fq|q> n=<n>" then one "u v" line per edge, u < v, sorted.
void write_edge_list(const Topology& t, std::ostream& out);
std::string adjacency_json(const Topology& t);

}  // namespace foldkappa

#endif  // FOLDKAPPA_TOPOLOGY_HPP_
