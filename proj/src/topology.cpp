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

#include "foldkappa/topology.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "foldkappa/error.hpp"
#include "json.hpp"

namespace foldkappa {

std::string_view kind_name(Kind kind) {
  return kind == Kind::folded ? "fq" : "q";
}

std::optional<Kind> parse_kind(std::string_view name) {
  if (name == "fq" || name == "folded") return Kind::folded;
  if (name == "q" || name == "hypercube") return Kind::hypercube;
  return std::nullopt;
}

Topology Topology::build(Kind kind, int n, std::uint64_t vertex_budget) {
  if (n < 1) {
    throw std::invalid_argument("dimension must be >= 1, got " + std::to_string(n));
  }
  if (kind == Kind::folded && n < 2) {
    throw std::invalid_argument(
        "folded hypercube needs n >= 2: for n = 1 the complementary edge "
        "duplicates the hypercube edge");
  }
  if (n > 30 || (std::uint64_t{1} << n) > vertex_budget) {
    throw ResourceExhausted("2^" + std::to_string(n) +
                            " vertices exceed the vertex budget of " +
                            std::to_string(vertex_budget));
  }
  return Topology(kind, n);
}

void Topology::check_vertex(VertexId v) const {
  if (!is_valid(v)) {
    throw std::out_of_range("vertex label " + std::to_string(v) +
                            " is not a valid " + std::to_string(n_) + "-bit label");
  }
}

bool Topology::adjacent(VertexId u, VertexId v) const {
  check_vertex(u);
  check_vertex(v);
  const VertexId diff = u ^ v;
  if (std::has_single_bit(diff)) return true;
  return is_complementary_edge(u, v);
}

std::vector<VertexId> Topology::sorted_neighbors(VertexId v) const {
  check_vertex(v);
  std::vector<VertexId> out;
  out.reserve(static_cast<std::size_t>(degree()));
  for_each_neighbor(v, [&](VertexId u) { out.push_back(u); });
  std::sort(out.begin(), out.end());
  return out;
}

VertexSet Topology::neighbors(VertexId v) const {
  check_vertex(v);
  VertexSet s(n_);
  for_each_neighbor(v, [&](VertexId u) { s.insert(u); });
  return s;
}

std::vector<int> bfs_distances(const Topology& t, VertexId source) {
  t.check_vertex(source);
  std::vector<int> dist(t.vertex_count(), -1);
  std::vector<VertexId> queue;
  queue.reserve(t.vertex_count());
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const VertexId x = queue[head];
    t.for_each_neighbor(x, [&](VertexId y) {
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    });
  }
  return dist;
}

int distance(const Topology& t, VertexId u, VertexId v) {
  t.check_vertex(v);
  return bfs_distances(t, u)[v];
}

bool is_bipartite(const Topology& t) {
  // Two-colouring by BFS parity; the topologies are connected.
  const std::vector<int> dist = bfs_distances(t, 0);
  for (VertexId x = 0; x < t.vertex_count(); ++x) {
    bool clash = false;
    t.for_each_neighbor(x, [&](VertexId y) {
      if ((dist[x] & 1) == (dist[y] & 1)) clash = true;
    });
    if (clash) return false;
  }
  return true;
}

namespace {

struct BfsTree {
  std::vector<int> dist;
  std::vector<VertexId> parent;
};

BfsTree bfs_tree(const Topology& t, VertexId root) {
  BfsTree tree{std::vector<int>(t.vertex_count(), -1),
               std::vector<VertexId>(t.vertex_count(), 0)};
  std::vector<VertexId> queue;
  queue.reserve(t.vertex_count());
  tree.dist[root] = 0;
  tree.parent[root] = root;
  queue.push_back(root);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const VertexId x = queue[head];
    t.for_each_neighbor(x, [&](VertexId y) {
      if (tree.dist[y] < 0) {
        tree.dist[y] = tree.dist[x] + 1;
        tree.parent[y] = x;
        queue.push_back(y);
      }
    });
  }
  return tree;
}

// Shortest odd closed walk through the root: an edge joining two vertices on
// the same BFS level d closes a walk of length 2d + 1.
int odd_walk_length(const Topology& t, const BfsTree& tree) {
  int best = std::numeric_limits<int>::max();
  for (VertexId x = 0; x < t.vertex_count(); ++x) {
    t.for_each_neighbor(x, [&](VertexId y) {
      if (x < y && tree.dist[x] == tree.dist[y]) {
        best = std::min(best, 2 * tree.dist[x] + 1);
      }
    });
  }
  return best;
}

}  // namespace

std::optional<int> odd_girth(const Topology& t) {
  int best = std::numeric_limits<int>::max();
  for (VertexId r = 0; r < t.vertex_count(); ++r) {
    best = std::min(best, odd_walk_length(t, bfs_tree(t, r)));
  }
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return best;
}

std::vector<std::vector<VertexId>> shortest_odd_cycles(const Topology& t) {
  std::vector<std::vector<VertexId>> cycles;
  const std::optional<int> girth = odd_girth(t);
  if (!girth) return cycles;
  const int level = (*girth - 1) / 2;
  for (VertexId r = 0; r < t.vertex_count(); ++r) {
    const BfsTree tree = bfs_tree(t, r);
    bool done = false;
    for (VertexId x = 0; x < t.vertex_count() && !done; ++x) {
      if (tree.dist[x] != level) continue;
      t.for_each_neighbor(x, [&](VertexId y) {
        if (done || !(x < y) || tree.dist[y] != level) return;
        // Root-to-x path, then y back towards the root.
        std::vector<VertexId> down;
        for (VertexId v = x; v != r; v = tree.parent[v]) down.push_back(v);
        down.push_back(r);
        std::reverse(down.begin(), down.end());
        std::vector<VertexId> cycle = down;
        for (VertexId v = y; v != r; v = tree.parent[v]) cycle.push_back(v);
        std::unordered_set<VertexId> seen(cycle.begin(), cycle.end());
        if (seen.size() == cycle.size() &&
            static_cast<int>(cycle.size()) == *girth) {
          cycles.push_back(std::move(cycle));
          done = true;
        }
      });
    }
  }
  return cycles;
}

int count_complementary_edges_on_cycle(const Topology& t,
                                       std::span<const VertexId> cycle) {
  std::span<const VertexId> body = cycle;
  if (body.size() >= 2 && body.front() == body.back()) {
    body = body.first(body.size() - 1);
  }
  if (body.size() < 3) {
    throw std::invalid_argument("a cycle needs at least three distinct vertices");
  }
  std::unordered_set<VertexId> seen;
  for (VertexId v : body) {
    t.check_vertex(v);
    if (!seen.insert(v).second) {
      throw std::invalid_argument("cycle repeats vertex " + std::to_string(v));
    }
  }
  int count = 0;
  for (std::size_t i = 0; i < body.size(); ++i) {
    const VertexId u = body[i];
    const VertexId v = body[(i + 1) % body.size()];
    if (!t.adjacent(u, v)) {
      throw std::invalid_argument("cycle step " + std::to_string(u) + " -> " +
                                  std::to_string(v) + " is not an edge");
    }
    if (t.is_complementary_edge(u, v)) ++count;
  }
  return count;
}

void write_edge_list(const Topology& t, std::ostream& out) {
  out << "# kind=" << kind_name(t.kind()) << " n=" << t.dimension() << '\n';
  std::vector<VertexId> higher;
  for (VertexId u = 0; u < t.vertex_count(); ++u) {
    higher.clear();
    t.for_each_neighbor(u, [&](VertexId v) {
      if (u < v) higher.push_back(v);
    });
    std::sort(higher.begin(), higher.end());
    for (VertexId v : higher) out << u << ' ' << v << '\n';
  }
}

std::string adjacency_json(const Topology& t) {
  nlohmann::json adjacency = nlohmann::json::array();
  for (VertexId u = 0; u < t.vertex_count(); ++u) {
    adjacency.push_back(t.sorted_neighbors(u));
  }
  nlohmann::json doc = {{"kind", kind_name(t.kind())},
                        {"n", t.dimension()},
                        {"vertex_count", t.vertex_count()},
                        {"edge_count", t.edge_count()},
                        {"adjacency", std::move(adjacency)}};
  return doc.dump() + "\n";
}

}  // namespace foldkappa
