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

#include "foldkappa/setcalc.hpp"

#include <stdexcept>
#include <string>

namespace foldkappa {

namespace {

void check_dimension(const Topology& t, const VertexSet& a) {
  if (a.dimension() != t.dimension()) {
    throw std::invalid_argument("vertex set dimension " + std::to_string(a.dimension()) +
                                " does not match topology dimension " +
                                std::to_string(t.dimension()));
  }
}

}  // namespace

VertexSet neighborhood(const Topology& t, const VertexSet& a) {
  check_dimension(t, a);
  VertexSet out(t.dimension());
  a.for_each([&](VertexId v) {
    t.for_each_neighbor(v, [&](VertexId u) {
      if (!a.contains(u)) out.insert(u);
    });
  });
  return out;
}

VertexSet closed_neighborhood(const Topology& t, const VertexSet& a) {
  return neighborhood(t, a) | a;
}

VertexSet common_neighbors(const Topology& t, VertexId u, VertexId v) {
  t.check_vertex(u);
  t.check_vertex(v);
  if (u == v) {
    throw std::invalid_argument("common_neighbors needs two distinct vertices");
  }
  return t.neighbors(u) & t.neighbors(v);
}

VertexSet private_neighbors(const Topology& t, VertexId v, const VertexSet& vprime) {
  check_dimension(t, vprime);
  t.check_vertex(v);
  if (!vprime.contains(v)) {
    throw std::invalid_argument("vertex " + std::to_string(v) +
                                " is not a member of the ambient set");
  }
  VertexSet others = vprime;
  others.erase(v);
  return t.neighbors(v) - neighborhood(t, others) - vprime;
}

VertexSet star_set(const Topology& t, VertexId v, int g) {
  t.check_vertex(v);
  if (g < 1 || g > t.degree() + 1) {
    throw std::out_of_range("star size g = " + std::to_string(g) +
                            " outside [1, " + std::to_string(t.degree() + 1) + "]");
  }
  VertexSet s(t.dimension());
  s.insert(v);
  const std::vector<VertexId> nbrs = t.sorted_neighbors(v);
  for (int i = 0; i + 1 < g; ++i) s.insert(nbrs[static_cast<std::size_t>(i)]);
  return s;
}

}  // namespace foldkappa
