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

#ifndef FOLDKAPPA_SETCALC_HPP_
#define FOLDKAPPA_SETCALC_HPP_

#include "foldkappa/topology.hpp"
#include "foldkappa/vertex_set.hpp"

namespace foldkappa {

// N(A): vertices outside A adjacent to some member of A. N(empty) = empty.
VertexSet neighborhood(const Topology& t, const VertexSet& a);

// N(A) together with A.
VertexSet closed_neighborhood(const Topology& t, const VertexSet& a);

// N(u) ∩ N(v). Throws std::invalid_argument when u == v.
VertexSet common_neighbors(const Topology& t, VertexId u, VertexId v);

// PN(v) = N(v) − N(V' − {v}) − V'. Throws std::invalid_argument if v ∉ V'.
VertexSet private_neighbors(const Topology& t, VertexId v, const VertexSet& vprime);

// v together with its g − 1 lowest-labelled neighbours.
// Throws std::out_of_range unless 1 <= g <= degree + 1.
VertexSet star_set(const Topology& t, VertexId v, int g);

}  // namespace foldkappa

#endif  // FOLDKAPPA_SETCALC_HPP_
