// Copyright 2026 The pdc Authors.
//
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

#ifndef PDC_ORACLE_HPP
#define PDC_ORACLE_HPP

#include <vector>

#include "pdc/instance.hpp"
#include "pdc/plane_graph.hpp"
#include "pdc/poly.hpp"

namespace pdc {

// Ground-truth enumerations. These recurse over the edge list in canonical
// (sorted id pair) order, visiting every matching exactly once; they are
// test oracles, not production paths, and refuse graphs above 22 vertices.

inline constexpr int kBruteVertexCap = 22;

// Weighted sum over perfect matchings of the edge-weight products.
Rational brute_perfmatch(const PlaneGraph& g);

// Weighted sum over all matchings of (product of unmatched-vertex weights)
// times (product of matched-edge weights).
Rational brute_matchsum(const PlaneGraph& g);

// Defect-generating matching polynomial: coefficient k counts the
// matchings leaving exactly k vertices unmatched (weights ignored).
Poly1 brute_mu(const PlaneGraph& g);

// Number of k-defect matchings none of whose defects lie in `forbidden`.
Integer brute_defects(const PlaneGraph& g, int k, const std::vector<VertexId>& forbidden);

// Perfect matchings of the full apex graph (planar part plus apex edges),
// by the same enumeration; subject to the same vertex cap.
Rational brute_perfmatch_apex(const ApexInstance& inst);

// Defect counts c_0..c_kmax in one pass, pruning branches that exceed the
// defect budget. The pruning keeps rake-augmented query graphs of the
// reduction pipeline tractable, which the capped enumerations above are
// not; still plain enumeration, with a generous cap of its own.
std::vector<Integer> count_defects_up_to(const PlaneGraph& g, int kmax);

// Same pruned enumeration, with defects forbidden on a vertex set.
std::vector<Integer> count_defects_avoiding_up_to(const PlaneGraph& g, int kmax,
                                                  const std::vector<VertexId>& forbidden);

// Number of perfect matchings, by lowest-vertex recursion with forced-move
// pruning. Intended for sparse gadget graphs where the count is tiny; no
// vertex cap, but branching is bounded by the vertex degrees.
Integer pm_count_sparse(const PlaneGraph& g);

}  // namespace pdc

#endif  // PDC_ORACLE_HPP
