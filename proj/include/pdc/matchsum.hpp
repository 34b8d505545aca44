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

#ifndef PDC_MATCHSUM_HPP
#define PDC_MATCHSUM_HPP

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "pdc/fkt.hpp"
#include "pdc/plane_graph.hpp"
#include "pdc/poly.hpp"

namespace pdc {

// Resolves distinguished face references ("u->v" ids, or "plane" for an
// edgeless graph) against g.
std::vector<Face> resolve_face_ids(const PlaneGraph& g, const std::vector<std::string>& ids);

// The vertices the distinguished faces can carry weight on: their walk
// vertices, plus every vertex of a component touching no distinguished
// face that is isolated or on its component's outer walk (such components
// can be drawn inside the first distinguished face).
std::vector<VertexId> face_vertex_set(const PlaneGraph& g, const std::vector<Face>& faces);

// Sums over all matchings the product of unmatched-vertex weights, for
// graphs whose weight support lies on s distinguished faces, in 2^s
// perfect-matching computations: matchings are split into parity classes
// by how many unmatched vertices each face block contains, and one parity
// gadget per face filters each class.
//
// The evaluator form prepares the 2^s gadget graphs, their orientations,
// and partial Pfaffian eliminations once; only the entries of the
// connector edges of `flexible` vertices change between eval calls, so a
// call costs one small-core Pfaffian per parity class. Weights of
// non-flexible vertices are read from the graph at construction time.
class MatchSumEvaluator {
 public:
  MatchSumEvaluator(const PlaneGraph& g, const std::vector<Face>& faces,
                    std::vector<VertexId> flexible);
  ~MatchSumEvaluator();
  MatchSumEvaluator(MatchSumEvaluator&&) noexcept;

  const std::vector<VertexId>& flexible() const;
  const std::vector<std::vector<VertexId>>& blocks() const;

  // flexible_weights aligned with flexible().
  Rational eval(std::span<const Rational> flexible_weights) const;
  // One partial sum per parity class, indexed by the class bit vector;
  // they add up to eval(). Exposed for verification.
  std::vector<Rational> eval_by_theta(std::span<const Rational> flexible_weights) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// One-shot form over the graph's own vertex weights.
Rational matchsum_faces(const PlaneGraph& g, const std::vector<std::string>& face_ids);

// Number of matchings whose defects all lie on the distinguished faces
// (weight 1 there, 0 elsewhere). s = 0 degenerates to the number of
// perfect matchings.
Integer count_defects_on_faces_total(const PlaneGraph& g, const std::vector<std::string>& face_ids);

// Entry k counts the k-defect matchings with all defects on the
// distinguished faces; computed from evaluations at 0..n and exact
// interpolation. Always n+1 entries.
std::vector<Integer> defect_spectrum(const PlaneGraph& g, const std::vector<std::string>& face_ids);

}  // namespace pdc

#endif  // PDC_MATCHSUM_HPP
