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

#ifndef PDC_GADGET_HPP
#define PDC_GADGET_HPP

#include <vector>

#include "pdc/instance.hpp"
#include "pdc/plane_graph.hpp"
#include "pdc/rational.hpp"

namespace pdc {

// A plane parity filter: deleting the externals indexed by S leaves exactly
// one perfect matching when |S| has the right parity and none otherwise.
// Externals lie on the outer face in index order; `anchor[i]` names the
// neighbor of external i after which a connector edge can be spliced so it
// leaves through the outer region (-1 for an isolated external). All
// weights are unit, all vertex weights zero.
struct ParityGadget {
  PlaneGraph graph;
  std::vector<VertexId> externals;
  std::vector<VertexId> anchor;
  int parity = 0;
};

// Unit-weight chained-block construction with O(t) vertices (at most 5t+6).
// Bases: a single edge for arity 1 and 2 (even), an isolated vertex and a
// 3-path for arity 1 and 2 (odd), and one 4-vertex block for even arity 3.
// Larger even arities chain blocks through unit connector edges, capping
// both chain ends with pendant 2-paths; odd arities cap one external of the
// next even gadget with a pendant vertex, which forces that connector and
// flips the parity. Every gadget is verified against its signature table at
// build time (exhaustively up to arity 6, random subsets beyond).
const ParityGadget& build_parity_gadget(int t, int parity);

// Exact perfect-matching count of gadget minus each external subset, by
// brute enumeration; index = subset bitmask over the externals. Refuses
// t > 8.
std::vector<Integer> signature(const ParityGadget& g);

// Reorders a bitmask-indexed signature into graded lexicographic subset
// order (by size, then lexicographically), the order used in reports.
std::vector<Integer> signature_graded_lex(const std::vector<Integer>& by_mask, int t);

// Attaches a fresh rake to every vertex of S: a matching of `ell` unit
// edges whose near ends all join v, drawn inside one face corner at v.
// ell = 0 returns the graph unchanged.
PlaneGraph attach_rakes(const PlaneGraph& g, const std::vector<VertexId>& s, int ell);

// Replaces every apex-planar edge of non-unit weight by a 3-edge path
// carrying the weight on its planar end, embedded in a distinguished face
// incident to the planar endpoint. Preserves the perfect-matching sum and
// leaves every apex incident to unit edges only, with the apex
// neighborhood still on distinguished faces.
ApexInstance subdivide_apex_edges(const ApexInstance& inst);

// One inserted gadget: which block vertex connects to which gadget
// external, so callers can locate the connector edges afterwards.
struct GadgetInsertion {
  std::vector<VertexId> block;       // in face-walk order
  std::vector<VertexId> externals;   // matching connector endpoints
  std::vector<VertexId> gadget_vertices;
};

struct FaceGadgetSpec {
  std::string face_id;
  std::vector<VertexId> block;
  int parity = 0;
  std::vector<Rational> connector_weights;  // aligned with block
  // Vertices of components that touch no distinguished face; they can be
  // drawn inside this face and take connectors like block vertices. Each
  // must be isolated or lie on its own component's outer walk.
  std::vector<VertexId> floating;
  std::vector<Rational> floating_weights;  // aligned with floating
};

// Places one parity gadget inside each listed face, joining external i to
// the i-th block vertex along the face walk by an edge of the given
// weight; block and gadget vertices get vertex weight zero. An empty even
// block inserts nothing; an empty odd block inserts one isolated
// zero-weight vertex, pinning the product to zero. Insertion plans are
// taken from the input graph, so the faces must be distinct and the blocks
// disjoint. The id "plane" names the single face of an edgeless graph and
// carries no walk vertices.
PlaneGraph insert_parity_gadgets(const PlaneGraph& g, const std::vector<FaceGadgetSpec>& specs,
                                 std::vector<GadgetInsertion>* out_insertions = nullptr);

// Single-face convenience wrapper.
PlaneGraph insert_parity_gadget(const PlaneGraph& g, const std::string& face_id,
                                const std::vector<VertexId>& block, int parity,
                                const std::vector<Rational>& connector_weights);

}  // namespace pdc

#endif  // PDC_GADGET_HPP
