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

#ifndef PDC_INSTANCE_HPP
#define PDC_INSTANCE_HPP

#include <string>
#include <vector>

#include "pdc/plane_graph.hpp"

namespace pdc {

// An edge between apex i (0-based apex index) and planar vertex v.
struct ApexPlanarEdge {
  int apex;
  VertexId v;
  Rational w;
};

// An edge between two apices.
struct ApexApexEdge {
  int a;
  int b;
  Rational w;
};

// A graph together with an apex set A and a plane embedding of the rest.
// The planar part lives in `planar` with ids 0..p-1; apices are indexed
// 0..apex_count-1 and sit at ids p..p+k-1 of the full graph. Plain plane
// graphs are the apex_count == 0 case.
struct ApexInstance {
  PlaneGraph planar;
  int apex_count = 0;
  std::vector<ApexPlanarEdge> apex_planar_edges;
  std::vector<ApexApexEdge> apex_apex_edges;
  // Canonical face ids within `planar`.
  std::vector<std::string> distinguished_faces;

  int total_vertices() const { return planar.vertex_count() + apex_count; }

  // Planar neighbors of apex i, sorted.
  std::vector<VertexId> apex_neighborhood(int apex) const;
  // Union over all apices, sorted and unique.
  std::vector<VertexId> apex_neighborhood_union() const;

  // Resolves the distinguished face ids against planar.faces().
  std::vector<Face> resolve_faces() const;

  // Checks the embedding, the face references, and that every planar
  // neighbor of an apex lies on a distinguished face (only enforced when
  // apices are present). Returns a diagnostic for the first failure.
  std::optional<std::string> validate() const;
};

// Instance files are UTF-8 JSON:
//   {"vertices":[{"id":0,"weight":"0/1"},...],
//    "edges":[{"u":0,"v":1,"weight":"1/1"},...],
//    "rotation":{"0":[1,5,3],...},
//    "apices":[...],
//    "distinguished_faces":[["0->1"],...]}
// Weights are "num/den" strings; faces are referenced by any directed edge
// on their walk and re-canonicalized on load. Ids may be arbitrary dense
// 0..N-1; internally planar vertices are compacted to come first.
ApexInstance instance_from_json(const std::string& text);
ApexInstance load_instance(const std::string& path);
std::string instance_to_json(const ApexInstance& inst);
void save_instance(const ApexInstance& inst, const std::string& path);

}  // namespace pdc

#endif  // PDC_INSTANCE_HPP
