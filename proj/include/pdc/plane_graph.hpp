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

#ifndef PDC_PLANE_GRAPH_HPP
#define PDC_PLANE_GRAPH_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pdc/rational.hpp"

namespace pdc {

using VertexId = int;

// Undirected edge key, stored with u <= v.
struct EdgeKey {
  VertexId u;
  VertexId v;

  EdgeKey(VertexId a, VertexId b) : u(a < b ? a : b), v(a < b ? b : a) {}
  friend auto operator<=>(const EdgeKey&, const EdgeKey&) = default;
};

struct DirectedEdge {
  VertexId from;
  VertexId to;

  friend auto operator<=>(const DirectedEdge&, const DirectedEdge&) = default;
};

std::string directed_edge_id(const DirectedEdge& e);
std::optional<DirectedEdge> parse_directed_edge_id(const std::string& s);

// A face of the embedding. The walk starts at the canonical directed edge
// (the lexicographically smallest one on the walk), which also names the
// face. A vertex may occur several times on a walk (cut vertices); the
// vertex list keeps first occurrences only, in walk order.
struct Face {
  std::string id;
  std::vector<DirectedEdge> walk;
  std::vector<VertexId> vertices;

  bool contains(VertexId v) const;
};

// A simple graph with exact rational edge and vertex weights and a
// combinatorial embedding given by a rotation system: for every vertex, the
// counterclockwise cyclic order of its neighbors. The embedding is always
// supplied by the caller, never computed.
//
// Mutating members are construction plumbing; the counting operations treat
// graphs as values and return fresh ones, so validated graphs can be shared
// across threads for reading.
class PlaneGraph {
 public:
  PlaneGraph() = default;
  explicit PlaneGraph(int n);

  int vertex_count() const { return static_cast<int>(rotation_.size()); }
  int edge_count() const { return static_cast<int>(weights_.size()); }

  VertexId add_vertex();

  // Appends to the rotation of both endpoints; use set_rotation or
  // insert_neighbor_after when a specific cyclic position is required.
  void add_edge(VertexId u, VertexId v, const Rational& w = Rational(1));
  void remove_edge(VertexId u, VertexId v);

  bool has_edge(VertexId u, VertexId v) const;
  const Rational& edge_weight(VertexId u, VertexId v) const;
  void set_edge_weight(VertexId u, VertexId v, const Rational& w);

  const Rational& vertex_weight(VertexId v) const { return vertex_weight_[v]; }
  void set_vertex_weight(VertexId v, const Rational& w);

  void set_rotation(VertexId v, std::vector<VertexId> order);
  const std::vector<VertexId>& rotation(VertexId v) const { return rotation_[v]; }
  int degree(VertexId v) const { return static_cast<int>(rotation_[v].size()); }

  // Splices `nb` into rotation(v) directly after `anchor`.
  void insert_neighbor_after(VertexId v, VertexId anchor, VertexId nb);

  // Edges sorted by (u, v); deterministic iteration order.
  std::vector<std::pair<EdgeKey, Rational>> edges() const;

  // Returns std::nullopt when all embedding invariants hold, otherwise a
  // diagnostic naming the first violated one.
  std::optional<std::string> validate() const;

  // Enumerates all faces via the next-edge rule: the successor of the
  // directed edge (u,v) is (v,w) where w follows u in rotation(v).
  // Requires a validated embedding.
  std::vector<Face> faces() const;

  // Sum over faces of walk length equals 2|E|; exposed for property tests.
  DirectedEdge face_successor(const DirectedEdge& e) const;

  std::vector<std::vector<VertexId>> connected_components() const;

  // Removes every edge of weight 0 and splices the rotations accordingly.
  PlaneGraph drop_zero_weight_edges() const;

  // Induced embedded subgraph on the complement of `xs`; surviving vertices
  // are renumbered 0..m-1 in increasing id order. `old_of_new`, when given,
  // receives the id translation.
  PlaneGraph delete_vertices(const std::vector<VertexId>& xs,
                             std::vector<VertexId>* old_of_new = nullptr) const;

  // Image graph under the permutation new_of_old (a bijection on 0..n-1).
  PlaneGraph relabel(const std::vector<VertexId>& new_of_old) const;

 private:
  void check_vertex(VertexId v) const;

  std::vector<std::vector<VertexId>> rotation_;
  std::vector<Rational> vertex_weight_;
  std::map<EdgeKey, Rational> weights_;
};

// Looks up a face by id among `faces`; the id may be any directed edge on
// the face's walk, not only the canonical one.
const Face* find_face(const std::vector<Face>& faces, const std::string& id);

// The face with the longest walk (ties broken by canonical id); the usual
// choice for "the" outer face of instances drawn with the unbounded face
// largest.
std::string outer_face_id(const std::vector<Face>& faces);

}  // namespace pdc

#endif  // PDC_PLANE_GRAPH_HPP
