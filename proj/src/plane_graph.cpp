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

#include "pdc/plane_graph.hpp"

#include <algorithm>
#include <set>

#include "pdc/errors.hpp"

namespace pdc {

std::string directed_edge_id(const DirectedEdge& e) {
  return std::to_string(e.from) + "->" + std::to_string(e.to);
}

std::optional<DirectedEdge> parse_directed_edge_id(const std::string& s) {
  auto pos = s.find("->");
  if (pos == std::string::npos || pos == 0 || pos + 2 >= s.size()) return std::nullopt;
  try {
    size_t used = 0;
    int from = std::stoi(s.substr(0, pos), &used);
    if (used != pos) return std::nullopt;
    int to = std::stoi(s.substr(pos + 2), &used);
    if (used != s.size() - pos - 2) return std::nullopt;
    return DirectedEdge{from, to};
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

bool Face::contains(VertexId v) const {
  return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

PlaneGraph::PlaneGraph(int n) : rotation_(n), vertex_weight_(n, Rational(0)) {}

VertexId PlaneGraph::add_vertex() {
  rotation_.emplace_back();
  vertex_weight_.emplace_back(0);
  return vertex_count() - 1;
}

void PlaneGraph::check_vertex(VertexId v) const {
  if (v < 0 || v >= vertex_count()) {
    throw ValidationError("unknown vertex id " + std::to_string(v));
  }
}

void PlaneGraph::add_edge(VertexId u, VertexId v, const Rational& w) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw ValidationError("loop edge at vertex " + std::to_string(u));
  if (has_edge(u, v)) throw ValidationError("parallel edge " + std::to_string(u) + "-" + std::to_string(v));
  weights_.emplace(EdgeKey(u, v), w);
  rotation_[u].push_back(v);
  rotation_[v].push_back(u);
}

void PlaneGraph::remove_edge(VertexId u, VertexId v) {
  auto it = weights_.find(EdgeKey(u, v));
  if (it == weights_.end()) throw ValidationError("no such edge");
  weights_.erase(it);
  std::erase(rotation_[u], v);
  std::erase(rotation_[v], u);
}

bool PlaneGraph::has_edge(VertexId u, VertexId v) const {
  return weights_.count(EdgeKey(u, v)) > 0;
}

const Rational& PlaneGraph::edge_weight(VertexId u, VertexId v) const {
  auto it = weights_.find(EdgeKey(u, v));
  if (it == weights_.end()) throw ValidationError("no such edge");
  return it->second;
}

void PlaneGraph::set_edge_weight(VertexId u, VertexId v, const Rational& w) {
  auto it = weights_.find(EdgeKey(u, v));
  if (it == weights_.end()) throw ValidationError("no such edge");
  it->second = w;
}

void PlaneGraph::set_vertex_weight(VertexId v, const Rational& w) {
  check_vertex(v);
  vertex_weight_[v] = w;
}

void PlaneGraph::set_rotation(VertexId v, std::vector<VertexId> order) {
  check_vertex(v);
  rotation_[v] = std::move(order);
}

void PlaneGraph::insert_neighbor_after(VertexId v, VertexId anchor, VertexId nb) {
  check_vertex(v);
  auto& rot = rotation_[v];
  auto it = std::find(rot.begin(), rot.end(), anchor);
  if (it == rot.end()) {
    throw InternalError("rotation anchor " + std::to_string(anchor) + " missing at vertex " +
                        std::to_string(v));
  }
  rot.insert(it + 1, nb);
}

std::vector<std::pair<EdgeKey, Rational>> PlaneGraph::edges() const {
  return {weights_.begin(), weights_.end()};
}

std::optional<std::string> PlaneGraph::validate() const {
  const int n = vertex_count();
  for (const auto& [e, w] : weights_) {
    if (e.u == e.v) return "loop edge at vertex " + std::to_string(e.u);
    if (e.u < 0 || e.v >= n) return "edge endpoint out of range";
  }
  std::vector<int> degree_from_edges(n, 0);
  for (const auto& [e, w] : weights_) {
    ++degree_from_edges[e.u];
    ++degree_from_edges[e.v];
  }
  for (VertexId v = 0; v < n; ++v) {
    std::set<VertexId> seen;
    for (VertexId nb : rotation_[v]) {
      if (nb < 0 || nb >= n || nb == v || !has_edge(v, nb) || !seen.insert(nb).second) {
        return "rotation/neighbor mismatch at vertex " + std::to_string(v);
      }
    }
    if (degree_from_edges[v] != static_cast<int>(rotation_[v].size())) {
      return "rotation/neighbor mismatch at vertex " + std::to_string(v);
    }
  }

  // Euler check per connected component; edgeless components have one face.
  auto comps = connected_components();
  std::vector<int> comp_of(n, -1);
  for (size_t c = 0; c < comps.size(); ++c) {
    for (VertexId v : comps[c]) comp_of[v] = static_cast<int>(c);
  }
  std::vector<long> cv(comps.size(), 0), ce(comps.size(), 0), cf(comps.size(), 0);
  for (size_t c = 0; c < comps.size(); ++c) cv[c] = static_cast<long>(comps[c].size());
  for (const auto& [e, w] : weights_) ce[comp_of[e.u]] += 1;
  for (const auto& f : faces()) {
    if (!f.walk.empty()) cf[comp_of[f.walk[0].from]] += 1;
  }
  for (size_t c = 0; c < comps.size(); ++c) {
    if (ce[c] == 0) cf[c] = 1;
    if (cv[c] - ce[c] + cf[c] != 2) {
      return "euler check failed (component " + std::to_string(c) + ": V=" + std::to_string(cv[c]) +
             " E=" + std::to_string(ce[c]) + " F=" + std::to_string(cf[c]) + ")";
    }
  }
  return std::nullopt;
}

DirectedEdge PlaneGraph::face_successor(const DirectedEdge& e) const {
  const auto& rot = rotation_[e.to];
  auto it = std::find(rot.begin(), rot.end(), e.from);
  if (it == rot.end()) throw InternalError("face successor of a non-edge");
  size_t pos = static_cast<size_t>(it - rot.begin());
  return DirectedEdge{e.to, rot[(pos + 1) % rot.size()]};
}

std::vector<Face> PlaneGraph::faces() const {
  std::vector<DirectedEdge> all;
  all.reserve(2 * weights_.size());
  for (const auto& [e, w] : weights_) {
    all.push_back({e.u, e.v});
    all.push_back({e.v, e.u});
  }
  std::sort(all.begin(), all.end());

  std::set<DirectedEdge> visited;
  std::vector<Face> out;
  for (const auto& start : all) {
    if (visited.count(start)) continue;
    Face f;
    DirectedEdge cur = start;
    do {
      if (!visited.insert(cur).second) throw InternalError("face walk revisits a directed edge");
      f.walk.push_back(cur);
      cur = face_successor(cur);
    } while (cur != start);
    // Rotate the walk so it starts at its smallest directed edge.
    auto mn = std::min_element(f.walk.begin(), f.walk.end());
    std::rotate(f.walk.begin(), mn, f.walk.end());
    f.id = directed_edge_id(f.walk.front());
    std::set<VertexId> seen;
    for (const auto& e : f.walk) {
      if (seen.insert(e.from).second) f.vertices.push_back(e.from);
    }
    out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end(),
            [](const Face& a, const Face& b) { return a.walk.front() < b.walk.front(); });
  return out;
}

std::vector<std::vector<VertexId>> PlaneGraph::connected_components() const {
  const int n = vertex_count();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<VertexId>> out;
  for (VertexId s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    int c = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<VertexId> stack{s};
    comp[s] = c;
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      out[c].push_back(v);
      for (VertexId nb : rotation_[v]) {
        if (comp[nb] < 0) {
          comp[nb] = c;
          stack.push_back(nb);
        }
      }
    }
    std::sort(out[c].begin(), out[c].end());
  }
  return out;
}

PlaneGraph PlaneGraph::drop_zero_weight_edges() const {
  PlaneGraph g = *this;
  std::vector<EdgeKey> zeros;
  for (const auto& [e, w] : weights_) {
    if (w == 0) zeros.push_back(e);
  }
  for (const auto& e : zeros) g.remove_edge(e.u, e.v);
  return g;
}

PlaneGraph PlaneGraph::delete_vertices(const std::vector<VertexId>& xs,
                                       std::vector<VertexId>* old_of_new) const {
  const int n = vertex_count();
  std::vector<bool> gone(n, false);
  for (VertexId v : xs) {
    check_vertex(v);
    gone[v] = true;
  }
  std::vector<VertexId> new_of_old(n, -1);
  std::vector<VertexId> kept;
  for (VertexId v = 0; v < n; ++v) {
    if (!gone[v]) {
      new_of_old[v] = static_cast<VertexId>(kept.size());
      kept.push_back(v);
    }
  }
  PlaneGraph g(static_cast<int>(kept.size()));
  for (size_t i = 0; i < kept.size(); ++i) {
    g.vertex_weight_[i] = vertex_weight_[kept[i]];
    for (VertexId nb : rotation_[kept[i]]) {
      if (!gone[nb]) g.rotation_[i].push_back(new_of_old[nb]);
    }
  }
  for (const auto& [e, w] : weights_) {
    if (!gone[e.u] && !gone[e.v]) g.weights_.emplace(EdgeKey(new_of_old[e.u], new_of_old[e.v]), w);
  }
  if (old_of_new) *old_of_new = kept;
  return g;
}

PlaneGraph PlaneGraph::relabel(const std::vector<VertexId>& new_of_old) const {
  const int n = vertex_count();
  if (static_cast<int>(new_of_old.size()) != n) throw ValidationError("relabel size mismatch");
  PlaneGraph g(n);
  for (VertexId v = 0; v < n; ++v) {
    VertexId nv = new_of_old[v];
    g.vertex_weight_[nv] = vertex_weight_[v];
    g.rotation_[nv].reserve(rotation_[v].size());
    for (VertexId nb : rotation_[v]) g.rotation_[nv].push_back(new_of_old[nb]);
  }
  for (const auto& [e, w] : weights_) {
    g.weights_.emplace(EdgeKey(new_of_old[e.u], new_of_old[e.v]), w);
  }
  return g;
}

const Face* find_face(const std::vector<Face>& faces, const std::string& id) {
  auto want = parse_directed_edge_id(id);
  if (!want) return nullptr;
  for (const auto& f : faces) {
    if (std::find(f.walk.begin(), f.walk.end(), *want) != f.walk.end()) return &f;
  }
  return nullptr;
}

std::string outer_face_id(const std::vector<Face>& faces) {
  if (faces.empty()) throw ValidationError("graph has no faces");
  const Face* best = &faces[0];
  for (const auto& f : faces) {
    if (f.walk.size() > best->walk.size()) best = &f;
  }
  return best->id;
}

}  // namespace pdc
