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

#ifndef PDC_TESTS_RANDOM_GRAPHS_HPP
#define PDC_TESTS_RANDOM_GRAPHS_HPP

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "pdc/builders.hpp"
#include "pdc/instance.hpp"
#include "pdc/matchsum.hpp"
#include "pdc/plane_graph.hpp"

namespace pdc::testing {

inline int pick(std::mt19937& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline bool chance(std::mt19937& rng, double p) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
}

// Uniform rational with numerator in [lo, hi] and denominator in [1, max_den].
inline Rational random_rational(std::mt19937& rng, int lo, int hi, int max_den = 3) {
  Rational q(pick(rng, lo, hi), pick(rng, 1, max_den));
  q.canonicalize();
  return q;
}

// Random planar triangulation with an explicit embedding: repeatedly drops
// a fresh vertex into a triangular face. Faces traced forward come back in
// reverse order around the new vertex.
inline PlaneGraph random_triangulation(std::mt19937& rng, int n) {
  PlaneGraph g = make_cycle(3);
  while (g.vertex_count() < n) {
    auto faces = g.faces();
    std::vector<Face> tris;
    for (auto& f : faces) {
      if (f.walk.size() == 3) tris.push_back(f);
    }
    Face f = tris[pick(rng, 0, static_cast<int>(tris.size()) - 1)];
    VertexId a = f.walk[0].from, b = f.walk[1].from, c = f.walk[2].from;
    VertexId x = g.add_vertex();
    g.add_edge(x, a);
    g.add_edge(x, b);
    g.add_edge(x, c);
    auto fix = [&](VertexId v, VertexId anchor) {
      auto rot = g.rotation(v);
      std::erase(rot, x);
      g.set_rotation(v, rot);
      g.insert_neighbor_after(v, anchor, x);
    };
    fix(a, c);
    fix(b, a);
    fix(c, b);
    g.set_rotation(x, {c, b, a});
  }
  return g;
}

// Connected plane graph: triangulation thinned by non-bridge deletions.
inline PlaneGraph random_connected_plane_graph(std::mt19937& rng, int n,
                                               double keep_fraction = 0.7) {
  if (n <= 1) return PlaneGraph(std::max(n, 0));
  if (n == 2) return make_path(2);
  PlaneGraph g = random_triangulation(rng, n);
  auto edges = g.edges();
  std::shuffle(edges.begin(), edges.end(), rng);
  size_t target = static_cast<size_t>(keep_fraction * static_cast<double>(edges.size()));
  for (const auto& [e, w] : edges) {
    if (g.edge_count() <= static_cast<int>(target)) break;
    PlaneGraph trial = g;
    trial.remove_edge(e.u, e.v);
    if (trial.connected_components().size() == 1) g = std::move(trial);
  }
  return g;
}

// Possibly disconnected plane graph, with a few isolated vertices thrown in.
inline PlaneGraph random_plane_graph(std::mt19937& rng, int n, double keep_fraction = 0.7) {
  if (n <= 2) return random_connected_plane_graph(rng, n, keep_fraction);
  PlaneGraph g = random_triangulation(rng, n);
  auto edges = g.edges();
  std::shuffle(edges.begin(), edges.end(), rng);
  size_t target = static_cast<size_t>(keep_fraction * static_cast<double>(edges.size()));
  while (g.edge_count() > static_cast<int>(target) && !edges.empty()) {
    auto [e, w] = edges.back();
    edges.pop_back();
    if (g.has_edge(e.u, e.v)) g.remove_edge(e.u, e.v);
  }
  return g;
}

inline void randomize_edge_weights(std::mt19937& rng, PlaneGraph& g, int lo, int hi,
                                   int max_den = 3) {
  for (const auto& [e, w] : g.edges()) {
    g.set_edge_weight(e.u, e.v, random_rational(rng, lo, hi, max_den));
  }
}

// Distinguished faces for a graph, preferring a spread of distinct faces.
inline std::vector<std::string> random_faces(std::mt19937& rng, const PlaneGraph& g, int s) {
  auto faces = g.faces();
  if (faces.empty()) return {};
  std::vector<std::string> ids;
  for (const auto& f : faces) ids.push_back(f.id);
  std::shuffle(ids.begin(), ids.end(), rng);
  ids.resize(std::min<size_t>(ids.size(), static_cast<size_t>(s)));
  return ids;
}

// Weighted matchsum test instance: weights on the distinguished faces
// (zeros included), zero elsewhere.
inline PlaneGraph random_face_weighted(std::mt19937& rng, PlaneGraph g,
                                       const std::vector<std::string>& face_ids) {
  auto faces = resolve_face_ids(g, face_ids);
  for (VertexId v : face_vertex_set(g, faces)) {
    g.set_vertex_weight(v, chance(rng, 0.2) ? Rational(0) : random_rational(rng, -3, 3));
  }
  return g;
}

// k-apex instance with the apex neighborhood on s faces; apex edges mix
// unit and general rational weights, and apices may be adjacent.
inline ApexInstance random_apex_instance(std::mt19937& rng, int max_n, int max_k, int max_s,
                                         int max_apex_degree = 3) {
  ApexInstance inst;
  int n = pick(rng, 3, max_n);
  inst.planar = random_connected_plane_graph(rng, n, 0.6 + 0.3 * chance(rng, 0.5));
  randomize_edge_weights(rng, inst.planar, -3, 3);
  int s = pick(rng, 1, max_s);
  inst.distinguished_faces = random_faces(rng, inst.planar, s);
  auto faces = inst.planar.faces();
  std::vector<VertexId> pool;
  {
    std::set<VertexId> seen;
    for (const auto& id : inst.distinguished_faces) {
      for (VertexId v : find_face(faces, id)->vertices) {
        if (seen.insert(v).second) pool.push_back(v);
      }
    }
  }
  inst.apex_count = pick(rng, 0, max_k);
  for (int a = 0; a < inst.apex_count; ++a) {
    int degree = pick(rng, 1, std::min<int>(max_apex_degree, static_cast<int>(pool.size())));
    std::vector<VertexId> targets = pool;
    std::shuffle(targets.begin(), targets.end(), rng);
    targets.resize(degree);
    for (VertexId v : targets) {
      Rational w = chance(rng, 0.5) ? Rational(1) : random_rational(rng, -3, 3);
      if (w == 0) w = 1;
      inst.apex_planar_edges.push_back({a, v, w});
    }
  }
  for (int a = 0; a < inst.apex_count; ++a) {
    for (int b = a + 1; b < inst.apex_count; ++b) {
      if (chance(rng, 0.4)) {
        inst.apex_apex_edges.push_back({a, b, random_rational(rng, -2, 2, 2) + 1});
      }
    }
  }
  return inst;
}

// Unweighted instance with independent apices whose planar neighborhoods
// are disjoint (every planar vertex sees at most one apex).
inline ApexInstance random_promise_instance(std::mt19937& rng, int max_n, int max_k) {
  ApexInstance inst;
  int n = pick(rng, 3, max_n);
  inst.planar = random_connected_plane_graph(rng, n, 0.6 + 0.3 * chance(rng, 0.5));
  inst.apex_count = pick(rng, 0, max_k);
  std::vector<VertexId> pool;
  for (VertexId v = 0; v < inst.planar.vertex_count(); ++v) pool.push_back(v);
  std::shuffle(pool.begin(), pool.end(), rng);
  size_t next = 0;
  for (int a = 0; a < inst.apex_count; ++a) {
    int size = pick(rng, 1, 2);
    for (int i = 0; i < size && next < pool.size(); ++i) {
      inst.apex_planar_edges.push_back({a, pool[next++], Rational(1)});
    }
  }
  return inst;
}

}  // namespace pdc::testing

#endif  // PDC_TESTS_RANDOM_GRAPHS_HPP
