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

#include "pdc/gadget.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <random>

#include "pdc/errors.hpp"
#include "pdc/oracle.hpp"

namespace pdc {
namespace {

ParityGadget make_even(int t) {
  ParityGadget g;
  g.parity = 0;
  if (t == 1) {
    g.graph = PlaneGraph(2);
    g.graph.add_edge(0, 1);
    g.externals = {0};
    g.anchor = {1};
    return g;
  }
  if (t == 2) {
    g.graph = PlaneGraph(2);
    g.graph.add_edge(0, 1);
    g.externals = {0, 1};
    g.anchor = {1, 0};
    return g;
  }
  if (t == 3) {
    // One block: externals 0,1,2 in outer order, hub 3 inside.
    g.graph = PlaneGraph(4);
    g.graph.add_edge(0, 1);
    g.graph.add_edge(3, 0);
    g.graph.add_edge(3, 1);
    g.graph.add_edge(3, 2);
    g.graph.set_rotation(0, {1, 3});
    g.graph.set_rotation(1, {3, 0});
    g.graph.set_rotation(2, {3});
    g.graph.set_rotation(3, {0, 1, 2});
    g.externals = {0, 1, 2};
    g.anchor = {3, 0, 3};
    return g;
  }
  // Chain of t blocks left to right; block i occupies ids 4i..4i+3 as
  // (left, mid, right, hub). Unit connectors join right_i to left_{i+1};
  // pendant 2-paths cap left_0 and right_{t-1}. The exposed externals are
  // the mids, whose outer corner sits after `left` in their rotation.
  g.graph = PlaneGraph(4 * t + 4);
  auto L = [](int i) { return 4 * i; };
  auto M = [](int i) { return 4 * i + 1; };
  auto R = [](int i) { return 4 * i + 2; };
  auto Z = [](int i) { return 4 * i + 3; };
  const int c1 = 4 * t, d1 = 4 * t + 1, c2 = 4 * t + 2, d2 = 4 * t + 3;
  for (int i = 0; i < t; ++i) {
    g.graph.add_edge(L(i), M(i));
    g.graph.add_edge(Z(i), L(i));
    g.graph.add_edge(Z(i), M(i));
    g.graph.add_edge(Z(i), R(i));
    if (i + 1 < t) g.graph.add_edge(R(i), L(i + 1));
  }
  g.graph.add_edge(L(0), c1);
  g.graph.add_edge(c1, d1);
  g.graph.add_edge(R(t - 1), c2);
  g.graph.add_edge(c2, d2);
  for (int i = 0; i < t; ++i) {
    g.graph.set_rotation(L(i), {M(i), Z(i), i == 0 ? c1 : R(i - 1)});
    g.graph.set_rotation(M(i), {Z(i), L(i)});
    g.graph.set_rotation(R(i), {i + 1 < t ? L(i + 1) : c2, Z(i)});
    g.graph.set_rotation(Z(i), {L(i), M(i), R(i)});
    g.externals.push_back(M(i));
    g.anchor.push_back(L(i));
  }
  g.graph.set_rotation(c1, {L(0), d1});
  g.graph.set_rotation(d1, {c1});
  g.graph.set_rotation(c2, {R(t - 1), d2});
  g.graph.set_rotation(d2, {c2});
  return g;
}

ParityGadget make_odd(int t) {
  ParityGadget g;
  g.parity = 1;
  if (t == 1) {
    g.graph = PlaneGraph(1);
    g.externals = {0};
    g.anchor = {-1};
    return g;
  }
  if (t == 2) {
    g.graph = PlaneGraph(3);
    g.graph.add_edge(0, 1);
    g.graph.add_edge(1, 2);
    g.externals = {0, 2};
    g.anchor = {1, 1};
    return g;
  }
  // Cap the last external of the next even gadget with a pendant vertex:
  // that external must now match outward through its connector, which
  // flips the parity of the remaining t externals.
  g = make_even(t + 1);
  g.parity = 1;
  VertexId capped = g.externals.back();
  VertexId capped_anchor = g.anchor.back();
  g.externals.pop_back();
  g.anchor.pop_back();
  VertexId w = g.graph.add_vertex();
  g.graph.add_edge(capped, w);
  g.graph.set_rotation(w, {capped});
  // Route the pendant through the consumed outer corner.
  auto rot = g.graph.rotation(capped);
  std::erase(rot, w);
  g.graph.set_rotation(capped, rot);
  g.graph.insert_neighbor_after(capped, capped_anchor, w);
  return g;
}

Integer pm_count_minus(const ParityGadget& g, unsigned mask) {
  std::vector<VertexId> drop;
  for (size_t i = 0; i < g.externals.size(); ++i) {
    if (mask & (1u << i)) drop.push_back(g.externals[i]);
  }
  return pm_count_sparse(g.graph.delete_vertices(drop));
}

void verify_gadget(const ParityGadget& g) {
  const int t = static_cast<int>(g.externals.size());
  if (auto diag = g.graph.validate()) {
    throw InternalError("parity gadget embedding invalid: " + *diag);
  }
  auto check_mask = [&](unsigned mask) {
    int expected = (static_cast<int>(__builtin_popcount(mask)) % 2 == g.parity) ? 1 : 0;
    if (pm_count_minus(g, mask) != expected) {
      throw InternalError("parity gadget signature mismatch (t=" + std::to_string(t) + ")");
    }
  };
  if (t <= 6) {
    for (unsigned mask = 0; mask < (1u << t); ++mask) check_mask(mask);
  } else {
    std::mt19937 rng(0x9d2c5680u + static_cast<unsigned>(t) * 2u + static_cast<unsigned>(g.parity));
    for (int trial = 0; trial < 64; ++trial) {
      check_mask(static_cast<unsigned>(rng()) & ((1u << t) - 1u));
    }
  }
}

}  // namespace

const ParityGadget& build_parity_gadget(int t, int parity) {
  if (t < 1) throw ValidationError("gadget arity must be at least 1");
  if (parity != 0 && parity != 1) throw ValidationError("gadget parity must be 0 or 1");
  static std::mutex mu;
  static std::map<std::pair<int, int>, ParityGadget> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find({t, parity});
  if (it == cache.end()) {
    ParityGadget g = parity == 0 ? make_even(t) : make_odd(t);
    verify_gadget(g);
    it = cache.emplace(std::make_pair(t, parity), std::move(g)).first;
  }
  return it->second;
}

std::vector<Integer> signature(const ParityGadget& g) {
  const int t = static_cast<int>(g.externals.size());
  if (t > 8) throw ValidationError("signature enumeration refuses arity above 8");
  std::vector<Integer> out;
  out.reserve(1u << t);
  for (unsigned mask = 0; mask < (1u << t); ++mask) out.push_back(pm_count_minus(g, mask));
  return out;
}

std::vector<Integer> signature_graded_lex(const std::vector<Integer>& by_mask, int t) {
  std::vector<unsigned> masks;
  for (unsigned mask = 0; mask < (1u << t); ++mask) masks.push_back(mask);
  std::sort(masks.begin(), masks.end(), [t](unsigned a, unsigned b) {
    int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
    if (pa != pb) return pa < pb;
    // Lexicographic on the sorted element lists = numeric order of the
    // reversed bit patterns; compare element by element.
    for (int i = 0; i < t; ++i) {
      bool ia = a & (1u << i), ib = b & (1u << i);
      if (ia != ib) return ia;
    }
    return false;
  });
  std::vector<Integer> out;
  out.reserve(by_mask.size());
  for (unsigned m : masks) out.push_back(by_mask[m]);
  return out;
}

PlaneGraph attach_rakes(const PlaneGraph& g, const std::vector<VertexId>& s, int ell) {
  if (ell < 0) throw ValidationError("rake size must be non-negative");
  for (VertexId v : s) {
    if (v < 0 || v >= g.vertex_count()) {
      throw ValidationError("unknown vertex id " + std::to_string(v));
    }
  }
  if (ell == 0) return g;
  PlaneGraph out = g;
  std::vector<VertexId> sorted(s);
  std::sort(sorted.begin(), sorted.end());
  for (VertexId v : sorted) {
    VertexId prev_spine = -1;
    for (int j = 0; j < ell; ++j) {
      VertexId a = out.add_vertex();
      VertexId b = out.add_vertex();
      out.add_edge(v, a);
      out.add_edge(a, b);
      out.set_rotation(a, {v, b});
      out.set_rotation(b, {a});
      // The fresh spine neighbors sit consecutively in rotation(v), fanned
      // into the face corner after v's first original neighbor.
      auto rot = out.rotation(v);
      std::erase(rot, a);
      out.set_rotation(v, rot);
      if (out.degree(v) == 0) {
        out.set_rotation(v, {a});
      } else {
        out.insert_neighbor_after(v, prev_spine < 0 ? out.rotation(v).front() : prev_spine, a);
      }
      prev_spine = a;
    }
  }
  return out;
}

ApexInstance subdivide_apex_edges(const ApexInstance& inst) {
  ApexInstance out = inst;
  for (auto& edge : out.apex_planar_edges) {
    if (edge.w == 1) continue;
    // A distinguished face holding the planar endpoint hosts the new path;
    // endpoints of floating components (no distinguished face on their
    // component) are drawn near the first distinguished face instead and
    // need no face bookkeeping.
    auto faces = out.resolve_faces();
    const Face* host = nullptr;
    size_t host_idx = 0;
    for (size_t i = 0; i < faces.size(); ++i) {
      if (faces[i].contains(edge.v)) {
        host = &faces[i];
        host_idx = i;
        break;
      }
    }
    VertexId anchor = -1;
    if (host) {
      for (const auto& de : host->walk) {
        if (de.to == edge.v) {
          anchor = de.from;
          break;
        }
      }
    } else {
      if (out.distinguished_faces.empty()) {
        throw ValidationError("apex edge endpoint " + std::to_string(edge.v) +
                              " not on any distinguished face");
      }
      if (out.planar.degree(edge.v) > 0) {
        // Outer walk of the endpoint's own component.
        auto all = out.planar.faces();
        const Face* comp_outer = nullptr;
        for (const auto& f : all) {
          if (f.contains(edge.v) && (!comp_outer || f.walk.size() > comp_outer->walk.size())) {
            comp_outer = &f;
          }
        }
        internal_check(comp_outer != nullptr, "vertex with edges lies on no face");
        for (const auto& de : comp_outer->walk) {
          if (de.to == edge.v) {
            anchor = de.from;
            break;
          }
        }
      }
    }
    VertexId r2 = out.planar.add_vertex();
    VertexId r1 = out.planar.add_vertex();
    out.planar.add_edge(edge.v, r2, edge.w);
    out.planar.add_edge(r2, r1, Rational(1));
    out.planar.set_rotation(r2, {edge.v, r1});
    out.planar.set_rotation(r1, {r2});
    {
      auto rot = out.planar.rotation(edge.v);
      std::erase(rot, r2);
      out.planar.set_rotation(edge.v, rot);
    }
    if (out.planar.degree(edge.v) == 0) {
      out.planar.set_rotation(edge.v, {r2});
    } else {
      internal_check(anchor >= 0, "face walk misses its own vertex");
      out.planar.insert_neighbor_after(edge.v, anchor, r2);
    }
    edge.v = r1;
    edge.w = Rational(1);
    if (host) {
      // The host face keeps its identity but may pick up a smaller
      // canonical edge; re-resolve through any old walk edge.
      auto new_faces = out.planar.faces();
      const Face* renamed = find_face(new_faces, host->id);
      internal_check(renamed != nullptr, "face lost during subdivision");
      out.distinguished_faces[host_idx] = renamed->id;
    }
  }
  return out;
}

namespace {

struct InsertionPlan {
  std::vector<VertexId> block;    // walk order, floats appended
  std::vector<VertexId> anchors;  // incoming walk neighbor per block vertex
  int parity = 0;
  std::vector<Rational> weights;  // aligned with block
};

}  // namespace

PlaneGraph insert_parity_gadgets(const PlaneGraph& g, const std::vector<FaceGadgetSpec>& specs,
                                 std::vector<GadgetInsertion>* out_insertions) {
  auto faces = g.faces();
  std::vector<InsertionPlan> plans;
  std::vector<bool> taken(g.vertex_count(), false);
  for (const auto& spec : specs) {
    const Face* f = nullptr;
    Face plane_face;
    if (spec.face_id == "plane") {
      if (g.edge_count() > 0) {
        throw ValidationError("face \"plane\" is only valid for an edgeless graph");
      }
      plane_face.id = "plane";
      f = &plane_face;
    } else {
      f = find_face(faces, spec.face_id);
      if (!f) throw ValidationError("face \"" + spec.face_id + "\" not found");
    }
    if (spec.block.size() != spec.connector_weights.size() ||
        spec.floating.size() != spec.floating_weights.size()) {
      throw ValidationError("connector weight count mismatch");
    }
    InsertionPlan plan;
    plan.parity = spec.parity;
    // First occurrences along the walk give the block order and the face
    // corner (incoming walk neighbor) where each connector leaves.
    std::map<VertexId, size_t> given;
    for (size_t i = 0; i < spec.block.size(); ++i) {
      VertexId v = spec.block[i];
      if (!f->contains(v)) {
        throw ValidationError("block vertex " + std::to_string(v) + " not on face " + spec.face_id);
      }
      if (taken[v] || given.count(v)) {
        throw ValidationError("block vertex " + std::to_string(v) + " used twice");
      }
      taken[v] = true;
      given[v] = i;
    }
    for (const auto& de : f->walk) {
      auto it = given.find(de.to);
      if (it != given.end()) {
        plan.block.push_back(de.to);
        plan.anchors.push_back(de.from);
        plan.weights.push_back(spec.connector_weights[it->second]);
        given.erase(it);
      }
    }
    internal_check(given.empty(), "face walk missed a block vertex");
    // Floating vertices tack on after the walk vertices, grouped by
    // component (smallest id first) and ordered along their component's
    // outer walk within a group.
    if (!spec.floating.empty()) {
      auto comps = g.connected_components();
      std::vector<int> comp_of(g.vertex_count(), -1);
      for (size_t c = 0; c < comps.size(); ++c) {
        for (VertexId v : comps[c]) comp_of[v] = static_cast<int>(c);
      }
      std::map<int, std::map<VertexId, Rational>> by_comp;
      for (size_t i = 0; i < spec.floating.size(); ++i) {
        VertexId v = spec.floating[i];
        if (v < 0 || v >= g.vertex_count() || taken[v]) {
          throw ValidationError("bad floating block vertex " + std::to_string(v));
        }
        taken[v] = true;
        by_comp[comp_of[v]][v] = spec.floating_weights[i];
      }
      for (auto& [c, members] : by_comp) {
        // Outer walk of this component: its longest face walk.
        const Face* comp_outer = nullptr;
        for (const auto& fc : faces) {
          if (!fc.walk.empty() && comp_of[fc.walk[0].from] == c &&
              (!comp_outer || fc.walk.size() > comp_outer->walk.size())) {
            comp_outer = &fc;
          }
        }
        if (comp_outer) {
          for (const auto& de : comp_outer->walk) {
            auto it = members.find(de.to);
            if (it != members.end()) {
              plan.block.push_back(de.to);
              plan.anchors.push_back(de.from);
              plan.weights.push_back(it->second);
              members.erase(it);
            }
          }
        }
        for (const auto& [v, w] : members) {
          if (g.degree(v) != 0) {
            throw ValidationError("floating block vertex " + std::to_string(v) +
                                  " not on its component's outer walk");
          }
          plan.block.push_back(v);
          plan.anchors.push_back(-1);
          plan.weights.push_back(w);
        }
      }
    }
    plans.push_back(std::move(plan));
  }

  PlaneGraph out = g;
  if (out_insertions) out_insertions->clear();
  for (const auto& plan : plans) {
    GadgetInsertion ins;
    ins.block = plan.block;
    const int t = static_cast<int>(plan.block.size());
    if (t == 0) {
      if (plan.parity == 1) {
        VertexId iso = out.add_vertex();
        out.set_vertex_weight(iso, Rational(0));
        ins.gadget_vertices.push_back(iso);
      }
      if (out_insertions) out_insertions->push_back(std::move(ins));
      continue;
    }
    const ParityGadget& gadget = build_parity_gadget(t, plan.parity);
    const int offset = out.vertex_count();
    for (int v = 0; v < gadget.graph.vertex_count(); ++v) {
      VertexId nv = out.add_vertex();
      out.set_vertex_weight(nv, Rational(0));
      ins.gadget_vertices.push_back(nv);
    }
    for (const auto& [e, w] : gadget.graph.edges()) out.add_edge(e.u + offset, e.v + offset, w);
    for (int v = 0; v < gadget.graph.vertex_count(); ++v) {
      std::vector<VertexId> rot;
      for (VertexId nb : gadget.graph.rotation(v)) rot.push_back(nb + offset);
      out.set_rotation(v + offset, rot);
    }
    // Walking the face forward while walking the gadget's outer face
    // backward keeps the connector bundle crossing-free.
    for (int i = 0; i < t; ++i) {
      VertexId v = plan.block[i];
      VertexId u = gadget.externals[t - 1 - i] + offset;
      VertexId u_anchor = gadget.anchor[t - 1 - i];
      out.add_edge(v, u, plan.weights[i]);
      {
        auto rot = out.rotation(v);
        std::erase(rot, u);
        out.set_rotation(v, rot);
        if (plan.anchors[i] < 0) {
          rot = out.rotation(v);
          rot.push_back(u);
          out.set_rotation(v, rot);
        } else {
          out.insert_neighbor_after(v, plan.anchors[i], u);
        }
      }
      {
        auto rot = out.rotation(u);
        std::erase(rot, v);
        out.set_rotation(u, rot);
        if (u_anchor < 0) {
          out.set_rotation(u, {v});
        } else {
          out.insert_neighbor_after(u, u_anchor + offset, v);
        }
      }
      out.set_vertex_weight(v, Rational(0));
      ins.externals.push_back(u);
    }
    if (out_insertions) out_insertions->push_back(std::move(ins));
  }
  return out;
}

PlaneGraph insert_parity_gadget(const PlaneGraph& g, const std::string& face_id,
                                const std::vector<VertexId>& block, int parity,
                                const std::vector<Rational>& connector_weights) {
  FaceGadgetSpec spec;
  spec.face_id = face_id;
  spec.block = block;
  spec.parity = parity;
  spec.connector_weights = connector_weights;
  return insert_parity_gadgets(g, {spec});
}

}  // namespace pdc
