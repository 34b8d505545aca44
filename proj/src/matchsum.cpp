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

#include "pdc/matchsum.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "pdc/errors.hpp"
#include "pdc/gadget.hpp"
#include "pdc/threads.hpp"

namespace pdc {

std::vector<Face> resolve_face_ids(const PlaneGraph& g, const std::vector<std::string>& ids) {
  auto all = g.faces();
  std::vector<Face> out;
  std::set<std::string> seen;
  for (const auto& id : ids) {
    if (id == "plane") {
      if (g.edge_count() > 0) {
        throw ValidationError("face \"plane\" is only valid for an edgeless graph");
      }
      if (!seen.insert("plane").second) throw ValidationError("face \"plane\" listed twice");
      Face f;
      f.id = "plane";
      out.push_back(std::move(f));
      continue;
    }
    const Face* f = find_face(all, id);
    if (!f) throw ValidationError("face \"" + id + "\" not found");
    if (!seen.insert(f->id).second) {
      throw ValidationError("face \"" + id + "\" listed twice");
    }
    out.push_back(*f);
  }
  return out;
}

namespace {

// Component-level placement of vertices that sit on no distinguished
// face; see face_vertex_set.
struct FloatInfo {
  std::vector<VertexId> eligible;  // isolated or on own component's outer walk
  std::vector<bool> on_walk;       // per distinguished-face-walk membership, any face
};

FloatInfo analyze_floats(const PlaneGraph& g, const std::vector<Face>& faces) {
  FloatInfo info;
  const int n = g.vertex_count();
  info.on_walk.assign(n, false);
  for (const auto& f : faces) {
    for (VertexId v : f.vertices) info.on_walk[v] = true;
  }
  auto comps = g.connected_components();
  auto all_faces = g.faces();
  std::vector<int> comp_of(n, -1);
  for (size_t c = 0; c < comps.size(); ++c) {
    for (VertexId v : comps[c]) comp_of[v] = static_cast<int>(c);
  }
  std::vector<bool> comp_touches(comps.size(), false);
  for (VertexId v = 0; v < n; ++v) {
    if (info.on_walk[v]) comp_touches[comp_of[v]] = true;
  }
  for (size_t c = 0; c < comps.size(); ++c) {
    if (comp_touches[c]) continue;
    // Outer walk of this component: its longest face walk.
    const Face* outer = nullptr;
    for (const auto& f : all_faces) {
      if (!f.walk.empty() && comp_of[f.walk[0].from] == static_cast<int>(c) &&
          (!outer || f.walk.size() > outer->walk.size())) {
        outer = &f;
      }
    }
    for (VertexId v : comps[c]) {
      if (g.degree(v) == 0 || (outer && outer->contains(v))) info.eligible.push_back(v);
    }
  }
  std::sort(info.eligible.begin(), info.eligible.end());
  return info;
}

}  // namespace

std::vector<VertexId> face_vertex_set(const PlaneGraph& g, const std::vector<Face>& faces) {
  std::vector<VertexId> out;
  std::set<VertexId> seen;
  for (const auto& f : faces) {
    for (VertexId v : f.vertices) {
      if (seen.insert(v).second) out.push_back(v);
    }
  }
  if (!faces.empty()) {
    for (VertexId v : analyze_floats(g, faces).eligible) {
      if (seen.insert(v).second) out.push_back(v);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct MatchSumEvaluator::Impl {
  std::vector<VertexId> flexible;
  std::vector<std::vector<VertexId>> blocks;
  int s = 0;

  struct ThetaCase {
    bool zero = false;
    int unit_sign = 1;
    std::unique_ptr<PfaffianCache> cache;
  };
  std::vector<ThetaCase> thetas;

  Rational eval_theta(size_t theta, std::span<const Rational> w) const {
    const ThetaCase& tc = thetas[theta];
    if (tc.zero) return Rational(0);
    Rational pf = tc.cache->eval(w);
    return tc.unit_sign > 0 ? pf : -pf;
  }
};

MatchSumEvaluator::~MatchSumEvaluator() = default;
MatchSumEvaluator::MatchSumEvaluator(MatchSumEvaluator&&) noexcept = default;

const std::vector<VertexId>& MatchSumEvaluator::flexible() const { return impl_->flexible; }
const std::vector<std::vector<VertexId>>& MatchSumEvaluator::blocks() const { return impl_->blocks; }

MatchSumEvaluator::MatchSumEvaluator(const PlaneGraph& g, const std::vector<Face>& faces,
                                     std::vector<VertexId> flexible)
    : impl_(std::make_unique<Impl>()) {
  if (auto diag = g.validate()) throw ValidationError("invalid embedding: " + *diag);
  const int n = g.vertex_count();
  const int s = static_cast<int>(faces.size());
  impl_->s = s;
  std::sort(flexible.begin(), flexible.end());
  flexible.erase(std::unique(flexible.begin(), flexible.end()), flexible.end());
  impl_->flexible = flexible;
  std::vector<bool> is_flex(n, false);
  for (VertexId v : flexible) {
    if (v < 0 || v >= n) throw ValidationError("unknown vertex id " + std::to_string(v));
    is_flex[v] = true;
  }

  // Everything the weights can touch must sit on a distinguished face (or
  // be placeable inside one).
  FloatInfo floats = faces.empty() ? FloatInfo{} : analyze_floats(g, faces);
  std::vector<bool> placeable(n, false);
  if (!faces.empty()) {
    for (VertexId v = 0; v < n; ++v) placeable[v] = floats.on_walk[v];
    for (VertexId v : floats.eligible) placeable[v] = true;
  }
  for (VertexId v = 0; v < n; ++v) {
    bool relevant = is_flex[v] || g.vertex_weight(v) != 0;
    if (relevant && !placeable[v]) {
      throw ValidationError("nonzero weight off the distinguished faces (vertex " +
                            std::to_string(v) + ")");
    }
  }

  // Disjoint blocks: each face keeps its walk vertices not claimed by an
  // earlier face; weight-relevant floating vertices join the first block.
  impl_->blocks.assign(s, {});
  std::vector<bool> taken(n, false);
  std::vector<std::vector<VertexId>> floating_of(s);
  for (int i = 0; i < s; ++i) {
    for (VertexId v : faces[i].vertices) {
      if (!taken[v]) {
        taken[v] = true;
        impl_->blocks[i].push_back(v);
      }
    }
  }
  for (VertexId v : floats.eligible) {
    if (!taken[v] && (is_flex[v] || g.vertex_weight(v) != 0)) {
      taken[v] = true;
      floating_of[0].push_back(v);
      impl_->blocks[0].push_back(v);
    }
  }

  // One gadget-augmented graph per parity class.
  impl_->thetas.resize(static_cast<size_t>(1) << s);
  std::vector<int> flex_index(n, -1);
  for (size_t i = 0; i < flexible.size(); ++i) flex_index[flexible[i]] = static_cast<int>(i);

  parallel_for(impl_->thetas.size(), [&](size_t theta) {
    std::vector<FaceGadgetSpec> specs;
    for (int i = 0; i < s; ++i) {
      FaceGadgetSpec spec;
      spec.face_id = faces[i].id;
      spec.parity = (theta >> i) & 1;
      for (VertexId v : faces[i].vertices) {
        if (std::find(impl_->blocks[i].begin(), impl_->blocks[i].end(), v) ==
            impl_->blocks[i].end()) {
          continue;
        }
        spec.block.push_back(v);
        spec.connector_weights.push_back(is_flex[v] ? Rational(0) : g.vertex_weight(v));
      }
      for (VertexId v : floating_of[i]) {
        spec.floating.push_back(v);
        spec.floating_weights.push_back(is_flex[v] ? Rational(0) : g.vertex_weight(v));
      }
      specs.push_back(std::move(spec));
    }
    std::vector<GadgetInsertion> insertions;
    PlaneGraph gt = insert_parity_gadgets(g, specs, &insertions);

    auto& tc = impl_->thetas[theta];
    const int nt = gt.vertex_count();
    if (nt % 2 != 0) {
      tc.zero = true;
      return;
    }
    // Connector edge per flexible vertex, in flexible order.
    std::vector<std::pair<VertexId, VertexId>> connector(impl_->flexible.size(), {-1, -1});
    for (const auto& ins : insertions) {
      for (size_t i = 0; i < ins.block.size(); ++i) {
        int fi = flex_index[ins.block[i]];
        if (fi >= 0) connector[fi] = {ins.block[i], ins.externals[i]};
      }
    }
    for (const auto& [a, b] : connector) {
      internal_check(a >= 0, "flexible vertex missing a connector");
    }

    // One orientation per component, merged into a single matrix; odd
    // components make every term vanish.
    std::vector<int> sign_of_edge_dir;  // parallel to edge list below
    SkewMatrix base(nt), unit(nt);
    for (const auto& comp : gt.connected_components()) {
      if (comp.size() % 2 != 0) {
        // Includes the isolated vertex of an odd gadget on an empty block.
        tc.zero = true;
        return;
      }
      std::vector<VertexId> others;
      std::vector<bool> keep(nt, false);
      for (VertexId v : comp) keep[v] = true;
      for (VertexId v = 0; v < nt; ++v) {
        if (!keep[v]) others.push_back(v);
      }
      std::vector<VertexId> old_of_new;
      PlaneGraph sub = gt.delete_vertices(others, &old_of_new);
      Orientation o = kasteleyn_orient(sub);
      for (const auto& [e, w] : sub.edges()) {
        int u = e.u, v = e.v;
        if (!o.points_from(u, v)) std::swap(u, v);
        base.set(old_of_new[u], old_of_new[v], w);
        unit.set(old_of_new[u], old_of_new[v], Rational(1));
      }
    }

    // Flexible connectors sit at weight zero in the base matrix; their
    // oriented positions are read off the unit matrix.
    std::vector<std::pair<int, int>> variable;
    for (const auto& [v, u] : connector) {
      internal_check(base.at(v, u) == 0 && base.at(u, v) == 0,
                     "flexible connector must start at weight zero");
      if (unit.at(v, u) == 1) {
        variable.emplace_back(v, u);
      } else {
        internal_check(unit.at(u, v) == 1, "connector missing from unit matrix");
        variable.emplace_back(u, v);
      }
    }

    Rational upf = pfaffian(unit);
    if (upf == 0) {
      tc.zero = true;
      return;
    }
    tc.unit_sign = upf > 0 ? 1 : -1;
    tc.cache = std::make_unique<PfaffianCache>(base, variable);
  });
}

Rational MatchSumEvaluator::eval(std::span<const Rational> flexible_weights) const {
  if (flexible_weights.size() != impl_->flexible.size()) {
    throw ValidationError("flexible weight count mismatch");
  }
  Rational total(0);
  for (size_t theta = 0; theta < impl_->thetas.size(); ++theta) {
    total += impl_->eval_theta(theta, flexible_weights);
  }
  return total;
}

std::vector<Rational> MatchSumEvaluator::eval_by_theta(
    std::span<const Rational> flexible_weights) const {
  if (flexible_weights.size() != impl_->flexible.size()) {
    throw ValidationError("flexible weight count mismatch");
  }
  std::vector<Rational> out;
  out.reserve(impl_->thetas.size());
  for (size_t theta = 0; theta < impl_->thetas.size(); ++theta) {
    out.push_back(impl_->eval_theta(theta, flexible_weights));
  }
  return out;
}

Rational matchsum_faces(const PlaneGraph& g, const std::vector<std::string>& face_ids) {
  MatchSumEvaluator ev(g, resolve_face_ids(g, face_ids), {});
  return ev.eval({});
}

Integer count_defects_on_faces_total(const PlaneGraph& g,
                                     const std::vector<std::string>& face_ids) {
  auto faces = resolve_face_ids(g, face_ids);
  auto support = face_vertex_set(g, faces);
  PlaneGraph unweighted = g;
  for (VertexId v = 0; v < g.vertex_count(); ++v) unweighted.set_vertex_weight(v, Rational(0));
  MatchSumEvaluator ev(unweighted, faces, support);
  std::vector<Rational> ones(support.size(), Rational(1));
  Rational r = ev.eval(ones);
  internal_check(is_integer(r), "defect count came out fractional");
  return r.get_num();
}

std::vector<Integer> defect_spectrum(const PlaneGraph& g,
                                     const std::vector<std::string>& face_ids) {
  const int n = g.vertex_count();
  auto faces = resolve_face_ids(g, face_ids);
  auto support = face_vertex_set(g, faces);
  PlaneGraph unweighted = g;
  for (VertexId v = 0; v < n; ++v) unweighted.set_vertex_weight(v, Rational(0));
  MatchSumEvaluator ev(unweighted, faces, support);

  std::vector<Rational> values(n + 1, Rational(0));
  parallel_for(static_cast<size_t>(n) + 1, [&](size_t xi) {
    std::vector<Rational> w(support.size(), Rational(static_cast<long>(xi)));
    values[xi] = ev.eval(w);
  });
  std::vector<Rational> nodes;
  for (int xi = 0; xi <= n; ++xi) nodes.emplace_back(xi);
  VandermondeSolver solver(nodes);
  auto coeffs = solver.coefficients(values);
  std::vector<Integer> out;
  out.reserve(n + 1);
  for (const auto& c : coeffs) {
    internal_check(is_integer(c), "defect spectrum came out fractional");
    out.push_back(c.get_num());
  }
  return out;
}

}  // namespace pdc
