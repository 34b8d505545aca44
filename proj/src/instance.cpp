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

#include "pdc/instance.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "pdc/errors.hpp"

namespace pdc {
namespace {

using json = nlohmann::ordered_json;

int require_int(const json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_number_integer()) {
    throw ValidationError(std::string("instance field \"") + field + "\" missing or not an integer");
  }
  return j[field].get<int>();
}

Rational weight_or(const json& j, const Rational& fallback) {
  if (!j.contains("weight")) return fallback;
  if (!j["weight"].is_string()) throw ValidationError("instance field \"weight\" must be a \"num/den\" string");
  return rational_from_string(j["weight"].get<std::string>());
}

}  // namespace

std::vector<VertexId> ApexInstance::apex_neighborhood(int apex) const {
  std::vector<VertexId> out;
  for (const auto& e : apex_planar_edges) {
    if (e.apex == apex) out.push_back(e.v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<VertexId> ApexInstance::apex_neighborhood_union() const {
  std::vector<VertexId> out;
  for (const auto& e : apex_planar_edges) out.push_back(e.v);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Face> ApexInstance::resolve_faces() const {
  auto all = planar.faces();
  std::vector<Face> out;
  for (const auto& id : distinguished_faces) {
    if (id == "plane") {
      if (planar.edge_count() > 0) {
        throw ValidationError("face \"plane\" is only valid for an edgeless graph");
      }
      Face f;
      f.id = "plane";
      out.push_back(std::move(f));
      continue;
    }
    const Face* f = find_face(all, id);
    if (!f) throw ValidationError("distinguished face \"" + id + "\" not found");
    out.push_back(*f);
  }
  return out;
}

std::optional<std::string> ApexInstance::validate() const {
  if (auto diag = planar.validate()) return diag;
  std::vector<Face> faces;
  try {
    faces = resolve_faces();
  } catch (const ValidationError& e) {
    return std::string(e.what());
  }
  for (const auto& e : apex_planar_edges) {
    if (e.apex < 0 || e.apex >= apex_count) return "apex edge references unknown apex";
    if (e.v < 0 || e.v >= planar.vertex_count()) return "apex edge references unknown planar vertex";
  }
  for (const auto& e : apex_apex_edges) {
    if (e.a < 0 || e.a >= apex_count || e.b < 0 || e.b >= apex_count || e.a == e.b) {
      return "bad apex-apex edge";
    }
  }
  if (apex_count > 0 && !apex_planar_edges.empty()) {
    // A neighbor is covered if it sits on a distinguished walk. Components
    // that touch no distinguished face can be drawn inside the first one,
    // so their isolated and outer-walk vertices also count as covered.
    const int n = planar.vertex_count();
    std::vector<bool> on_walk(n, false);
    for (const auto& f : faces) {
      for (VertexId v : f.vertices) on_walk[v] = true;
    }
    auto comps = planar.connected_components();
    auto all_faces = planar.faces();
    std::vector<int> comp_of(n, -1);
    for (size_t c = 0; c < comps.size(); ++c) {
      for (VertexId v : comps[c]) comp_of[v] = static_cast<int>(c);
    }
    std::vector<bool> comp_touches(comps.size(), false);
    for (VertexId v = 0; v < n; ++v) {
      if (on_walk[v]) comp_touches[comp_of[v]] = true;
    }
    for (VertexId v : apex_neighborhood_union()) {
      bool covered = on_walk[v];
      if (!covered && !faces.empty() && !comp_touches[comp_of[v]]) {
        if (planar.degree(v) == 0) {
          covered = true;
        } else {
          const Face* outer = nullptr;
          for (const auto& f : all_faces) {
            if (!f.walk.empty() && comp_of[f.walk[0].from] == comp_of[v] &&
                (!outer || f.walk.size() > outer->walk.size())) {
              outer = &f;
            }
          }
          covered = outer && outer->contains(v);
        }
      }
      if (!covered) {
        return "apex neighbor " + std::to_string(v) + " not on any distinguished face";
      }
    }
  }
  return std::nullopt;
}

ApexInstance instance_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ValidationError(std::string("instance is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ValidationError("instance must be a JSON object");
  if (!j.contains("vertices") || !j["vertices"].is_array()) {
    throw ValidationError("instance field \"vertices\" missing or not an array");
  }
  if (!j.contains("edges") || !j["edges"].is_array()) {
    throw ValidationError("instance field \"edges\" missing or not an array");
  }

  std::set<int> apex_ids;
  if (j.contains("apices")) {
    if (!j["apices"].is_array()) throw ValidationError("instance field \"apices\" must be an array");
    for (const auto& a : j["apices"]) {
      if (!a.is_number_integer()) throw ValidationError("instance field \"apices\" must hold integers");
      apex_ids.insert(a.get<int>());
    }
  }

  // Original ids must be dense 0..N-1. Planar vertices are compacted first,
  // keeping their relative order; apices follow in sorted order.
  const int total = static_cast<int>(j["vertices"].size());
  std::vector<Rational> weight_of(total, Rational(0));
  std::vector<bool> seen(total, false);
  for (const auto& vj : j["vertices"]) {
    int id = require_int(vj, "id");
    if (id < 0 || id >= total || seen[id]) {
      throw ValidationError("instance field \"id\": vertex ids must be dense 0..N-1 without repeats");
    }
    seen[id] = true;
    weight_of[id] = weight_or(vj, Rational(0));
  }
  for (int a : apex_ids) {
    if (a < 0 || a >= total) throw ValidationError("instance field \"apices\" references unknown vertex");
  }

  std::vector<int> planar_of_orig(total, -1);
  std::vector<int> apex_of_orig(total, -1);
  std::vector<int> planar_orig;
  for (int id = 0; id < total; ++id) {
    if (!apex_ids.count(id)) {
      planar_of_orig[id] = static_cast<int>(planar_orig.size());
      planar_orig.push_back(id);
    }
  }
  {
    int i = 0;
    for (int a : apex_ids) apex_of_orig[a] = i++;
  }

  ApexInstance inst;
  inst.apex_count = static_cast<int>(apex_ids.size());
  inst.planar = PlaneGraph(static_cast<int>(planar_orig.size()));
  for (size_t p = 0; p < planar_orig.size(); ++p) {
    inst.planar.set_vertex_weight(static_cast<VertexId>(p), weight_of[planar_orig[p]]);
  }

  for (const auto& ej : j["edges"]) {
    int u = require_int(ej, "u");
    int v = require_int(ej, "v");
    if (u < 0 || u >= total || v < 0 || v >= total) {
      throw ValidationError("instance field \"edges\" references unknown vertex");
    }
    Rational w = weight_or(ej, Rational(1));
    bool ua = apex_ids.count(u) > 0, va = apex_ids.count(v) > 0;
    if (ua && va) {
      inst.apex_apex_edges.push_back({apex_of_orig[u], apex_of_orig[v], w});
    } else if (ua || va) {
      int a = ua ? u : v;
      int p = ua ? v : u;
      inst.apex_planar_edges.push_back({apex_of_orig[a], planar_of_orig[p], w});
    } else {
      inst.planar.add_edge(planar_of_orig[u], planar_of_orig[v], w);
    }
  }

  if (j.contains("rotation")) {
    if (!j["rotation"].is_object()) throw ValidationError("instance field \"rotation\" must be an object");
    for (const auto& [key, arr] : j["rotation"].items()) {
      int orig;
      try {
        orig = std::stoi(key);
      } catch (const std::exception&) {
        throw ValidationError("instance field \"rotation\" has non-numeric key \"" + key + "\"");
      }
      if (orig < 0 || orig >= total) throw ValidationError("instance field \"rotation\" references unknown vertex");
      if (apex_ids.count(orig)) throw ValidationError("instance field \"rotation\" given for an apex");
      if (!arr.is_array()) throw ValidationError("instance field \"rotation\" entries must be arrays");
      std::vector<VertexId> rot;
      for (const auto& nb : arr) {
        if (!nb.is_number_integer()) throw ValidationError("instance field \"rotation\" entries must hold integers");
        int n = nb.get<int>();
        if (n < 0 || n >= total || planar_of_orig[n] < 0) {
          throw ValidationError("instance field \"rotation\" references a non-planar vertex");
        }
        rot.push_back(planar_of_orig[n]);
      }
      inst.planar.set_rotation(planar_of_orig[orig], rot);
    }
  }

  if (auto diag = inst.planar.validate()) {
    throw ValidationError("instance planar part invalid: " + *diag);
  }

  if (j.contains("distinguished_faces")) {
    if (!j["distinguished_faces"].is_array()) {
      throw ValidationError("instance field \"distinguished_faces\" must be an array");
    }
    auto faces = inst.planar.faces();
    for (const auto& fj : j["distinguished_faces"]) {
      std::string ref;
      if (fj.is_string()) {
        ref = fj.get<std::string>();
      } else if (fj.is_array() && !fj.empty() && fj[0].is_string()) {
        ref = fj[0].get<std::string>();
      } else {
        throw ValidationError("instance field \"distinguished_faces\" entries must be edge-id strings or arrays of them");
      }
      auto de = parse_directed_edge_id(ref);
      if (!de) throw ValidationError("instance field \"distinguished_faces\" has malformed edge id \"" + ref + "\"");
      if (de->from < 0 || de->from >= total || de->to < 0 || de->to >= total ||
          planar_of_orig[de->from] < 0 || planar_of_orig[de->to] < 0) {
        throw ValidationError("instance field \"distinguished_faces\" references a non-planar vertex");
      }
      DirectedEdge mapped{planar_of_orig[de->from], planar_of_orig[de->to]};
      const Face* f = find_face(faces, directed_edge_id(mapped));
      if (!f) {
        throw ValidationError("instance field \"distinguished_faces\": no face contains \"" + ref + "\"");
      }
      inst.distinguished_faces.push_back(f->id);
    }
  }
  return inst;
}

ApexInstance load_instance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open instance file \"" + path + "\"");
  std::ostringstream ss;
  ss << in.rdbuf();
  return instance_from_json(ss.str());
}

std::string instance_to_json(const ApexInstance& inst) {
  json j;
  const int p = inst.planar.vertex_count();
  json vertices = json::array();
  for (VertexId v = 0; v < p; ++v) {
    vertices.push_back({{"id", v}, {"weight", rational_to_string(inst.planar.vertex_weight(v))}});
  }
  for (int a = 0; a < inst.apex_count; ++a) {
    vertices.push_back({{"id", p + a}, {"weight", "0/1"}});
  }
  j["vertices"] = std::move(vertices);

  json edges = json::array();
  for (const auto& [e, w] : inst.planar.edges()) {
    edges.push_back({{"u", e.u}, {"v", e.v}, {"weight", rational_to_string(w)}});
  }
  for (const auto& e : inst.apex_planar_edges) {
    edges.push_back({{"u", e.v}, {"v", p + e.apex}, {"weight", rational_to_string(e.w)}});
  }
  for (const auto& e : inst.apex_apex_edges) {
    edges.push_back({{"u", p + std::min(e.a, e.b)}, {"v", p + std::max(e.a, e.b)},
                     {"weight", rational_to_string(e.w)}});
  }
  j["edges"] = std::move(edges);

  json rot = json::object();
  for (VertexId v = 0; v < p; ++v) {
    rot[std::to_string(v)] = inst.planar.rotation(v);
  }
  j["rotation"] = std::move(rot);

  json apices = json::array();
  for (int a = 0; a < inst.apex_count; ++a) apices.push_back(p + a);
  j["apices"] = std::move(apices);

  json dfaces = json::array();
  for (const auto& id : inst.distinguished_faces) dfaces.push_back(json::array({id}));
  j["distinguished_faces"] = std::move(dfaces);

  return j.dump() + "\n";
}

void save_instance(const ApexInstance& inst, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write instance file \"" + path + "\"");
  out << instance_to_json(inst);
}

}  // namespace pdc
