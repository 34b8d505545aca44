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

#include "pdc/fkt.hpp"

#include <algorithm>
#include <deque>

#include "pdc/errors.hpp"

namespace pdc {

int face_agreement_count(const Face& f, const Orientation& o) {
  int agree = 0;
  for (const auto& e : f.walk) {
    if (o.points_from(e.from, e.to)) ++agree;
  }
  return agree;
}

Orientation kasteleyn_orient(const PlaneGraph& g) {
  if (g.connected_components().size() != 1) {
    throw ValidationError("orientation requires a connected graph");
  }
  Orientation o;
  // Default directions; spanning tree edges keep them.
  for (const auto& [e, w] : g.edges()) o.dir[e] = 1;

  // BFS spanning tree of the primal graph.
  const int n = g.vertex_count();
  std::vector<bool> seen(n, false);
  std::map<EdgeKey, bool> in_tree;
  for (const auto& [e, w] : g.edges()) in_tree[e] = false;
  if (n > 0) {
    std::deque<VertexId> queue{0};
    seen[0] = true;
    while (!queue.empty()) {
      VertexId v = queue.front();
      queue.pop_front();
      for (VertexId nb : g.rotation(v)) {
        if (!seen[nb]) {
          seen[nb] = true;
          in_tree[EdgeKey(v, nb)] = true;
          queue.push_back(nb);
        }
      }
    }
  }

  auto faces = g.faces();
  o.outer_face = faces.empty() ? std::string() : outer_face_id(faces);

  // The non-tree edges form a spanning tree of the dual. BFS it from the
  // outer face; each bounded face is discovered through one non-tree edge,
  // its parent edge.
  std::map<EdgeKey, std::vector<int>> face_of_edge;
  for (size_t i = 0; i < faces.size(); ++i) {
    for (const auto& de : faces[i].walk) {
      face_of_edge[EdgeKey(de.from, de.to)].push_back(static_cast<int>(i));
    }
  }
  int outer_idx = 0;
  for (size_t i = 0; i < faces.size(); ++i) {
    if (faces[i].id == o.outer_face) outer_idx = static_cast<int>(i);
  }
  std::vector<int> parent_edge_of(faces.size(), -1);
  std::vector<EdgeKey> nontree;
  for (const auto& [e, t] : in_tree) {
    if (!t) nontree.push_back(e);
  }
  std::vector<bool> face_seen(faces.size(), false);
  face_seen[outer_idx] = true;
  std::vector<int> order{outer_idx};
  std::deque<int> fq{outer_idx};
  std::vector<EdgeKey> discovered_by(faces.size(), EdgeKey(0, 0));
  while (!fq.empty()) {
    int f = fq.front();
    fq.pop_front();
    for (const auto& de : faces[f].walk) {
      EdgeKey e(de.from, de.to);
      if (in_tree[e]) continue;
      for (int nf : face_of_edge[e]) {
        if (!face_seen[nf]) {
          face_seen[nf] = true;
          discovered_by[nf] = e;
          order.push_back(nf);
          fq.push_back(nf);
        }
      }
    }
  }
  internal_check(std::all_of(face_seen.begin(), face_seen.end(), [](bool b) { return b; }),
                 "dual traversal missed a face");

  // Deepest faces first: all non-parent edges of a face are settled by the
  // time it is processed, so flipping its parent edge is the one remaining
  // degree of freedom.
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int f = *it;
    if (f == outer_idx) continue;
    if (face_agreement_count(faces[f], o) % 2 == 0) {
      o.dir[discovered_by[f]] = -o.dir[discovered_by[f]];
    }
  }
  return o;
}

void SkewMatrix::set(int i, int j, const Rational& v) {
  internal_check(i != j || v == 0, "nonzero diagonal in a skew matrix");
  a_[static_cast<size_t>(i) * n_ + j] = v;
  a_[static_cast<size_t>(j) * n_ + i] = -v;
}

void SkewMatrix::add(int i, int j, const Rational& v) {
  internal_check(i != j, "diagonal update in a skew matrix");
  a_[static_cast<size_t>(i) * n_ + j] += v;
  a_[static_cast<size_t>(j) * n_ + i] -= v;
}

bool SkewMatrix::is_skew_symmetric() const {
  for (int i = 0; i < n_; ++i) {
    for (int j = i; j < n_; ++j) {
      if (at(i, j) != -at(j, i)) return false;
    }
  }
  return true;
}

// In-place pair elimination. After pivoting on (j, j+1) the remaining block
// is the Pfaffian Schur complement; sparsity is exploited by updating only
// the columns the two pivot rows actually touch.
Rational pfaffian_destructive(SkewMatrix& k) {
  const int n = k.size();
  if (n % 2 != 0) return Rational(0);
  int sign = 1;
  Rational prod(1);
  auto& a = k.a_;
  auto idx = [n](int i, int j) { return static_cast<size_t>(i) * n + j; };
  auto swap_rc = [&](int x, int y) {
    for (int c = 0; c < n; ++c) std::swap(a[idx(x, c)], a[idx(y, c)]);
    for (int r = 0; r < n; ++r) std::swap(a[idx(r, x)], a[idx(r, y)]);
    sign = -sign;
  };
  std::vector<int> touched;
  for (int j = 0; j + 1 < n; j += 2) {
    int r = -1;
    for (int c = j + 1; c < n; ++c) {
      if (a[idx(j, c)] != 0) {
        r = c;
        break;
      }
    }
    if (r < 0) return Rational(0);
    if (r != j + 1) swap_rc(r, j + 1);
    const Rational p = a[idx(j, j + 1)];
    prod *= p;
    touched.clear();
    for (int c = j + 2; c < n; ++c) {
      if (a[idx(j, c)] != 0 || a[idx(j + 1, c)] != 0) touched.push_back(c);
    }
    for (size_t xi = 0; xi < touched.size(); ++xi) {
      int x = touched[xi];
      const Rational rowj_x = a[idx(j, x)];
      const Rational rowj1_x = a[idx(j + 1, x)];
      for (size_t yi = xi + 1; yi < touched.size(); ++yi) {
        int y = touched[yi];
        Rational upd = (a[idx(j, y)] * rowj1_x - rowj_x * a[idx(j + 1, y)]) / p;
        if (upd != 0) {
          a[idx(x, y)] += upd;
          a[idx(y, x)] -= upd;
        }
      }
    }
  }
  return (sign > 0) ? prod : -prod;
}

Rational pfaffian(const SkewMatrix& k) {
  if (!k.is_skew_symmetric()) throw ValidationError("pfaffian of an asymmetric matrix");
  SkewMatrix copy = k;
  return pfaffian_destructive(copy);
}

PfaffianCache::PfaffianCache(const SkewMatrix& base,
                             const std::vector<std::pair<int, int>>& variable) {
  const int n = base.size();
  if (n % 2 != 0) {
    always_zero_ = true;
    return;
  }
  std::vector<bool> is_core(n, false);
  for (const auto& [i, j] : variable) {
    internal_check(i != j && base.at(i, j) == 0, "variable position must start zero");
    is_core[i] = is_core[j] = true;
  }

  // Work on a permuted copy: eliminable vertices first, core last.
  std::vector<int> pos_of(n), orig_of(n);
  {
    int next = 0;
    for (int v = 0; v < n; ++v) {
      if (!is_core[v]) {
        pos_of[v] = next;
        orig_of[next] = v;
        ++next;
      }
    }
    for (int v = 0; v < n; ++v) {
      if (is_core[v]) {
        pos_of[v] = next;
        orig_of[next] = v;
        ++next;
      }
    }
    // Row/column permutations flip the Pfaffian sign per transposition.
    std::vector<int> perm = pos_of;
    for (int v = 0; v < n; ++v) {
      while (perm[v] != v) {
        std::swap(perm[v], perm[perm[v]]);
        sign_ = -sign_;
      }
    }
  }
  std::vector<Rational> a(static_cast<size_t>(n) * n, Rational(0));
  auto idx = [n](int i, int j) { return static_cast<size_t>(i) * n + j; };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[idx(pos_of[i], pos_of[j])] = base.at(i, j);
  }

  int fixed_end = n - static_cast<int>(std::count(is_core.begin(), is_core.end(), true));
  auto swap_rc = [&](int x, int y) {
    if (x == y) return;
    for (int c = 0; c < n; ++c) std::swap(a[idx(x, c)], a[idx(y, c)]);
    for (int r = 0; r < n; ++r) std::swap(a[idx(r, x)], a[idx(r, y)]);
    std::swap(orig_of[x], orig_of[y]);
    sign_ = -sign_;
  };

  int j = 0;
  std::vector<int> touched;
  while (j + 1 < fixed_end) {
    int r = -1;
    for (int c = j + 1; c < fixed_end; ++c) {
      if (a[idx(j, c)] != 0) {
        r = c;
        break;
      }
    }
    if (r < 0) {
      bool all_zero = true;
      for (int c = j + 1; c < n; ++c) {
        if (a[idx(j, c)] != 0) {
          all_zero = false;
          break;
        }
      }
      if (all_zero) {
        // This row stays zero under every assignment.
        always_zero_ = true;
        return;
      }
      // Only core columns hit this row; defer the vertex to the core.
      swap_rc(j, fixed_end - 1);
      --fixed_end;
      continue;
    }
    swap_rc(r, j + 1);
    const Rational p = a[idx(j, j + 1)];
    prefactor_ *= p;
    touched.clear();
    for (int c = j + 2; c < n; ++c) {
      if (a[idx(j, c)] != 0 || a[idx(j + 1, c)] != 0) touched.push_back(c);
    }
    for (size_t xi = 0; xi < touched.size(); ++xi) {
      int x = touched[xi];
      const Rational rowj_x = a[idx(j, x)];
      const Rational rowj1_x = a[idx(j + 1, x)];
      for (size_t yi = xi + 1; yi < touched.size(); ++yi) {
        int y = touched[yi];
        Rational upd = (a[idx(j, y)] * rowj1_x - rowj_x * a[idx(j + 1, y)]) / p;
        if (upd != 0) {
          a[idx(x, y)] += upd;
          a[idx(y, x)] -= upd;
        }
      }
    }
    j += 2;
  }
  // Positions j..n-1 (deferred vertices and any odd leftover included) form
  // the core finished per evaluation.
  const int m = n - j;
  core_.assign(orig_of.begin() + j, orig_of.end());
  core_matrix_.resize(static_cast<size_t>(m) * m);
  for (int x = 0; x < m; ++x) {
    for (int y = 0; y < m; ++y) core_matrix_[static_cast<size_t>(x) * m + y] = a[idx(j + x, j + y)];
  }
  std::vector<int> core_pos(n, -1);
  for (int x = 0; x < m; ++x) core_pos[core_[x]] = x;
  for (const auto& [vi, vj] : variable) {
    internal_check(core_pos[vi] >= 0 && core_pos[vj] >= 0, "variable endpoint eliminated");
    var_pos_.emplace_back(core_pos[vi], core_pos[vj]);
  }
}

Rational PfaffianCache::eval(std::span<const Rational> values) const {
  if (always_zero_) return Rational(0);
  internal_check(values.size() == var_pos_.size(), "variable value count mismatch");
  const int m = static_cast<int>(core_.size());
  SkewMatrix s(m);
  for (int x = 0; x < m; ++x) {
    for (int y = x + 1; y < m; ++y) {
      const Rational& v = core_matrix_[static_cast<size_t>(x) * m + y];
      if (v != 0) s.set(x, y, v);
    }
  }
  for (size_t t = 0; t < var_pos_.size(); ++t) {
    if (values[t] != 0) s.add(var_pos_[t].first, var_pos_[t].second, values[t]);
  }
  Rational pf = pfaffian_destructive(s);
  if (pf == 0) return pf;
  Rational out = prefactor_ * pf;
  return (sign_ > 0) ? out : -out;
}

namespace {

Rational perfmatch_component(const PlaneGraph& comp) {
  const int n = comp.vertex_count();
  if (n % 2 != 0) return Rational(0);
  if (n == 0) return Rational(1);
  if (comp.edge_count() == 0) return Rational(0);
  Orientation o = kasteleyn_orient(comp);
  SkewMatrix kw(n), ku(n);
  for (const auto& [e, w] : comp.edges()) {
    int u = e.u, v = e.v;
    if (!o.points_from(u, v)) std::swap(u, v);
    kw.set(u, v, w);
    ku.set(u, v, Rational(1));
  }
  Rational unit = pfaffian_destructive(ku);
  if (unit == 0) return Rational(0);
  Rational pf = pfaffian_destructive(kw);
  return unit > 0 ? pf : -pf;
}

}  // namespace

Rational perfmatch_planar(const PlaneGraph& g) {
  if (auto diag = g.validate()) throw ValidationError("invalid embedding: " + *diag);
  Rational total(1);
  for (const auto& comp_vertices : g.connected_components()) {
    std::vector<VertexId> others;
    std::vector<bool> keep(g.vertex_count(), false);
    for (VertexId v : comp_vertices) keep[v] = true;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (!keep[v]) others.push_back(v);
    }
    total *= perfmatch_component(g.delete_vertices(others));
    if (total == 0) return total;
  }
  return total;
}

}  // namespace pdc
