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

#include "pdc/apex.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "pdc/errors.hpp"
#include "pdc/fkt.hpp"
#include "pdc/gadget.hpp"
#include "pdc/matchsum.hpp"
#include "pdc/poly.hpp"
#include "pdc/threads.hpp"

namespace pdc {

Integer small_perfmatch(const std::vector<unsigned>& type_masks, int k) {
  if (static_cast<int>(type_masks.size()) != k) {
    throw ValidationError("defect type must have exactly k elements");
  }
  // Enumerate assignments of multiset elements to distinct apices; both
  // sides have k vertices, so complete assignments are perfect matchings.
  Integer count = 0;
  std::vector<bool> used(k, false);
  std::function<void(int)> rec = [&](int i) {
    if (i == k) {
      ++count;
      return;
    }
    for (int j = 0; j < k; ++j) {
      if (!used[j] && (type_masks[i] & (1u << j))) {
        used[j] = true;
        rec(i + 1);
        used[j] = false;
      }
    }
  };
  rec(0);
  return count;
}

namespace {

struct ClassTable {
  std::vector<unsigned> masks;               // distinct neighborhoods, ascending
  std::vector<int> sizes;                    // members per class
  std::map<VertexId, int> class_of_vertex;   // only vertices in N(A')
};

ClassTable build_classes(const ApexInstance& inst, const std::vector<int>& apex_subset) {
  std::vector<int> pos_of_apex(inst.apex_count, -1);
  for (size_t i = 0; i < apex_subset.size(); ++i) pos_of_apex[apex_subset[i]] = static_cast<int>(i);
  std::map<VertexId, unsigned> mask_of;
  for (const auto& e : inst.apex_planar_edges) {
    int pos = pos_of_apex[e.apex];
    if (pos >= 0) mask_of[e.v] |= 1u << pos;
  }
  ClassTable table;
  std::map<unsigned, int> index_of;
  for (const auto& [v, mask] : mask_of) {
    auto it = index_of.find(mask);
    if (it == index_of.end()) {
      index_of.emplace(mask, 0);
    }
  }
  for (auto& [mask, idx] : index_of) {
    idx = static_cast<int>(table.masks.size());
    table.masks.push_back(mask);
    table.sizes.push_back(0);
  }
  for (const auto& [v, mask] : mask_of) {
    int idx = index_of[mask];
    table.class_of_vertex[v] = idx;
    table.sizes[idx] += 1;
  }
  return table;
}

// Core case: the given apices form an independent set with unit planar
// edges; everything outside `apex_subset` is ignored.
Rational solve_independent(const ApexInstance& inst, const std::vector<int>& apex_subset,
                           const MatchSumEvaluator& evaluator, ApexSolveStats* stats) {
  const int k = static_cast<int>(apex_subset.size());
  if (k == 0) return perfmatch_planar(inst.planar);
  if (k > 30) throw ValidationError("apex solver refuses more than 30 apices");

  ClassTable classes = build_classes(inst, apex_subset);
  const int c = static_cast<int>(classes.masks.size());
  int m = 0;
  for (int size : classes.sizes) m += size;
  if (k > m) return Rational(0);

  // Integer interpolation grid. The defect-generating polynomial has X
  // degree at most m (defects stay inside N(A)), and the class variable
  // lambda_R appears with degree at most min(k, |R's class|).
  GridEvaluations evals;
  evals.nodes.resize(1 + c);
  for (int x = 0; x <= m; ++x) evals.nodes[0].emplace_back(x);
  std::vector<int> bound(c);
  for (int j = 0; j < c; ++j) {
    bound[j] = std::min(k, classes.sizes[j]);
    for (int x = 0; x <= bound[j]; ++x) evals.nodes[1 + j].emplace_back(x);
  }
  evals.values.assign(evals.grid_size(), Rational(0));

  const auto& flexible = evaluator.flexible();
  std::vector<int> class_of_flex(flexible.size(), -1);
  for (size_t i = 0; i < flexible.size(); ++i) {
    auto it = classes.class_of_vertex.find(flexible[i]);
    if (it != classes.class_of_vertex.end()) class_of_flex[i] = it->second;
  }

  parallel_for(evals.grid_size(), [&](size_t flat) {
    size_t rest = flat;
    // Row-major: X index outermost, class indices after.
    std::vector<int> xi(c, 0);
    for (int j = c; j-- > 0;) {
      xi[j] = static_cast<int>(rest % evals.nodes[1 + j].size());
      rest /= evals.nodes[1 + j].size();
    }
    long r = static_cast<long>(rest);
    std::vector<Rational> w(flexible.size(), Rational(0));
    for (size_t i = 0; i < flexible.size(); ++i) {
      if (class_of_flex[i] >= 0) w[i] = Rational(r) * Rational(xi[class_of_flex[i]]);
    }
    evals.values[flat] = evaluator.eval(w);
  });
  if (stats) stats->grid_evals += static_cast<long long>(evals.grid_size());

  std::vector<std::string> names;
  for (int j = 0; j < c; ++j) names.push_back("L" + std::to_string(j));
  MultiPoly slice = sliced_interpolate(evals, k, std::move(names));

  Rational total(0);
  for (const auto& [exps, coeff] : slice.terms()) {
    int sum = 0;
    for (int e : exps) sum += e;
    internal_check(sum == k, "defect-type slice has a monomial of wrong total degree");
    std::vector<unsigned> type;
    for (int j = 0; j < c; ++j) {
      for (int rep = 0; rep < exps[j]; ++rep) type.push_back(classes.masks[j]);
    }
    total += coeff * Rational(small_perfmatch(type, k));
  }
  return total;
}

}  // namespace

Rational apex_perfmatch(const ApexInstance& inst, ApexSolveStats* stats) {
  if (auto diag = inst.validate()) throw ValidationError(*diag);
  {
    std::set<std::pair<int, VertexId>> seen;
    for (const auto& e : inst.apex_planar_edges) {
      if (!seen.insert({e.apex, e.v}).second) throw ValidationError("duplicate apex edge");
    }
    std::set<std::pair<int, int>> seen2;
    for (const auto& e : inst.apex_apex_edges) {
      if (!seen2.insert({std::min(e.a, e.b), std::max(e.a, e.b)}).second) {
        throw ValidationError("duplicate apex edge");
      }
    }
  }
  ApexInstance work = subdivide_apex_edges(inst);
  if (stats) {
    stats->k = work.apex_count;
    stats->s = static_cast<int>(work.distinguished_faces.size());
    std::vector<int> all_apices;
    for (int a = 0; a < work.apex_count; ++a) all_apices.push_back(a);
    stats->classes = static_cast<int>(build_classes(work, all_apices).masks.size());
    stats->grid_evals = 0;
  }

  // The evaluator sees the planar part with all weights supplied per call;
  // its gadget graphs and eliminations are shared by every apex-matching
  // term below.
  PlaneGraph h = work.planar;
  for (VertexId v = 0; v < h.vertex_count(); ++v) h.set_vertex_weight(v, Rational(0));
  std::vector<Face> faces = work.resolve_faces();
  MatchSumEvaluator evaluator(h, faces, work.apex_neighborhood_union());

  // Sum over matchings of the apex-induced subgraph: matched apices leave
  // the instance, and the rest behaves as an independent set.
  Rational total(0);
  std::vector<bool> used(work.apex_count, false);
  const auto& aa = work.apex_apex_edges;
  std::function<void(size_t, Rational)> rec = [&](size_t i, Rational prod) {
    if (i == aa.size()) {
      std::vector<int> rest;
      for (int a = 0; a < work.apex_count; ++a) {
        if (!used[a]) rest.push_back(a);
      }
      total += prod * solve_independent(work, rest, evaluator, stats);
      return;
    }
    rec(i + 1, prod);
    if (!used[aa[i].a] && !used[aa[i].b]) {
      used[aa[i].a] = used[aa[i].b] = true;
      rec(i + 1, prod * aa[i].w);
      used[aa[i].a] = used[aa[i].b] = false;
    }
  };
  rec(0, Rational(1));
  return total;
}

}  // namespace pdc
