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

#include "pdc/oracle.hpp"

#include <algorithm>
#include <functional>

#include "pdc/errors.hpp"

namespace pdc {
namespace {

void check_cap(int n, int cap) {
  if (n > cap) {
    throw ValidationError("brute-force oracle refuses " + std::to_string(n) + " vertices (cap " +
                          std::to_string(cap) + ")");
  }
}

struct EdgeList {
  std::vector<EdgeKey> keys;
  std::vector<Rational> weights;
};

EdgeList sorted_edges(const PlaneGraph& g) {
  EdgeList el;
  for (const auto& [e, w] : g.edges()) {
    el.keys.push_back(e);
    el.weights.push_back(w);
  }
  return el;
}

// Include/skip recursion over the canonical edge order; `leaf` sees the
// matched-vertex set and the product of matched edge weights.
void enumerate_matchings(const EdgeList& el, int n,
                         const std::function<void(const std::vector<bool>&, const Rational&)>& leaf) {
  std::vector<bool> matched(n, false);
  std::function<void(size_t, Rational)> rec = [&](size_t i, Rational prod) {
    if (i == el.keys.size()) {
      leaf(matched, prod);
      return;
    }
    rec(i + 1, prod);
    const EdgeKey& e = el.keys[i];
    if (!matched[e.u] && !matched[e.v]) {
      matched[e.u] = matched[e.v] = true;
      rec(i + 1, prod * el.weights[i]);
      matched[e.u] = matched[e.v] = false;
    }
  };
  rec(0, Rational(1));
}

}  // namespace

namespace {

// Weighted perfect-matching enumeration: the lowest unresolved vertex must
// match an unresolved neighbor, so dead branches die immediately.
Rational perfmatch_by_enumeration(int n, const std::vector<std::vector<std::pair<int, Rational>>>& adj) {
  if (n % 2 != 0) return Rational(0);
  Rational total(0);
  std::vector<bool> resolved(n, false);
  std::function<void(int, Rational)> rec = [&](int v, Rational prod) {
    while (v < n && resolved[v]) ++v;
    if (v == n) {
      total += prod;
      return;
    }
    resolved[v] = true;
    for (const auto& [nb, w] : adj[v]) {
      if (!resolved[nb]) {
        resolved[nb] = true;
        rec(v + 1, prod * w);
        resolved[nb] = false;
      }
    }
    resolved[v] = false;
  };
  rec(0, Rational(1));
  return total;
}

}  // namespace

Rational brute_perfmatch(const PlaneGraph& g) {
  const int n = g.vertex_count();
  check_cap(n, kBruteVertexCap);
  std::vector<std::vector<std::pair<int, Rational>>> adj(n);
  for (const auto& [e, w] : g.edges()) {
    adj[e.u].emplace_back(e.v, w);
    adj[e.v].emplace_back(e.u, w);
  }
  return perfmatch_by_enumeration(n, adj);
}

Rational brute_matchsum(const PlaneGraph& g) {
  const int n = g.vertex_count();
  check_cap(n, kBruteVertexCap);
  Rational total(0);
  enumerate_matchings(sorted_edges(g), n, [&](const std::vector<bool>& matched, const Rational& prod) {
    Rational term = prod;
    for (int v = 0; v < n && term != 0; ++v) {
      if (!matched[v]) term *= g.vertex_weight(v);
    }
    total += term;
  });
  return total;
}

Poly1 brute_mu(const PlaneGraph& g) {
  const int n = g.vertex_count();
  check_cap(n, kBruteVertexCap);
  std::vector<Rational> counts(n + 1, Rational(0));
  enumerate_matchings(sorted_edges(g), n, [&](const std::vector<bool>& matched, const Rational&) {
    int defects = static_cast<int>(std::count(matched.begin(), matched.end(), false));
    counts[defects] += 1;
  });
  return Poly1(std::move(counts));
}

Integer brute_defects(const PlaneGraph& g, int k, const std::vector<VertexId>& forbidden) {
  const int n = g.vertex_count();
  check_cap(n, kBruteVertexCap);
  std::vector<bool> banned(n, false);
  for (VertexId v : forbidden) banned[v] = true;
  Integer count = 0;
  enumerate_matchings(sorted_edges(g), n, [&](const std::vector<bool>& matched, const Rational&) {
    int defects = 0;
    for (int v = 0; v < n; ++v) {
      if (!matched[v]) {
        if (banned[v]) return;
        ++defects;
      }
    }
    if (defects == k) ++count;
  });
  return count;
}

Rational brute_perfmatch_apex(const ApexInstance& inst) {
  const int p = inst.planar.vertex_count();
  const int n = inst.total_vertices();
  check_cap(n, kBruteVertexCap);
  std::vector<std::vector<std::pair<int, Rational>>> adj(n);
  auto link = [&adj](int u, int v, const Rational& w) {
    adj[u].emplace_back(v, w);
    adj[v].emplace_back(u, w);
  };
  for (const auto& [e, w] : inst.planar.edges()) link(e.u, e.v, w);
  for (const auto& e : inst.apex_planar_edges) link(e.v, p + e.apex, e.w);
  for (const auto& e : inst.apex_apex_edges) link(p + e.a, p + e.b, e.w);
  return perfmatch_by_enumeration(n, adj);
}

std::vector<Integer> count_defects_up_to(const PlaneGraph& g, int kmax) {
  return count_defects_avoiding_up_to(g, kmax, {});
}

std::vector<Integer> count_defects_avoiding_up_to(const PlaneGraph& g, int kmax,
                                                  const std::vector<VertexId>& forbidden) {
  const int n = g.vertex_count();
  check_cap(n, 140);
  std::vector<bool> banned(n, false);
  for (VertexId v : forbidden) banned[v] = true;
  std::vector<Integer> counts(kmax + 1, 0);
  // Lowest-vertex recursion: the smallest unresolved vertex is either a
  // defect (budget permitting) or matched to an unresolved neighbor.
  std::vector<bool> resolved(n, false);
  std::function<void(int, int)> rec = [&](int v, int defects) {
    while (v < n && resolved[v]) ++v;
    if (v == n) {
      ++counts[defects];
      return;
    }
    resolved[v] = true;
    if (defects < kmax && !banned[v]) rec(v + 1, defects + 1);
    for (VertexId nb : g.rotation(v)) {
      if (!resolved[nb]) {
        resolved[nb] = true;
        rec(v + 1, defects);
        resolved[nb] = false;
      }
    }
    resolved[v] = false;
  };
  rec(0, 0);
  return counts;
}

Integer pm_count_sparse(const PlaneGraph& g) {
  const int n = g.vertex_count();
  if (n % 2 != 0) return 0;
  Integer count = 0;
  std::vector<bool> resolved(n, false);
  std::function<void(int)> rec = [&](int v) {
    while (v < n && resolved[v]) ++v;
    if (v == n) {
      ++count;
      return;
    }
    resolved[v] = true;
    for (VertexId nb : g.rotation(v)) {
      if (!resolved[nb]) {
        resolved[nb] = true;
        rec(v + 1);
        resolved[nb] = false;
      }
    }
    resolved[v] = false;
  };
  rec(0);
  return count;
}

}  // namespace pdc
