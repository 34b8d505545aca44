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

#include "pdc/reduction.hpp"

#include <algorithm>

#include "pdc/errors.hpp"
#include "pdc/gadget.hpp"
#include "pdc/oracle.hpp"

namespace pdc {

AuditResult audit(const OracleTranscript& t) {
  AuditResult out;
  out.query_count = static_cast<long long>(t.queries.size());
  for (const auto& q : t.queries) out.max_parameter = std::max(out.max_parameter, q.parameter);
  return out;
}

Integer BruteDefectOracle::count(const PlaneGraph& g, int defects) {
  if (defects < 0) throw ValidationError("negative defect count");
  if (transcript_) transcript_->record(g.vertex_count(), defects);
  std::vector<std::pair<int, int>> key_edges;
  for (const auto& [e, w] : g.edges()) key_edges.emplace_back(e.u, e.v);
  auto key = std::make_pair(std::move(key_edges), g.vertex_count());
  auto it = cache_.find(key);
  if (it == cache_.end() || static_cast<int>(it->second.size()) <= defects) {
    cache_[key] = count_defects_up_to(g, defects);
    it = cache_.find(key);
  }
  return it->second[defects];
}

Integer BruteRestrDefectOracle::count(const PlaneGraph& g, const std::vector<VertexId>& forbidden,
                                      int k) {
  if (k < 0) throw ValidationError("negative defect count");
  if (transcript_) transcript_->record(g.vertex_count(), k);
  return count_defects_avoiding_up_to(g, k, forbidden)[k];
}

Integer ReducedRestrDefectOracle::count(const PlaneGraph& g,
                                        const std::vector<VertexId>& forbidden, int k) {
  if (transcript_) transcript_->record(g.vertex_count(), k);
  return restricted_to_defect(g, forbidden, k, inner_);
}

Integer restricted_to_defect(const PlaneGraph& g, const std::vector<VertexId>& forbidden, int k,
                             DefectMatchOracle& oracle, RestrictedReductionTrace* trace) {
  if (auto diag = g.validate()) throw ValidationError("invalid embedding: " + *diag);
  if (k < 0) throw ValidationError("negative defect count");
  std::vector<VertexId> s(forbidden);
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  const unsigned long s_size = s.size();

  // Rake size 0 would put the closed-form factor below degree zero, so the
  // interpolation nodes start at 1; any k+1 distinct sizes determine the
  // degree-at-most-k coefficients.
  std::vector<Rational> nodes;
  std::vector<TruncatedPoly> p_at_node;
  for (int xi = 1; xi <= k + 1; ++xi) {
    PlaneGraph raked = attach_rakes(g, s, xi);
    std::vector<Rational> mu(k + 1, Rational(0));
    std::vector<Integer> mu_int;
    for (int j = 0; j <= k; ++j) {
      Integer c = oracle.count(raked, j);
      mu[j] = Rational(c);
      mu_int.push_back(c);
    }
    TruncatedPoly mu_trunc(k, std::move(mu));
    TruncatedPoly factor = binomial_power_trunc(s_size * static_cast<unsigned long>(xi - 1), k);
    TruncatedPoly p_xi = trunc_div(factor, mu_trunc, k);
    nodes.emplace_back(xi);
    if (trace) trace->nodes.push_back({xi, std::move(mu_int), p_xi.c});
    p_at_node.push_back(std::move(p_xi));
  }

  // Coefficient-wise interpolation in the rake-size indeterminate.
  VandermondeSolver solver(nodes);
  MultiPoly p_k({"X", "l"});
  for (int t = 0; t <= k; ++t) {
    std::vector<Rational> values;
    values.reserve(nodes.size());
    for (const auto& p : p_at_node) values.push_back(p.c[t]);
    auto coeffs = solver.coefficients(values);
    for (size_t i = 0; i < coeffs.size(); ++i) {
      if (coeffs[i] == 0) continue;
      internal_check(static_cast<int>(i) <= t,
                     "assembled truncation violates degree dominance");
      p_k.add_term({t, static_cast<int>(i)}, coeffs[i]);
    }
  }
  if (trace) trace->p_k = p_k;

  TruncatedPoly b = substitute_ell(p_k, k);
  TruncatedPoly denom = binomial_power_trunc(s_size, k);
  TruncatedPoly q_prime = trunc_div(denom, b, k);
  if (trace) {
    trace->b = b.c;
    trace->q_prime = q_prime.c;
  }
  const Rational& answer = q_prime.c[k];
  internal_check(is_integer(answer), "restricted defect count came out fractional");
  return answer.get_num();
}

Integer apex_to_restricted(const ApexInstance& promise, RestrDefectOracle& oracle,
                           InclusionExclusionTrace* trace) {
  if (auto diag = promise.planar.validate()) {
    throw ValidationError("invalid embedding: " + *diag);
  }
  if (!promise.apex_apex_edges.empty()) {
    throw ValidationError("promise violation: apices must be independent");
  }
  for (const auto& [e, w] : promise.planar.edges()) {
    if (w != 1) throw ValidationError("promise violation: graph must be unweighted");
  }
  const int k = promise.apex_count;
  std::vector<std::vector<VertexId>> color(k);
  {
    std::vector<int> apex_of(promise.planar.vertex_count(), -1);
    for (const auto& e : promise.apex_planar_edges) {
      if (e.w != 1) throw ValidationError("promise violation: graph must be unweighted");
      if (apex_of[e.v] >= 0 && apex_of[e.v] != e.apex) {
        throw ValidationError("promise violation: vertex " + std::to_string(e.v) +
                              " sees more than one apex");
      }
      if (apex_of[e.v] != e.apex) {
        apex_of[e.v] = e.apex;
        color[e.apex].push_back(e.v);
      }
    }
  }

  // Matchings whose defects hit every color exactly once extend uniquely
  // to perfect matchings; count them by alternating sums over avoided
  // colors.
  Integer total = 0;
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    std::vector<VertexId> avoid;
    std::vector<int> subset;
    for (int i = 0; i < k; ++i) {
      if (mask & (1u << i)) {
        subset.push_back(i);
        avoid.insert(avoid.end(), color[i].begin(), color[i].end());
      }
    }
    Integer term = oracle.count(promise.planar, avoid, k);
    if (trace) trace->terms.push_back({subset, term});
    if (__builtin_popcount(mask) % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

}  // namespace pdc
