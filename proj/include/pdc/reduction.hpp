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

#ifndef PDC_REDUCTION_HPP
#define PDC_REDUCTION_HPP

#include <map>
#include <vector>

#include "pdc/instance.hpp"
#include "pdc/plane_graph.hpp"
#include "pdc/poly.hpp"

namespace pdc {

// Append-only log of oracle queries, for blowup auditing.
struct OracleQuery {
  int instance_size = 0;
  int parameter = 0;
};

struct OracleTranscript {
  std::vector<OracleQuery> queries;
  void record(int instance_size, int parameter) { queries.push_back({instance_size, parameter}); }
};

struct AuditResult {
  int max_parameter = -1;
  long long query_count = 0;
};

AuditResult audit(const OracleTranscript& t);

// Counts the matchings of a plane graph with exactly `defects` unmatched
// vertices; the query parameter is `defects`.
class DefectMatchOracle {
 public:
  virtual ~DefectMatchOracle() = default;
  virtual Integer count(const PlaneGraph& g, int defects) = 0;
};

// Ground-truth oracle: defect-budget-pruned enumeration, caching the
// per-graph count vectors so the usual 0..k query bursts enumerate once.
class BruteDefectOracle : public DefectMatchOracle {
 public:
  explicit BruteDefectOracle(OracleTranscript* transcript = nullptr)
      : transcript_(transcript) {}
  Integer count(const PlaneGraph& g, int defects) override;

 private:
  OracleTranscript* transcript_;
  std::map<std::pair<std::vector<std::pair<int, int>>, int>, std::vector<Integer>> cache_;
};

// Counts k-defect matchings whose defects avoid a forbidden vertex set;
// the query parameter is k.
class RestrDefectOracle {
 public:
  virtual ~RestrDefectOracle() = default;
  virtual Integer count(const PlaneGraph& g, const std::vector<VertexId>& forbidden, int k) = 0;
};

// Ground-truth restricted oracle (budget-pruned enumeration).
class BruteRestrDefectOracle : public RestrDefectOracle {
 public:
  explicit BruteRestrDefectOracle(OracleTranscript* transcript = nullptr)
      : transcript_(transcript) {}
  Integer count(const PlaneGraph& g, const std::vector<VertexId>& forbidden, int k) override;

 private:
  OracleTranscript* transcript_;
};

struct RestrictedReductionTrace {
  struct NodeEval {
    int xi = 0;
    std::vector<Integer> mu_prefix;  // defect counts 0..k of the raked graph
    std::vector<Rational> p_xi;      // after dividing out the rake factor
  };
  std::vector<NodeEval> nodes;
  MultiPoly p_k;                 // assembled truncation, variables (X, l)
  std::vector<Rational> b;       // after the l substitution
  std::vector<Rational> q_prime; // after dividing by (1+X^2)^|S|
};

// Counts the k-defect matchings of plane g avoiding `forbidden`, using
// only an oracle for unrestricted defect counts. For each rake size
// xi = 1..k+1 the forbidden vertices get a fresh xi-rake; the resulting
// defect-count prefixes, cleaned of the closed-form rake factor
// (1+X^2)^{|S|(xi-1)}, interpolate the coefficients of the bivariate
// truncation whose l <- -(1+X^2) substitution cancels every matching with
// a forbidden defect. Dividing by (1+X^2)^{|S|} then isolates the count
// as the X^k coefficient. All queries carry parameter at most k.
Integer restricted_to_defect(const PlaneGraph& g, const std::vector<VertexId>& forbidden, int k,
                             DefectMatchOracle& oracle, RestrictedReductionTrace* trace = nullptr);

// Restricted oracle backed by restricted_to_defect.
class ReducedRestrDefectOracle : public RestrDefectOracle {
 public:
  ReducedRestrDefectOracle(DefectMatchOracle& inner, OracleTranscript* transcript = nullptr)
      : inner_(inner), transcript_(transcript) {}
  Integer count(const PlaneGraph& g, const std::vector<VertexId>& forbidden, int k) override;

 private:
  DefectMatchOracle& inner_;
  OracleTranscript* transcript_;
};

struct InclusionExclusionTrace {
  struct Term {
    std::vector<int> subset;  // apex indices whose colors the defects avoid
    Integer value;
  };
  std::vector<Term> terms;
};

// Number of perfect matchings of an unweighted instance whose independent
// apices have disjoint planar neighborhoods (every planar vertex sees at
// most one apex), via 2^k restricted-defect queries with parameter k:
// matchings whose defects hit every apex color exactly once correspond
// one-to-one to perfect matchings, and inclusion-exclusion over avoided
// colors isolates them.
Integer apex_to_restricted(const ApexInstance& promise, RestrDefectOracle& oracle,
                           InclusionExclusionTrace* trace = nullptr);

}  // namespace pdc

#endif  // PDC_REDUCTION_HPP
