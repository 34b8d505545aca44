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

#ifndef PDC_FKT_HPP
#define PDC_FKT_HPP

#include <map>
#include <span>
#include <vector>

#include "pdc/plane_graph.hpp"

namespace pdc {

// Edge orientation of a plane graph satisfying the odd-orientation
// property: on the walk of every face other than the designated outer one,
// an odd number of steps agree with the chosen directions. This makes all
// perfect-matching terms of the associated Pfaffian carry one common sign.
struct Orientation {
  // +1: directed low->high endpoint, -1: the reverse.
  std::map<EdgeKey, int> dir;
  std::string outer_face;

  bool points_from(VertexId u, VertexId v) const {
    int d = dir.at(EdgeKey(u, v));
    return (u < v) ? d > 0 : d < 0;
  }
};

// Number of walk steps traversed in agreement with the orientation.
int face_agreement_count(const Face& f, const Orientation& o);

// Builds an odd orientation for a connected validated plane graph:
// orient a spanning tree arbitrarily, then fix the remaining edges walking
// a spanning tree of the dual from the outer face, deepest faces first;
// each bounded face then has exactly one undetermined edge left, which is
// set to make the face's agreement count odd.
Orientation kasteleyn_orient(const PlaneGraph& g);

// Dense skew-symmetric matrix of exact rationals.
class SkewMatrix {
 public:
  explicit SkewMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n, Rational(0)) {}

  int size() const { return n_; }
  const Rational& at(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }
  void set(int i, int j, const Rational& v);
  void add(int i, int j, const Rational& v);
  bool is_skew_symmetric() const;

 private:
  friend Rational pfaffian_destructive(SkewMatrix& k);
  int n_;
  std::vector<Rational> a_;
};

// Exact Pfaffian by skew-symmetric elimination with pivoting; satisfies
// Pf(K)^2 = det(K). Odd dimension gives 0.
Rational pfaffian(const SkewMatrix& k);

// Pfaffian of a skew matrix in which a designated set of entry pairs takes
// per-call values while everything else is fixed. All fixed rows that can
// be eliminated without touching a variable endpoint are eliminated once,
// up front; eval() then finishes on the small remaining core. Pivot
// choices never read variable entries, so the cached Schur complement is
// exact for every assignment.
class PfaffianCache {
 public:
  // `base` carries the fixed entries, with zeros at the variable
  // positions; `variable` lists (i, j) positions, i != j.
  PfaffianCache(const SkewMatrix& base, const std::vector<std::pair<int, int>>& variable);

  // values[t] is added at variable[t] (and subtracted at the mirror).
  Rational eval(std::span<const Rational> values) const;

  int core_size() const { return static_cast<int>(core_.size()); }

 private:
  bool always_zero_ = false;
  int sign_ = 1;
  Rational prefactor_ = Rational(1);
  std::vector<int> core_;                     // original indices, in eliminated order
  std::vector<Rational> core_matrix_;         // dense core x core, row-major
  std::vector<std::pair<int, int>> var_pos_;  // positions within the core
};

// Exact weighted perfect-matching sum of a validated plane graph, one
// connected component at a time: odd components contribute 0; otherwise
// the Pfaffian of the oriented weight matrix, with its global sign fixed
// by the Pfaffian of the unit-weight matrix on the same oriented edges
// (whose sign is weight-independent, and which certifies 0 when no
// perfect matching exists).
Rational perfmatch_planar(const PlaneGraph& g);

}  // namespace pdc

#endif  // PDC_FKT_HPP
