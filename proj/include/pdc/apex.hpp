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

#ifndef PDC_APEX_HPP
#define PDC_APEX_HPP

#include <vector>

#include "pdc/instance.hpp"
#include "pdc/rational.hpp"

namespace pdc {

struct ApexSolveStats {
  int k = 0;                 // apices
  int s = 0;                 // distinguished faces
  int classes = 0;           // occurring apex-neighborhood classes
  long long grid_evals = 0;  // weighted-matching-sum evaluations
};

// Number of perfect matchings of the two-layer extension graph of a defect
// type: one side [k] for the apices, one vertex per multiset element
// adjacent to its neighborhood. Exact count by enumeration over at most 2k
// vertices.
Integer small_perfmatch(const std::vector<unsigned>& type_masks, int k);

// Exact perfect-matching sum of a k-apex instance whose apex neighborhood
// lies on the distinguished faces.
//
// Apex-apex edges are resolved by summing over the matchings of the apex-
// induced subgraph; each term leaves an independent apex set. For that
// core case, apex edges are first made unit weight by subdivision, planar
// vertices are grouped into neighborhood classes, and the generating
// polynomial of matchings with defects in N(A) -- weighted by one lambda
// indeterminate per class and X per defect -- is recovered on an integer
// grid through the face-restricted matching-sum evaluator. Its X^k slice
// splits the count by defect type; each type's weight multiplies the
// extension count of its type graph.
Rational apex_perfmatch(const ApexInstance& inst, ApexSolveStats* stats = nullptr);

}  // namespace pdc

#endif  // PDC_APEX_HPP
