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

#ifndef PDC_BUILDERS_HPP
#define PDC_BUILDERS_HPP

#include "pdc/plane_graph.hpp"

namespace pdc {

// Ready-made embedded graphs, used by the CLI bench harness and all over the
// tests. All edges get unit weight and all vertex weights start at zero.

PlaneGraph make_path(int n);
PlaneGraph make_cycle(int n);

// rows x cols grid, vertices numbered row-major.
PlaneGraph make_grid(int rows, int cols);

// Center 0 with `leaves` pendant neighbors.
PlaneGraph make_star(int leaves);

// Cycle 0..n-1 plus hub n adjacent to every rim vertex.
PlaneGraph make_wheel(int n);

}  // namespace pdc

#endif  // PDC_BUILDERS_HPP
