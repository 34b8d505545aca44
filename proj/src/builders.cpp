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

#include "pdc/builders.hpp"

#include "pdc/errors.hpp"

namespace pdc {

PlaneGraph make_path(int n) {
  PlaneGraph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

PlaneGraph make_cycle(int n) {
  if (n < 3) throw ValidationError("cycle needs at least 3 vertices");
  PlaneGraph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  // Degree-2 rotations are planar in any order, but keep (prev, next).
  for (int i = 0; i < n; ++i) g.set_rotation(i, {(i + n - 1) % n, (i + 1) % n});
  return g;
}

PlaneGraph make_grid(int rows, int cols) {
  if (rows < 1 || cols < 1) throw ValidationError("bad grid shape");
  PlaneGraph g(rows * cols);
  auto id = [cols](int r, int c) { return r * cols + c; };
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) g.add_edge(id(r, c), id(r, c + 1));
      if (r + 1 < rows) g.add_edge(id(r, c), id(r + 1, c));
    }
  }
  // Counterclockwise order with the row axis pointing up: east, north,
  // west, south.
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      std::vector<VertexId> rot;
      if (c + 1 < cols) rot.push_back(id(r, c + 1));
      if (r + 1 < rows) rot.push_back(id(r + 1, c));
      if (c > 0) rot.push_back(id(r, c - 1));
      if (r > 0) rot.push_back(id(r - 1, c));
      g.set_rotation(id(r, c), rot);
    }
  }
  return g;
}

PlaneGraph make_star(int leaves) {
  PlaneGraph g(leaves + 1);
  for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
  return g;
}

PlaneGraph make_wheel(int n) {
  PlaneGraph g = make_cycle(n);
  VertexId hub = g.add_vertex();
  for (int i = 0; i < n; ++i) g.add_edge(i, hub);
  // Hub sees the rim counterclockwise; each rim vertex gets the hub between
  // its predecessor and successor so the spokes stay inside the disk.
  std::vector<VertexId> hub_rot;
  for (int i = 0; i < n; ++i) hub_rot.push_back(i);
  g.set_rotation(hub, hub_rot);
  for (int i = 0; i < n; ++i) {
    g.set_rotation(i, {(i + 1) % n, hub, (i + n - 1) % n});
  }
  return g;
}

}  // namespace pdc
