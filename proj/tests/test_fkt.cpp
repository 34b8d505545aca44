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

#include <doctest.h>

#include <random>

#include "pdc/builders.hpp"
#include "pdc/errors.hpp"
#include "pdc/fkt.hpp"
#include "pdc/oracle.hpp"
#include "support/random_graphs.hpp"

using namespace pdc;

namespace {

bool orientation_is_odd(const PlaneGraph& g, const Orientation& o) {
  for (const auto& f : g.faces()) {
    if (f.id == o.outer_face) continue;
    if (face_agreement_count(f, o) % 2 == 0) return false;
  }
  return true;
}

// Exact determinant by rational Gaussian elimination; the independent
// cross-check for the Pfaffian.
Rational determinant(std::vector<std::vector<Rational>> m) {
  const size_t n = m.size();
  Rational det(1);
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return Rational(0);
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      Rational f = m[r][col] / m[col][col];
      for (size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

}  // namespace

TEST_CASE("orientation of a single edge has nothing to satisfy") {
  PlaneGraph g = make_path(2);
  Orientation o = kasteleyn_orient(g);
  CHECK(o.dir.size() == 1);
  CHECK(orientation_is_odd(g, o));
}

TEST_CASE("exactly half of the C4 orientations are odd, ours included") {
  PlaneGraph g = make_cycle(4);
  auto faces = g.faces();
  Orientation probe;
  probe.outer_face = outer_face_id(faces);
  std::vector<EdgeKey> keys;
  for (const auto& [e, w] : g.edges()) keys.push_back(e);
  int good = 0;
  for (unsigned mask = 0; mask < 16; ++mask) {
    for (size_t i = 0; i < keys.size(); ++i) {
      probe.dir[keys[i]] = (mask >> i) & 1 ? 1 : -1;
    }
    if (orientation_is_odd(g, probe)) ++good;
  }
  CHECK(good == 8);
  CHECK(orientation_is_odd(g, kasteleyn_orient(g)));
}

TEST_CASE("both quadrilateral faces of the 2x3 grid come out odd") {
  PlaneGraph g = make_grid(2, 3);
  CHECK(orientation_is_odd(g, kasteleyn_orient(g)));
}

TEST_CASE("orientation requires a connected graph") {
  PlaneGraph g(4);
  g.add_edge(0, 1);
  g.add_edge(2, 3);
  CHECK_THROWS_AS(kasteleyn_orient(g), ValidationError);
}

TEST_CASE("pfaffian basics") {
  SUBCASE("2x2") {
    SkewMatrix k(2);
    k.set(0, 1, Rational(7, 3));
    CHECK(pfaffian(k) == Rational(7, 3));
  }
  SUBCASE("block diagonal multiplies") {
    SkewMatrix k(4);
    k.set(0, 1, Rational(3));
    k.set(2, 3, Rational(-5, 2));
    CHECK(pfaffian(k) == Rational(-15, 2));
  }
  SUBCASE("odd dimension vanishes") {
    SkewMatrix k(3);
    k.set(0, 1, Rational(1));
    CHECK(pfaffian(k) == 0);
  }
  SUBCASE("squares to the determinant") {
    std::mt19937 rng(3001);
    for (int trial = 0; trial < 100; ++trial) {
      int n = 2 * testing::pick(rng, 1, 4);
      SkewMatrix k(n);
      std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, Rational(0)));
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
          Rational w = testing::random_rational(rng, -3, 3);
          k.set(i, j, w);
          m[i][j] = w;
          m[j][i] = -w;
        }
      }
      Rational pf = pfaffian(k);
      CHECK(pf * pf == determinant(m));
    }
  }
}

TEST_CASE("perfect matching sums on fixed graphs") {
  PlaneGraph edge = make_path(2);
  edge.set_edge_weight(0, 1, Rational(5, 7));
  CHECK(perfmatch_planar(edge) == Rational(5, 7));
  edge.set_edge_weight(0, 1, Rational(-1));
  CHECK(perfmatch_planar(edge) == Rational(-1));
  CHECK(perfmatch_planar(make_cycle(4)) == 2);
  CHECK(perfmatch_planar(make_grid(2, 3)) == 3);
  CHECK(perfmatch_planar(make_cycle(5)) == 0);
  CHECK(perfmatch_planar(PlaneGraph(0)) == 1);
}

TEST_CASE("odd components force zero") {
  PlaneGraph g = make_cycle(4);
  g.add_vertex();
  CHECK(perfmatch_planar(g) == 0);
}

TEST_CASE("orientations stay odd on random connected graphs") {
  std::mt19937 rng(3002);
  for (int trial = 0; trial < 60; ++trial) {
    PlaneGraph g = testing::random_connected_plane_graph(rng, testing::pick(rng, 2, 30));
    CHECK(orientation_is_odd(g, kasteleyn_orient(g)));
  }
}

TEST_CASE("matches brute force on random weighted graphs") {
  std::mt19937 rng(3003);
  for (int trial = 0; trial < 60; ++trial) {
    PlaneGraph g = testing::random_plane_graph(rng, testing::pick(rng, 2, 12));
    for (const auto& [e, w] : g.edges()) {
      g.set_edge_weight(e.u, e.v,
                        testing::chance(rng, 0.15) ? Rational(0) : testing::random_rational(rng, -3, 3));
    }
    CHECK(perfmatch_planar(g) == brute_perfmatch(g));
  }
}

TEST_CASE("invariant under relabeling and re-running") {
  std::mt19937 rng(3004);
  for (int trial = 0; trial < 20; ++trial) {
    PlaneGraph g = testing::random_plane_graph(rng, testing::pick(rng, 3, 12));
    testing::randomize_edge_weights(rng, g, -3, 3);
    Rational first = perfmatch_planar(g);
    CHECK(perfmatch_planar(g) == first);
    std::vector<VertexId> perm(g.vertex_count());
    for (size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<VertexId>(i);
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(perfmatch_planar(g.relabel(perm)) == first);
  }
}

TEST_CASE("pfaffian cache agrees with direct evaluation") {
  std::mt19937 rng(3005);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 * testing::pick(rng, 1, 5);
    SkewMatrix base(n);
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (testing::chance(rng, 0.5)) base.set(i, j, testing::random_rational(rng, -3, 3));
      }
    }
    int vars = testing::pick(rng, 0, 3);
    std::vector<std::pair<int, int>> positions;
    for (int t = 0; t < vars; ++t) {
      int i = testing::pick(rng, 0, n - 1);
      int j = testing::pick(rng, 0, n - 1);
      if (i == j) continue;
      base.set(i, j, Rational(0));
      bool dup = false;
      for (auto& [a, b] : positions) {
        if ((a == i && b == j) || (a == j && b == i)) dup = true;
      }
      if (!dup) positions.emplace_back(i, j);
    }
    PfaffianCache cache(base, positions);
    for (int eval = 0; eval < 3; ++eval) {
      std::vector<Rational> values;
      for (size_t t = 0; t < positions.size(); ++t) {
        values.push_back(testing::random_rational(rng, -3, 3));
      }
      SkewMatrix full = base;
      for (size_t t = 0; t < positions.size(); ++t) {
        full.add(positions[t].first, positions[t].second, values[t]);
      }
      CHECK(cache.eval(values) == pfaffian(full));
    }
  }
}
