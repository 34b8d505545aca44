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

#include "pdc/apex.hpp"
#include "pdc/builders.hpp"
#include "pdc/errors.hpp"
#include "pdc/fkt.hpp"
#include "pdc/gadget.hpp"
#include "pdc/instance.hpp"
#include "pdc/matchsum.hpp"
#include "pdc/oracle.hpp"
#include "support/random_graphs.hpp"

using namespace pdc;

TEST_CASE("extension counts of defect types") {
  CHECK(small_perfmatch({0b001, 0b010, 0b100}, 3) == 1);
  CHECK(small_perfmatch({0b000, 0b010}, 2) == 0);
  CHECK(small_perfmatch({0b11, 0b11}, 2) == 2);
  CHECK(small_perfmatch({}, 0) == 1);
  CHECK_THROWS_AS(small_perfmatch({0b1}, 2), ValidationError);
}

TEST_CASE("no apices degenerates to the planar count") {
  ApexInstance inst;
  inst.planar = make_grid(2, 3);
  CHECK(apex_perfmatch(inst) == perfmatch_planar(inst.planar));
}

TEST_CASE("triangle with one apex") {
  ApexInstance inst;
  inst.planar = make_cycle(3);
  inst.apex_count = 1;
  inst.apex_planar_edges = {{0, 0, Rational(1)}};
  inst.distinguished_faces = {outer_face_id(inst.planar.faces())};
  CHECK(apex_perfmatch(inst) == 1);
}

TEST_CASE("three apices over an independent side on one face") {
  ApexInstance inst;
  inst.planar = PlaneGraph(3);
  inst.apex_count = 3;
  for (int a = 0; a < 3; ++a) {
    for (VertexId v = 0; v < 3; ++v) inst.apex_planar_edges.push_back({a, v, Rational(1)});
  }
  inst.distinguished_faces = {"plane"};
  ApexSolveStats stats;
  CHECK(apex_perfmatch(inst, &stats) == 6);
  CHECK(stats.k == 3);
  CHECK(stats.classes == 1);
}

TEST_CASE("repeated class multiplicities need no extra correction") {
  // Four planar vertices in one class seeing both apices.
  ApexInstance inst;
  inst.planar = make_cycle(4);
  inst.apex_count = 2;
  for (VertexId v = 0; v < 4; ++v) {
    inst.apex_planar_edges.push_back({0, v, Rational(1)});
    inst.apex_planar_edges.push_back({1, v, Rational(1)});
  }
  inst.distinguished_faces = {outer_face_id(inst.planar.faces())};
  CHECK(apex_perfmatch(inst) == brute_perfmatch_apex(inst));
}

TEST_CASE("adjacent apices split into matched and unmatched terms") {
  ApexInstance inst;
  inst.planar = make_grid(2, 3);
  inst.apex_count = 2;
  inst.apex_planar_edges = {{0, 0, Rational(1)}, {0, 5, Rational(2)},
                            {1, 2, Rational(1)}, {1, 3, Rational(1)}};
  inst.apex_apex_edges = {{0, 1, Rational(3)}};
  inst.distinguished_faces = {outer_face_id(inst.planar.faces())};
  CHECK(apex_perfmatch(inst) == brute_perfmatch_apex(inst));
}

TEST_CASE("an apex triangle over a small planar part") {
  ApexInstance inst;
  inst.planar = make_path(3);
  inst.apex_count = 3;
  inst.apex_planar_edges = {{0, 0, Rational(1)}, {1, 2, Rational(1)}, {2, 1, Rational(1)}};
  inst.apex_apex_edges = {{0, 1, Rational(1)}, {1, 2, Rational(1)}, {0, 2, Rational(1)}};
  inst.distinguished_faces = {inst.planar.faces()[0].id};
  CHECK(apex_perfmatch(inst) == brute_perfmatch_apex(inst));
}

TEST_CASE("face cover violations are rejected") {
  ApexInstance inst;
  inst.planar = make_wheel(5);
  inst.apex_count = 1;
  inst.apex_planar_edges = {{0, 5, Rational(1)}};  // hub
  // Distinguish a face missing the hub.
  for (const auto& f : inst.planar.faces()) {
    if (!f.contains(5)) {
      inst.distinguished_faces = {f.id};
      break;
    }
  }
  CHECK_THROWS_AS(apex_perfmatch(inst), ValidationError);
}

TEST_CASE("duplicate apex edges are rejected") {
  ApexInstance inst;
  inst.planar = make_cycle(3);
  inst.apex_count = 1;
  inst.apex_planar_edges = {{0, 0, Rational(1)}, {0, 0, Rational(2)}};
  inst.distinguished_faces = {outer_face_id(inst.planar.faces())};
  CHECK_THROWS_AS(apex_perfmatch(inst), ValidationError);
}

TEST_CASE("interpolation weights match direct matching sums") {
  // The grid evaluations feeding the interpolation are plain
  // matching sums of the reweighed planar part; spot-check a few points
  // against enumeration.
  std::mt19937 rng(6001);
  for (int trial = 0; trial < 10; ++trial) {
    ApexInstance inst = testing::random_apex_instance(rng, 8, 2, 2);
    ApexInstance work = subdivide_apex_edges(inst);
    PlaneGraph h = work.planar;
    for (VertexId v = 0; v < h.vertex_count(); ++v) h.set_vertex_weight(v, Rational(0));
    auto faces = work.resolve_faces();
    auto flex = work.apex_neighborhood_union();
    if (flex.empty() || h.vertex_count() > 20) continue;
    MatchSumEvaluator ev(h, faces, flex);
    for (int point = 0; point < 3; ++point) {
      std::vector<Rational> w;
      PlaneGraph direct = h;
      for (VertexId v : flex) {
        Rational x(testing::pick(rng, 0, 4));
        w.push_back(x);
        direct.set_vertex_weight(v, x);
      }
      CHECK(ev.eval(w) == brute_matchsum(direct));
    }
  }
}

TEST_CASE("matches enumeration on random apex instances") {
  std::mt19937 rng(6002);
  int done = 0;
  for (int trial = 0; done < 30 && trial < 200; ++trial) {
    ApexInstance inst = testing::random_apex_instance(rng, 10, 3, 2);
    if (inst.total_vertices() > kBruteVertexCap) continue;
    ++done;
    CAPTURE(trial);
    CHECK(apex_perfmatch(inst) == brute_perfmatch_apex(inst));
  }
  CHECK(done == 30);
}
