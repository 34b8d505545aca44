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

#include <functional>
#include <random>

#include "pdc/builders.hpp"
#include "pdc/errors.hpp"
#include "pdc/fkt.hpp"
#include "pdc/matchsum.hpp"
#include "pdc/oracle.hpp"
#include "support/random_graphs.hpp"

using namespace pdc;

namespace {

// Parity-class partial sums by direct enumeration: class bit i is the
// parity of the unmatched count inside block i.
std::vector<Rational> brute_by_theta(const PlaneGraph& g,
                                     const std::vector<std::vector<VertexId>>& blocks) {
  const int s = static_cast<int>(blocks.size());
  std::vector<int> block_of(g.vertex_count(), -1);
  for (int i = 0; i < s; ++i) {
    for (VertexId v : blocks[i]) block_of[v] = i;
  }
  std::vector<Rational> out(static_cast<size_t>(1) << s, Rational(0));
  auto edges = g.edges();
  std::vector<bool> matched(g.vertex_count(), false);
  std::function<void(size_t, Rational)> rec = [&](size_t i, Rational prod) {
    if (i == edges.size()) {
      std::vector<int> defects(s, 0);
      Rational term = prod;
      for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (!matched[v]) {
          term *= g.vertex_weight(v);
          if (block_of[v] >= 0) ++defects[block_of[v]];
        }
      }
      size_t theta = 0;
      for (int b = 0; b < s; ++b) {
        if (defects[b] % 2 == 1) theta |= (1u << b);
      }
      out[theta] += term;
      return;
    }
    rec(i + 1, prod);
    auto [e, w] = edges[i];
    if (!matched[e.u] && !matched[e.v]) {
      matched[e.u] = matched[e.v] = true;
      rec(i + 1, prod * w);
      matched[e.u] = matched[e.v] = false;
    }
  };
  rec(0, Rational(1));
  return out;
}

Integer brute_defects_on_faces(const PlaneGraph& g, const std::vector<std::string>& ids, int k) {
  auto faces = resolve_face_ids(g, ids);
  auto allowed = face_vertex_set(g, faces);
  std::vector<bool> ok(g.vertex_count(), false);
  for (VertexId v : allowed) ok[v] = true;
  std::vector<VertexId> banned;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (!ok[v]) banned.push_back(v);
  }
  return brute_defects(g, k, banned);
}

}  // namespace

TEST_CASE("all-zero weights degenerate to the perfect matching sum") {
  std::mt19937 rng(5000);
  PlaneGraph g = make_grid(2, 3);
  auto ids = testing::random_faces(rng, g, 2);
  CHECK(matchsum_faces(g, ids) == perfmatch_planar(g));
}

TEST_CASE("unit weights on C4's outer face count all matchings") {
  PlaneGraph g = make_cycle(4);
  for (VertexId v = 0; v < 4; ++v) g.set_vertex_weight(v, Rational(1));
  CHECK(matchsum_faces(g, {outer_face_id(g.faces())}) == 7);
}

TEST_CASE("a single weighted edge gives 1 + ab") {
  PlaneGraph g = make_path(2);
  g.set_vertex_weight(0, Rational(3));
  g.set_vertex_weight(1, Rational(5, 2));
  CHECK(matchsum_faces(g, {g.faces()[0].id}) == Rational(1) + Rational(3) * Rational(5, 2));
}

TEST_CASE("weights off the distinguished faces are rejected") {
  PlaneGraph g = make_wheel(5);
  g.set_vertex_weight(5, Rational(1));  // hub, not on the rim face
  auto faces = g.faces();
  std::string rim;
  for (const auto& f : faces) {
    if (!f.contains(5)) rim = f.id;
  }
  CHECK_THROWS_WITH_AS(matchsum_faces(g, {rim}),
                       "nonzero weight off the distinguished faces (vertex 5)", ValidationError);
}

TEST_CASE("matchsum agrees with enumeration on random face-weighted graphs") {
  std::mt19937 rng(5001);
  for (int trial = 0; trial < 60; ++trial) {
    PlaneGraph g = testing::random_plane_graph(rng, testing::pick(rng, 3, 12));
    auto ids = testing::random_faces(rng, g, testing::pick(rng, 1, 3));
    if (ids.empty()) continue;
    PlaneGraph weighted = testing::random_face_weighted(rng, g, ids);
    CHECK(matchsum_faces(weighted, ids) == brute_matchsum(weighted));
  }
}

TEST_CASE("parity-class partial sums match enumeration") {
  std::mt19937 rng(5002);
  for (int trial = 0; trial < 25; ++trial) {
    PlaneGraph g = testing::random_plane_graph(rng, testing::pick(rng, 3, 10));
    auto ids = testing::random_faces(rng, g, testing::pick(rng, 1, 3));
    if (ids.empty()) continue;
    PlaneGraph weighted = testing::random_face_weighted(rng, g, ids);
    MatchSumEvaluator ev(weighted, resolve_face_ids(weighted, ids), {});
    auto got = ev.eval_by_theta({});
    auto want = brute_by_theta(weighted, ev.blocks());
    REQUIRE(got.size() == want.size());
    for (size_t theta = 0; theta < got.size(); ++theta) CHECK(got[theta] == want[theta]);
    Rational sum(0);
    for (const auto& v : got) sum += v;
    CHECK(sum == brute_matchsum(weighted));
  }
}

TEST_CASE("evaluator reweighing matches one-shot computation") {
  std::mt19937 rng(5003);
  for (int trial = 0; trial < 15; ++trial) {
    PlaneGraph g = testing::random_plane_graph(rng, testing::pick(rng, 3, 10));
    auto ids = testing::random_faces(rng, g, testing::pick(rng, 1, 2));
    if (ids.empty()) continue;
    auto faces = resolve_face_ids(g, ids);
    auto support = face_vertex_set(g, faces);
    MatchSumEvaluator ev(g, faces, support);
    for (int round = 0; round < 3; ++round) {
      std::vector<Rational> w;
      PlaneGraph direct = g;
      for (VertexId v : support) {
        Rational x = testing::chance(rng, 0.25) ? Rational(0) : testing::random_rational(rng, -3, 3);
        w.push_back(x);
        direct.set_vertex_weight(v, x);
      }
      CHECK(ev.eval(w) == matchsum_faces(direct, ids));
    }
  }
}

TEST_CASE("defect totals on fixed graphs") {
  PlaneGraph tri = make_cycle(3);
  auto tri_faces = tri.faces();
  CHECK(count_defects_on_faces_total(tri, {tri_faces[0].id, tri_faces[1].id}) == 4);
  PlaneGraph c4 = make_cycle(4);
  CHECK(count_defects_on_faces_total(c4, {outer_face_id(c4.faces())}) == 7);
  CHECK(count_defects_on_faces_total(make_cycle(6), {}) == 2);
}

TEST_CASE("defect spectrum of C4") {
  PlaneGraph c4 = make_cycle(4);
  auto spectrum = defect_spectrum(c4, {outer_face_id(c4.faces())});
  CHECK(spectrum == std::vector<Integer>{2, 0, 4, 0, 1});
}

TEST_CASE("spectrum starts at the perfect matching count and respects parity") {
  std::mt19937 rng(5004);
  for (int trial = 0; trial < 20; ++trial) {
    PlaneGraph g = testing::random_plane_graph(rng, testing::pick(rng, 3, 10));
    auto ids = testing::random_faces(rng, g, testing::pick(rng, 1, 2));
    if (ids.empty()) continue;
    auto spectrum = defect_spectrum(g, ids);
    Rational pm = perfmatch_planar(g);
    CHECK(Rational(spectrum[0]) == pm);
    for (int k = 0; k <= g.vertex_count(); ++k) {
      if ((g.vertex_count() - k) % 2 != 0) CHECK(spectrum[k] == 0);
    }
  }
}

TEST_CASE("spectrum entries match per-count enumeration and sum to the total") {
  std::mt19937 rng(5005);
  for (int trial = 0; trial < 20; ++trial) {
    PlaneGraph g = testing::random_plane_graph(rng, testing::pick(rng, 3, 10));
    auto ids = testing::random_faces(rng, g, testing::pick(rng, 1, 3));
    if (ids.empty()) continue;
    auto spectrum = defect_spectrum(g, ids);
    Integer sum = 0;
    for (int k = 0; k <= g.vertex_count(); ++k) {
      CHECK(spectrum[k] == brute_defects_on_faces(g, ids, k));
      sum += spectrum[k];
    }
    CHECK(sum == count_defects_on_faces_total(g, ids));
  }
}

TEST_CASE("edgeless graphs carry their weights on the plane face") {
  PlaneGraph g(4);
  for (VertexId v = 0; v < 4; ++v) g.set_vertex_weight(v, Rational(v + 1));
  CHECK(matchsum_faces(g, {"plane"}) == 24);
  CHECK_THROWS_AS(matchsum_faces(make_cycle(3), {"plane"}), ValidationError);
}
