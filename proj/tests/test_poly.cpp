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

#include "pdc/errors.hpp"
#include "pdc/poly.hpp"
#include "support/random_graphs.hpp"

using namespace pdc;

namespace {

Poly1 random_poly(std::mt19937& rng, int max_degree) {
  int d = testing::pick(rng, 0, max_degree);
  std::vector<Rational> c;
  for (int i = 0; i <= d; ++i) c.push_back(testing::random_rational(rng, -5, 5));
  return Poly1(std::move(c));
}

}  // namespace

TEST_CASE("truncated division") {
  SUBCASE("(1+X)^2 divided by (1+X)") {
    TruncatedPoly a(2, {Rational(1), Rational(1), Rational(0)});
    TruncatedPoly c(2, {Rational(1), Rational(2), Rational(1)});
    CHECK(trunc_div(a, c, 2).c == std::vector<Rational>{1, 1, 0});
  }
  SUBCASE("inverse of 1+X^2+X^4 modulo X^5") {
    TruncatedPoly a(4, {Rational(1), Rational(0), Rational(1), Rational(0), Rational(1)});
    TruncatedPoly c(4, {Rational(1), Rational(0), Rational(0), Rational(0), Rational(0)});
    TruncatedPoly b = trunc_div(a, c, 4);
    CHECK(b.c == std::vector<Rational>{1, 0, -1, 0, 0});
    CHECK(trunc_mul(a, b, 4).c == c.c);
  }
  SUBCASE("zero constant coefficient is rejected") {
    TruncatedPoly a(1, {Rational(0), Rational(1)});
    TruncatedPoly c(1, {Rational(0), Rational(0)});
    CHECK_THROWS_WITH_AS(trunc_div(a, c, 1), "non-invertible divisor", ValidationError);
  }
  SUBCASE("round trip on random inputs") {
    std::mt19937 rng(2001);
    for (int trial = 0; trial < 500; ++trial) {
      Poly1 a = random_poly(rng, 12);
      Poly1 b = random_poly(rng, 12);
      int t = testing::pick(rng, 0, 12);
      std::vector<Rational> a0 = a.coeffs();
      a0.resize(std::max<size_t>(a0.size(), 1));
      if (a0[0] == 0) a0[0] = Rational(testing::pick(rng, 1, 5));
      TruncatedPoly at = TruncatedPoly::from_poly(Poly1(a0), t);
      TruncatedPoly bt = TruncatedPoly::from_poly(b, t);
      TruncatedPoly ct = trunc_mul(at, bt, t);
      CHECK(trunc_div(at, ct, t).c == bt.c);
    }
  }
}

TEST_CASE("univariate interpolation") {
  SUBCASE("three points give 1 + X^2") {
    Poly1 p = interpolate_univariate({{Rational(0), Rational(1)},
                                      {Rational(1), Rational(2)},
                                      {Rational(2), Rational(5)}});
    CHECK(p == Poly1({Rational(1), Rational(0), Rational(1)}));
  }
  SUBCASE("single point gives the constant") {
    CHECK(interpolate_univariate({{Rational(0), Rational(7, 3)}}) == Poly1::constant(Rational(7, 3)));
  }
  SUBCASE("all-zero values give the zero polynomial") {
    Poly1 p = interpolate_univariate({{Rational(1), Rational(0)},
                                      {Rational(2), Rational(0)},
                                      {Rational(3), Rational(0)}});
    CHECK(p.is_zero());
  }
  SUBCASE("duplicate nodes are rejected") {
    CHECK_THROWS_AS(interpolate_univariate({{Rational(1), Rational(0)}, {Rational(1), Rational(1)}}),
                    ValidationError);
  }
  SUBCASE("interpolation inverts evaluation") {
    std::mt19937 rng(2002);
    for (int trial = 0; trial < 50; ++trial) {
      Poly1 p = random_poly(rng, 10);
      std::vector<std::pair<Rational, Rational>> pts;
      for (int x = 0; x <= std::max(p.degree(), 0); ++x) {
        pts.push_back({Rational(x), p.eval(Rational(x))});
      }
      CHECK(interpolate_univariate(pts) == p);
    }
  }
}

namespace {

MultiPoly random_multipoly(std::mt19937& rng, const std::vector<int>& bounds) {
  MultiPoly p([&] {
    std::vector<std::string> names;
    for (size_t i = 0; i < bounds.size(); ++i) names.push_back("x" + std::to_string(i));
    return names;
  }());
  int terms = testing::pick(rng, 1, 6);
  for (int t = 0; t < terms; ++t) {
    std::vector<int> exps;
    for (int b : bounds) exps.push_back(testing::pick(rng, 0, b));
    p.add_term(exps, testing::random_rational(rng, -4, 4));
  }
  return p;
}

GridEvaluations evaluate_on_grid(const MultiPoly& p, const std::vector<int>& bounds) {
  GridEvaluations evals;
  for (int b : bounds) {
    std::vector<Rational> axis;
    for (int x = 0; x <= b; ++x) axis.emplace_back(x);
    evals.nodes.push_back(std::move(axis));
  }
  evals.values.assign(evals.grid_size(), Rational(0));
  std::vector<int> idx(bounds.size(), 0);
  for (size_t flat = 0; flat < evals.values.size(); ++flat) {
    std::vector<Rational> point;
    for (size_t d = 0; d < bounds.size(); ++d) point.push_back(evals.nodes[d][idx[d]]);
    evals.values[flat] = p.eval(point);
    for (size_t d = bounds.size(); d-- > 0;) {
      if (++idx[d] <= bounds[d]) break;
      idx[d] = 0;
    }
  }
  return evals;
}

}  // namespace

TEST_CASE("grid interpolation") {
  SUBCASE("recovers x*y from the 2x2 grid") {
    MultiPoly p({"x", "y"});
    p.add_term({1, 1}, Rational(1));
    auto evals = evaluate_on_grid(p, {1, 1});
    CHECK(grid_interpolate(evals, {"x", "y"}) == p);
  }
  SUBCASE("constant grid gives a constant") {
    MultiPoly p({"x", "y"});
    p.add_term({0, 0}, Rational(9, 4));
    auto evals = evaluate_on_grid(p, {2, 1});
    CHECK(grid_interpolate(evals, {"x", "y"}) == p);
  }
  SUBCASE("round trip on random polynomials") {
    std::mt19937 rng(2003);
    for (int trial = 0; trial < 500; ++trial) {
      std::vector<int> bounds;
      int dims = testing::pick(rng, 1, 3);
      for (int d = 0; d < dims; ++d) bounds.push_back(testing::pick(rng, 0, 2));
      MultiPoly p = random_multipoly(rng, bounds);
      auto evals = evaluate_on_grid(p, bounds);
      CHECK(grid_interpolate(evals, p.vars()) == p);
    }
  }
  SUBCASE("shape mismatch is rejected") {
    GridEvaluations evals;
    evals.nodes = {{Rational(0), Rational(1)}};
    evals.values = {Rational(1)};
    CHECK_THROWS_AS(grid_interpolate(evals, {"x"}), ValidationError);
  }
}

TEST_CASE("sliced interpolation") {
  SUBCASE("extracts the coefficient of X^2") {
    // p = X^2 l1 + X l2 + 1
    MultiPoly p({"X", "l1", "l2"});
    p.add_term({2, 1, 0}, Rational(1));
    p.add_term({1, 0, 1}, Rational(1));
    p.add_term({0, 0, 0}, Rational(1));
    auto evals = evaluate_on_grid(p, {2, 2, 2});
    MultiPoly a2 = sliced_interpolate(evals, 2, {"l1", "l2"});
    MultiPoly want({"l1", "l2"});
    want.add_term({1, 0}, Rational(1));
    CHECK(a2 == want);
  }
  SUBCASE("slice above the X degree is zero") {
    MultiPoly p({"X", "l"});
    p.add_term({0, 1}, Rational(3));
    auto evals = evaluate_on_grid(p, {1, 1});
    CHECK(sliced_interpolate(evals, 1, {"l"}).is_zero());
  }
  SUBCASE("pure X power has constant slice 1") {
    MultiPoly p({"X", "l"});
    p.add_term({2, 0}, Rational(1));
    auto evals = evaluate_on_grid(p, {2, 2});
    MultiPoly want({"l"});
    want.add_term({0}, Rational(1));
    CHECK(sliced_interpolate(evals, 2, {"l"}) == want);
  }
  SUBCASE("round trip against the true slice") {
    std::mt19937 rng(2004);
    for (int trial = 0; trial < 500; ++trial) {
      int lambda_count = testing::pick(rng, 1, 2);
      int k = testing::pick(rng, 0, 3);
      int n = k + testing::pick(rng, 0, 3);
      // Terms where each X^s coefficient has total lambda degree <= s.
      MultiPoly p([&] {
        std::vector<std::string> names{"X"};
        for (int i = 0; i < lambda_count; ++i) names.push_back("l" + std::to_string(i));
        return names;
      }());
      for (int t = testing::pick(rng, 1, 6); t > 0; --t) {
        int xd = testing::pick(rng, 0, n);
        std::vector<int> exps{xd};
        int budget = std::min(xd, k);
        for (int i = 0; i < lambda_count; ++i) {
          int e = testing::pick(rng, 0, budget);
          budget -= e;
          exps.push_back(e);
        }
        p.add_term(exps, testing::random_rational(rng, -4, 4));
      }
      std::vector<int> bounds{n};
      for (int i = 0; i < lambda_count; ++i) bounds.push_back(k);
      auto evals = evaluate_on_grid(p, bounds);
      MultiPoly got = sliced_interpolate(evals, k, std::vector<std::string>(p.vars().begin() + 1, p.vars().end()));
      MultiPoly want(std::vector<std::string>(p.vars().begin() + 1, p.vars().end()));
      for (const auto& [exps, coeff] : p.terms()) {
        if (exps[0] == k) want.add_term(std::vector<int>(exps.begin() + 1, exps.end()), coeff);
      }
      CHECK(got == want);
    }
  }
}

TEST_CASE("even binomial powers") {
  CHECK(binomial_power_trunc(1, 3).c == std::vector<Rational>{1, 0, 1, 0});
  CHECK(binomial_power_trunc(0, 2).c == std::vector<Rational>{1, 0, 0});
  CHECK(binomial_power_trunc(3, 6).c == std::vector<Rational>{1, 0, 3, 0, 3, 0, 1});
  SUBCASE("matches repeated truncated multiplication") {
    std::mt19937 rng(2005);
    for (int trial = 0; trial < 30; ++trial) {
      int m = testing::pick(rng, 0, 9);
      int k = testing::pick(rng, 0, 14);
      TruncatedPoly ref(k, {Rational(1)});
      TruncatedPoly base(k, {Rational(1), Rational(0), Rational(1)});
      for (int i = 0; i < m; ++i) ref = trunc_mul(ref, base, k);
      CHECK(binomial_power_trunc(static_cast<unsigned long>(m), k).c == ref.c);
    }
  }
}

TEST_CASE("substitution of the rake indeterminate") {
  SUBCASE("l X becomes -X - X^3") {
    MultiPoly p({"X", "l"});
    p.add_term({1, 1}, Rational(1));
    CHECK(substitute_ell(p, 3).c == std::vector<Rational>{0, -1, 0, -1});
  }
  SUBCASE("X(l + 1 + X^2) vanishes") {
    MultiPoly p({"X", "l"});
    p.add_term({1, 1}, Rational(1));
    p.add_term({1, 0}, Rational(1));
    p.add_term({3, 0}, Rational(1));
    CHECK(substitute_ell(p, 3).c == std::vector<Rational>{0, 0, 0, 0});
  }
  SUBCASE("dominated degrees are required") {
    MultiPoly p({"X", "l"});
    p.add_term({1, 2}, Rational(1));
    CHECK_THROWS_WITH_AS(substitute_ell(p, 3), "degree dominance violated", ValidationError);
  }
}
