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

#ifndef PDC_POLY_HPP
#define PDC_POLY_HPP

#include <map>
#include <string>
#include <vector>

#include "pdc/rational.hpp"

namespace pdc {

// Dense univariate polynomial over exact rationals. The zero polynomial has
// an empty coefficient vector; otherwise the leading coefficient is nonzero.
class Poly1 {
 public:
  Poly1() = default;
  explicit Poly1(std::vector<Rational> coeffs);
  static Poly1 constant(const Rational& c);
  static Poly1 monomial(int degree, const Rational& c);

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const Rational& coeff(int i) const;
  const std::vector<Rational>& coeffs() const { return c_; }

  Rational eval(const Rational& x) const;

  friend Poly1 operator+(const Poly1& a, const Poly1& b);
  friend Poly1 operator-(const Poly1& a, const Poly1& b);
  friend Poly1 operator*(const Poly1& a, const Poly1& b);
  Poly1 scaled(const Rational& s) const;
  friend bool operator==(const Poly1& a, const Poly1& b) = default;

 private:
  void trim();
  std::vector<Rational> c_;
};

// The first k+1 coefficients of a power series / polynomial: exactly k+1
// entries are stored, trailing zeros included.
struct TruncatedPoly {
  int bound = 0;
  std::vector<Rational> c;

  TruncatedPoly() : c(1, Rational(0)) {}
  TruncatedPoly(int k, std::vector<Rational> coeffs);
  static TruncatedPoly from_poly(const Poly1& p, int k);
  static TruncatedPoly zero(int k);

  Poly1 to_poly() const { return Poly1(c); }
  friend bool operator==(const TruncatedPoly& a, const TruncatedPoly& b) = default;
};

TruncatedPoly trunc_mul(const TruncatedPoly& a, const TruncatedPoly& b, int t);

// Recovers b_0..b_t from a and c = [a*b] by solving the triangular system
// c_i = sum_j a_j * b_{i-j}. Requires a_0 != 0 ("non-invertible divisor"
// otherwise) and at least t+1 coefficients on both inputs.
TruncatedPoly trunc_div(const TruncatedPoly& a, const TruncatedPoly& c, int t);

// Coefficients of (1+X^2)^m up to degree k: C(m,i) at X^{2i}, zero at odd
// positions.
TruncatedPoly binomial_power_trunc(unsigned long m, int k);

// Sparse multivariate polynomial over named indeterminates. Exponent
// vectors have one entry per variable; zero coefficients are never stored.
class MultiPoly {
 public:
  MultiPoly() = default;
  explicit MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  const std::vector<std::string>& vars() const { return vars_; }
  int var_count() const { return static_cast<int>(vars_.size()); }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const std::vector<int>& exponents, const Rational& coeff);
  Rational coeff(const std::vector<int>& exponents) const;
  const std::map<std::vector<int>, Rational>& terms() const { return terms_; }

  Rational eval(const std::vector<Rational>& point) const;
  int degree_in(int var) const;
  int total_degree() const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.terms_ == b.terms_;
  }

 private:
  std::vector<std::string> vars_;
  std::map<std::vector<int>, Rational> terms_;
};

// Exact interpolation through points with pairwise distinct x-values,
// via a Vandermonde solve (shared with the grid code below); degree is
// less than the number of points.
Poly1 interpolate_univariate(const std::vector<std::pair<Rational, Rational>>& points);

// Factors a Vandermonde system for a fixed node set once, then converts
// value vectors to coefficient vectors with O(d^2) arithmetic per call.
class VandermondeSolver {
 public:
  explicit VandermondeSolver(std::vector<Rational> nodes);

  int size() const { return static_cast<int>(nodes_.size()); }
  const std::vector<Rational>& nodes() const { return nodes_; }

  std::vector<Rational> coefficients(const std::vector<Rational>& values) const;
  // Single coefficient: one inner product against a precomputed row.
  Rational coefficient(int k, const std::vector<Rational>& values) const;

 private:
  std::vector<Rational> nodes_;
  // Inverse of the Vandermonde matrix, row-major.
  std::vector<Rational> inv_;
};

// Evaluations of a polynomial on the full grid nodes[0] x ... x nodes[d-1],
// stored row-major (last dimension fastest).
struct GridEvaluations {
  std::vector<std::vector<Rational>> nodes;
  std::vector<Rational> values;

  size_t grid_size() const;
  size_t flat_index(const std::vector<int>& idx) const;
};

// Recovers the unique polynomial with degree_in(x_i) < |nodes[i]| matching
// all grid evaluations, dimension by dimension.
MultiPoly grid_interpolate(const GridEvaluations& evals, std::vector<std::string> var_names);

// For a polynomial p(X, lambda_1..lambda_t) whose X^s-coefficients have
// total lambda-degree at most s, recovers the coefficient of X^k from
// evaluations on nodes_x times the lambda grid. Per lambda point the
// X-slice is a univariate interpolation; the slices are then grid
// interpolated. evals.nodes[0] are the X nodes.
MultiPoly sliced_interpolate(const GridEvaluations& evals, int k,
                             std::vector<std::string> lambda_names);

// Substitutes ell <- -(1+X^2) into a polynomial in (X, ell) and truncates
// to degree k. Every monomial ell^i X^j must satisfy i <= j <= k ("degree
// dominance violated" otherwise), which makes the truncated result equal
// to the truncation of the full substitution.
TruncatedPoly substitute_ell(const MultiPoly& p, int k);

}  // namespace pdc

#endif  // PDC_POLY_HPP
