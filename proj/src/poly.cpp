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

#include "pdc/poly.hpp"

#include <algorithm>

#include "pdc/errors.hpp"

namespace pdc {

Poly1::Poly1(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly1 Poly1::constant(const Rational& c) { return Poly1(std::vector<Rational>{c}); }

Poly1 Poly1::monomial(int degree, const Rational& c) {
  std::vector<Rational> v(degree + 1, Rational(0));
  v[degree] = c;
  return Poly1(std::move(v));
}

void Poly1::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rational& Poly1::coeff(int i) const {
  static const Rational kZero(0);
  if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
  return c_[i];
}

Rational Poly1::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly1 operator+(const Poly1& a, const Poly1& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
  return Poly1(std::move(c));
}

Poly1 operator-(const Poly1& a, const Poly1& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
  return Poly1(std::move(c));
}

Poly1 operator*(const Poly1& a, const Poly1& b) {
  if (a.is_zero() || b.is_zero()) return Poly1();
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly1(std::move(c));
}

Poly1 Poly1::scaled(const Rational& s) const {
  std::vector<Rational> c(c_);
  for (auto& x : c) x *= s;
  return Poly1(std::move(c));
}

TruncatedPoly::TruncatedPoly(int k, std::vector<Rational> coeffs) : bound(k), c(std::move(coeffs)) {
  if (k < 0) throw ValidationError("negative truncation bound");
  c.resize(k + 1, Rational(0));
}

TruncatedPoly TruncatedPoly::from_poly(const Poly1& p, int k) {
  std::vector<Rational> c(k + 1, Rational(0));
  for (int i = 0; i <= k; ++i) c[i] = p.coeff(i);
  return TruncatedPoly(k, std::move(c));
}

TruncatedPoly TruncatedPoly::zero(int k) { return TruncatedPoly(k, {}); }

TruncatedPoly trunc_mul(const TruncatedPoly& a, const TruncatedPoly& b, int t) {
  TruncatedPoly out = TruncatedPoly::zero(t);
  for (int i = 0; i <= t && i < static_cast<int>(a.c.size()); ++i) {
    if (a.c[i] == 0) continue;
    for (int j = 0; i + j <= t && j < static_cast<int>(b.c.size()); ++j) {
      out.c[i + j] += a.c[i] * b.c[j];
    }
  }
  return out;
}

TruncatedPoly trunc_div(const TruncatedPoly& a, const TruncatedPoly& c, int t) {
  if (static_cast<int>(a.c.size()) < t + 1 || static_cast<int>(c.c.size()) < t + 1) {
    throw ValidationError("trunc_div inputs carry fewer than t+1 coefficients");
  }
  if (a.c[0] == 0) throw ValidationError("non-invertible divisor");
  TruncatedPoly b = TruncatedPoly::zero(t);
  for (int i = 0; i <= t; ++i) {
    Rational acc = c.c[i];
    for (int j = 1; j <= i; ++j) acc -= a.c[j] * b.c[i - j];
    b.c[i] = acc / a.c[0];
  }
  return b;
}

TruncatedPoly binomial_power_trunc(unsigned long m, int k) {
  TruncatedPoly out = TruncatedPoly::zero(k);
  mpz_class binom;
  for (int i = 0; 2 * i <= k; ++i) {
    if (static_cast<unsigned long>(i) > m) break;
    mpz_bin_uiui(binom.get_mpz_t(), m, static_cast<unsigned long>(i));
    out.c[2 * i] = Rational(binom);
  }
  return out;
}

void MultiPoly::add_term(const std::vector<int>& exponents, const Rational& coeff) {
  if (static_cast<int>(exponents.size()) != var_count()) {
    throw InternalError("exponent vector arity mismatch");
  }
  for (int e : exponents) {
    if (e < 0) throw InternalError("negative exponent");
  }
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(exponents, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational MultiPoly::coeff(const std::vector<int>& exponents) const {
  auto it = terms_.find(exponents);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational MultiPoly::eval(const std::vector<Rational>& point) const {
  if (static_cast<int>(point.size()) != var_count()) throw InternalError("eval arity mismatch");
  Rational acc(0);
  for (const auto& [exps, coeff] : terms_) {
    Rational term = coeff;
    for (int v = 0; v < var_count(); ++v) {
      for (int e = 0; e < exps[v]; ++e) term *= point[v];
    }
    acc += term;
  }
  return acc;
}

int MultiPoly::degree_in(int var) const {
  int d = 0;
  for (const auto& [exps, coeff] : terms_) d = std::max(d, exps[var]);
  return d;
}

int MultiPoly::total_degree() const {
  int d = 0;
  for (const auto& [exps, coeff] : terms_) {
    int s = 0;
    for (int e : exps) s += e;
    d = std::max(d, s);
  }
  return d;
}

VandermondeSolver::VandermondeSolver(std::vector<Rational> nodes) : nodes_(std::move(nodes)) {
  const int n = static_cast<int>(nodes_.size());
  if (n == 0) throw ValidationError("interpolation needs at least one node");
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (nodes_[i] == nodes_[j]) throw ValidationError("duplicate interpolation nodes");
    }
  }
  // Gauss-Jordan on [V | I] where V[i][j] = node_i^j.
  std::vector<Rational> m(static_cast<size_t>(n) * 2 * n, Rational(0));
  auto at = [&m, n](int r, int c) -> Rational& { return m[static_cast<size_t>(r) * 2 * n + c]; };
  for (int i = 0; i < n; ++i) {
    Rational p(1);
    for (int j = 0; j < n; ++j) {
      at(i, j) = p;
      p *= nodes_[i];
    }
    at(i, n + i) = 1;
  }
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r) {
      if (at(r, col) != 0) {
        piv = r;
        break;
      }
    }
    internal_check(piv >= 0, "singular Vandermonde matrix");
    if (piv != col) {
      for (int c = 0; c < 2 * n; ++c) std::swap(at(piv, c), at(col, c));
    }
    Rational inv = 1 / at(col, col);
    for (int c = 0; c < 2 * n; ++c) at(col, c) *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == col || at(r, col) == 0) continue;
      Rational f = at(r, col);
      for (int c = 0; c < 2 * n; ++c) at(r, c) -= f * at(col, c);
    }
  }
  inv_.resize(static_cast<size_t>(n) * n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) inv_[static_cast<size_t>(r) * n + c] = at(r, n + c);
  }
}

std::vector<Rational> VandermondeSolver::coefficients(const std::vector<Rational>& values) const {
  const int n = size();
  if (static_cast<int>(values.size()) != n) throw ValidationError("interpolation value count mismatch");
  std::vector<Rational> out(n, Rational(0));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      const Rational& m = inv_[static_cast<size_t>(r) * n + c];
      if (m != 0) out[r] += m * values[c];
    }
  }
  return out;
}

Rational VandermondeSolver::coefficient(int k, const std::vector<Rational>& values) const {
  const int n = size();
  if (static_cast<int>(values.size()) != n) throw ValidationError("interpolation value count mismatch");
  if (k < 0 || k >= n) return Rational(0);
  Rational out(0);
  for (int c = 0; c < n; ++c) {
    const Rational& m = inv_[static_cast<size_t>(k) * n + c];
    if (m != 0) out += m * values[c];
  }
  return out;
}

Poly1 interpolate_univariate(const std::vector<std::pair<Rational, Rational>>& points) {
  std::vector<Rational> nodes, values;
  nodes.reserve(points.size());
  values.reserve(points.size());
  for (const auto& [x, y] : points) {
    nodes.push_back(x);
    values.push_back(y);
  }
  VandermondeSolver solver(std::move(nodes));
  return Poly1(solver.coefficients(values));
}

size_t GridEvaluations::grid_size() const {
  size_t s = 1;
  for (const auto& axis : nodes) s *= axis.size();
  return s;
}

size_t GridEvaluations::flat_index(const std::vector<int>& idx) const {
  size_t flat = 0;
  for (size_t d = 0; d < nodes.size(); ++d) {
    flat = flat * nodes[d].size() + static_cast<size_t>(idx[d]);
  }
  return flat;
}

namespace {

// Applies the inverse Vandermonde transform along one axis of a dense
// row-major tensor, turning values at that axis's nodes into coefficients.
void transform_axis(std::vector<Rational>& data, const std::vector<size_t>& shape, size_t axis,
                    const VandermondeSolver& solver) {
  size_t len = shape[axis];
  size_t inner = 1;
  for (size_t d = axis + 1; d < shape.size(); ++d) inner *= shape[d];
  size_t outer = data.size() / (len * inner);
  std::vector<Rational> column(len);
  for (size_t o = 0; o < outer; ++o) {
    for (size_t i = 0; i < inner; ++i) {
      size_t base = o * len * inner + i;
      for (size_t l = 0; l < len; ++l) column[l] = data[base + l * inner];
      auto coeffs = solver.coefficients(column);
      for (size_t l = 0; l < len; ++l) data[base + l * inner] = coeffs[l];
    }
  }
}

}  // namespace

MultiPoly grid_interpolate(const GridEvaluations& evals, std::vector<std::string> var_names) {
  const size_t dims = evals.nodes.size();
  if (var_names.size() != dims) throw ValidationError("grid variable/name arity mismatch");
  if (evals.values.size() != evals.grid_size()) throw ValidationError("grid shape mismatch");
  std::vector<size_t> shape;
  for (const auto& axis : evals.nodes) {
    if (axis.empty()) throw ValidationError("grid shape mismatch");
    shape.push_back(axis.size());
  }
  std::vector<Rational> data = evals.values;
  for (size_t d = 0; d < dims; ++d) {
    VandermondeSolver solver(evals.nodes[d]);
    transform_axis(data, shape, d, solver);
  }
  MultiPoly out(std::move(var_names));
  std::vector<int> idx(dims, 0);
  for (size_t flat = 0; flat < data.size(); ++flat) {
    if (data[flat] != 0) out.add_term(idx, data[flat]);
    for (size_t d = dims; d-- > 0;) {
      if (++idx[d] < static_cast<int>(shape[d])) break;
      idx[d] = 0;
    }
  }
  return out;
}

MultiPoly sliced_interpolate(const GridEvaluations& evals, int k,
                             std::vector<std::string> lambda_names) {
  if (evals.nodes.empty()) throw ValidationError("grid shape mismatch");
  if (evals.values.size() != evals.grid_size()) throw ValidationError("grid shape mismatch");
  const size_t x_len = evals.nodes[0].size();
  VandermondeSolver x_solver(evals.nodes[0]);

  GridEvaluations slice;
  slice.nodes.assign(evals.nodes.begin() + 1, evals.nodes.end());
  const size_t inner = slice.grid_size();
  slice.values.assign(inner, Rational(0));

  std::vector<Rational> column(x_len);
  for (size_t i = 0; i < inner; ++i) {
    for (size_t l = 0; l < x_len; ++l) column[l] = evals.values[l * inner + i];
    slice.values[i] = x_solver.coefficient(k, column);
  }
  if (slice.nodes.empty()) {
    MultiPoly out(std::move(lambda_names));
    if (slice.values[0] != 0) out.add_term({}, slice.values[0]);
    return out;
  }
  return grid_interpolate(slice, std::move(lambda_names));
}

TruncatedPoly substitute_ell(const MultiPoly& p, int k) {
  if (p.var_count() != 2) throw InternalError("substitute_ell expects a polynomial in (X, ell)");
  TruncatedPoly out = TruncatedPoly::zero(k);
  for (const auto& [exps, coeff] : p.terms()) {
    const int j = exps[0];  // X power
    const int i = exps[1];  // ell power
    if (!(i <= j && j <= k)) throw ValidationError("degree dominance violated");
    // coeff * X^j * (-(1+X^2))^i, truncated at k.
    TruncatedPoly pow = binomial_power_trunc(static_cast<unsigned long>(i), k);
    Rational sign = (i % 2 == 0) ? Rational(1) : Rational(-1);
    for (int d = 0; d + j <= k; ++d) {
      out.c[d + j] += coeff * sign * pow.c[d];
    }
  }
  return out;
}

}  // namespace pdc
