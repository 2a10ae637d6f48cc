// Copyright 2026 The Authors.
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

#ifndef HERMQ_RRSPACE_HPP
#define HERMQ_RRSPACE_HPP

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "hermq/curve.hpp"
#include "hermq/linalg.hpp"
#include "hermq/poly.hpp"

namespace hermq {

// Monomial x^i y^j; lies in L(r Q_inf) iff q*i + m*j <= r (and 0 <= j <= q-1).
struct MonomialExponent {
  long i = 0, j = 0;
  bool operator==(const MonomialExponent& o) const { return i == o.i && j == o.j; }
};

// Multiplicity map over canonical point indices. Doubles as the scheme E and
// as Riemann-Roch twist data; the index of P_inf carries pole-order shifts.
class EffectiveDivisor {
 public:
  EffectiveDivisor() = default;

  void add(std::size_t point_index, long mult) {
    if (mult < 0) throw std::invalid_argument("multiplicities must be >= 0");
    if (mult == 0) return;
    mult_[point_index] += mult;
  }

  long at(std::size_t point_index) const {
    auto it = mult_.find(point_index);
    return it == mult_.end() ? 0 : it->second;
  }

  long degree() const {
    long d = 0;
    for (const auto& [idx, m] : mult_) d += m;
    return d;
  }

  const std::map<std::size_t, long>& support() const { return mult_; }
  bool empty() const { return mult_.empty(); }

  // A <= B pointwise.
  bool dominated_by(const EffectiveDivisor& o) const {
    for (const auto& [idx, m] : mult_)
      if (o.at(idx) < m) return false;
    return true;
  }

 private:
  std::map<std::size_t, long> mult_;
};

// Subspace of L(r Q_inf) cut out by vanishing conditions: rows of `coeffs`
// are coordinate vectors over the ordered monomial basis.
struct FunctionSpace {
  long r = 0;
  std::vector<MonomialExponent> basis;
  Matrix coeffs;

  std::size_t dim() const { return coeffs.rows(); }

  Poly2 row_poly(const Field* field, std::size_t row) const {
    Poly2 p(field);
    for (std::size_t c = 0; c < basis.size(); ++c)
      p.add_term(basis[c].i, basis[c].j, coeffs.at(row, c));
    return p;
  }
};

inline std::vector<MonomialExponent> monomial_basis(const Curve& curve, long r) {
  if (r < 0) throw std::invalid_argument("r must be non-negative");
  std::vector<MonomialExponent> basis;
  long q = curve.q(), m = curve.m();
  for (long j = 0; j <= q - 1 && m * j <= r; ++j)
    for (long i = 0; q * i + m * j <= r; ++i) basis.push_back({i, j});
  std::sort(basis.begin(), basis.end(), [&](const auto& a, const auto& b) {
    long wa = q * a.i + m * a.j, wb = q * b.i + m * b.j;
    return wa != wb ? wa < wb : a.j < b.j;
  });
  return basis;
}

namespace detail {

// Jet rows of the given monomials at the affine part of A: for each support
// point P, the first A(P) branch-series coefficients of every monomial.
inline Matrix jet_condition_matrix(const Curve& curve,
                                   const std::vector<MonomialExponent>& basis,
                                   const EffectiveDivisor& affine_part) {
  const Field* f = curve.field().get();
  Matrix cond(f, 0, basis.size());
  for (const auto& [idx, mult] : affine_part.support()) {
    const CurvePoint& P = curve.points()[idx];
    LocalExpansion exp = curve.local_expand(P, mult + 1);
    Series xs(f, exp.y_series.len());
    xs[0] = P.x;
    xs[1] = f->one();
    // one substituted series per basis monomial, cached across the jet rows
    std::vector<Series> mono_series;
    mono_series.reserve(basis.size());
    for (const auto& mono : basis)
      mono_series.push_back(xs.pow(mono.i) * exp.y_series.pow(mono.j));
    for (long k = 0; k < mult; ++k) {
      std::vector<FieldElem> row(basis.size(), f->zero());
      for (std::size_t c = 0; c < basis.size(); ++c) row[c] = mono_series[c][k];
      cond.append_row(row);
    }
  }
  return cond;
}

}  // namespace detail

inline Matrix identity_like(const Field* f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = f->one();
  return m;
}

/*
 * Basis of {f in L(r Q_inf) : v_P(f) >= A(P) for all affine P in supp A}.
 * A multiplicity e at Q_inf is handled by shrinking the pole order,
 * L(r Q_inf - e Q_inf) = L((r-e) Q_inf); jets are never taken at the
 * singular point.
 */
inline FunctionSpace rr_subspace(const Curve& curve, long r,
                                 const EffectiveDivisor& A) {
  std::size_t inf_index = curve.points().size() - 1;
  long e = A.at(inf_index);
  r -= e;
  if (r < 0) {
    FunctionSpace empty;
    empty.r = r;
    empty.coeffs = Matrix(curve.field().get(), 0, 0);
    return empty;
  }
  EffectiveDivisor affine;
  long cap = 4 * (curve.q() + curve.m());
  for (const auto& [idx, mult] : A.support()) {
    if (idx == inf_index) continue;
    if (mult > cap) throw std::domain_error("divisor multiplicity exceeds the truncation bound");
    affine.add(idx, mult);
  }
  FunctionSpace space;
  space.r = r;
  space.basis = monomial_basis(curve, r);
  Matrix cond = detail::jet_condition_matrix(curve, space.basis, affine);
  space.coeffs = cond.rows() == 0
                     ? identity_like(curve.field().get(), space.basis.size())
                     : cond.kernel();
  return space;
}

/*
 * A nonzero h in L(t(q+1) Q_inf) vanishing at P to order exactly t(q+1), so
 * div(h) = t(q+1) P - t(q+1) Q_inf. The solution space is required to be
 * one-dimensional; that is the maximality of the curve, checked rather than
 * assumed.
 */
inline Poly2 equivalence_function(const Curve& curve, const CurvePoint& P, long t) {
  if (P.at_infinity) throw std::invalid_argument("P must be affine");
  if (t < 1) throw std::invalid_argument("t must be positive");
  long r = t * (curve.q() + 1);
  if (r > 4 * (curve.q() + curve.m()))
    throw std::domain_error("t(q+1) exceeds the truncation bound");
  EffectiveDivisor A;
  A.add(curve.point_index(P), r);
  FunctionSpace space = rr_subspace(curve, r, A);
  if (space.dim() != 1)
    throw std::logic_error("L(t(q+1)Qinf - t(q+1)P) is not one-dimensional");
  Poly2 h = space.row_poly(curve.field().get(), 0);
  if (curve.valuation(h, P, r) != r)
    throw std::logic_error("equivalence function vanishes to the wrong order");
  return h;
}

inline std::string function_space_to_string(const Curve& curve,
                                            const FunctionSpace& s,
                                            const std::string& divisor_label) {
  std::string out = "L(" + std::to_string(s.r) + "Qinf" + divisor_label + ")\n";
  const Field* f = curve.field().get();
  for (std::size_t row = 0; row < s.dim(); ++row) {
    std::string line;
    for (std::size_t c = 0; c < s.basis.size(); ++c) {
      FieldElem v = s.coeffs.at(row, c);
      if (v.is_zero()) continue;
      if (!line.empty()) line += " ";
      line += "(" + std::to_string(s.basis[c].i) + "," +
              std::to_string(s.basis[c].j) + "):" + f->to_string(v);
    }
    out += line + "\n";
  }
  return out;
}

}  // namespace hermq

#endif  // HERMQ_RRSPACE_HPP
