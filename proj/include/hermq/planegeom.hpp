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

#ifndef HERMQ_PLANEGEOM_HPP
#define HERMQ_PLANEGEOM_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hermq/curve.hpp"
#include "hermq/linalg.hpp"
#include "hermq/rrspace.hpp"

namespace hermq {

// A line u*x + v*y + w*z = 0 of P^2 over GF(q^2), normalized so the first
// nonzero coefficient is 1. Lines through P_inf = (1:0:0) are exactly those
// with u = 0: the horizontal lines y = a (Lambda for a != 0, L0 for a = 0)
// and the line at infinity z = 0.
struct ProjLine {
  enum class Class { L0, LInfinity, Lambda, Theta };

  FieldElem u, v, w;
  Class cls;

  bool through_infinity() const { return u.is_zero(); }

  bool contains_affine(FieldElem x, FieldElem y) const {
    return (u * x + v * y + w).is_zero();
  }

  // Affine local equation as a bivariate polynomial (chart z = 1).
  Poly2 affine_equation(const Field* f) const {
    Poly2 p(f);
    p.add_term(1, 0, u);
    p.add_term(0, 1, v);
    p.add_term(0, 0, w);
    return p;
  }

  bool operator==(const ProjLine& o) const {
    return u == o.u && v == o.v && w == o.w;
  }
};

// A zero-dimensional scheme supported along the curve: curvilinear
// multiplicities at affine points plus at most a reduced point at P_inf.
struct PlaneScheme {
  EffectiveDivisor affine;
  bool reduced_at_infinity = false;

  long degree() const { return affine.degree() + (reduced_at_infinity ? 1 : 0); }
};

inline ProjLine make_line(const Field* f, FieldElem u, FieldElem v, FieldElem w) {
  // normalize first nonzero coefficient to 1
  FieldElem lead = !u.is_zero() ? u : (!v.is_zero() ? v : w);
  if (lead.is_zero()) throw std::invalid_argument("zero line");
  FieldElem s = f->inv(lead);
  u = u * s, v = v * s, w = w * s;
  ProjLine::Class cls;
  if (!u.is_zero()) {
    cls = ProjLine::Class::Theta;
  } else if (!v.is_zero()) {
    cls = w.is_zero() ? ProjLine::Class::L0 : ProjLine::Class::Lambda;
  } else {
    cls = ProjLine::Class::LInfinity;
  }
  return ProjLine{u, v, w, cls};
}

// Every line of P^2(GF(q^2)) exactly once: q^4 + q^2 + 1 lines.
inline std::vector<ProjLine> all_lines(const Curve& curve) {
  const Field* f = curve.field().get();
  long Q = f->order();
  std::vector<ProjLine> lines;
  lines.reserve(static_cast<std::size_t>(Q) * Q + Q + 1);
  auto elem = [&](long log) { return FieldElem(f, static_cast<std::int32_t>(log)); };
  FieldElem one = f->one();
  for (long vl = -1; vl < Q - 1; ++vl)
    for (long wl = -1; wl < Q - 1; ++wl)
      lines.push_back(make_line(f, one, elem(vl), elem(wl)));
  for (long wl = -1; wl < Q - 1; ++wl)
    lines.push_back(make_line(f, f->zero(), one, elem(wl)));
  lines.push_back(make_line(f, f->zero(), f->zero(), one));
  return lines;
}

// The horizontal line y = a.
inline ProjLine horizontal_line(const Field* f, FieldElem a) {
  return make_line(f, f->zero(), f->one(), -a);
}

/*
 * deg(L cap E): at each affine support point P on L this is
 * min(E(P), v_P(l)) with l the affine equation of L, exact for curvilinear
 * schemes at smooth points; the reduced point at P_inf contributes 1 when L
 * passes through P_inf.
 */
inline long line_scheme_degree(const Curve& curve, const ProjLine& L,
                               const PlaneScheme& E) {
  const Field* f = curve.field().get();
  long deg = 0;
  for (const auto& [idx, mult] : E.affine.support()) {
    const CurvePoint& P = curve.points()[idx];
    if (!L.contains_affine(P.x, P.y)) continue;
    if (mult == 1) {
      deg += 1;
    } else {
      long v = curve.valuation(L.affine_equation(f), P, mult);
      deg += std::min(mult, v);
    }
  }
  if (E.reduced_at_infinity && L.through_infinity()) deg += 1;
  return deg;
}

// (alpha1, alpha2): maximal deg(L cap E) over Lambda lines and Theta lines.
inline std::pair<long, long> alpha_invariants(const Curve& curve,
                                              const PlaneScheme& E) {
  if (E.affine.empty() && !E.reduced_at_infinity) return {0, 0};
  long a1 = 0, a2 = 0;
  for (const ProjLine& L : all_lines(curve)) {
    if (L.cls == ProjLine::Class::Lambda) {
      a1 = std::max(a1, line_scheme_degree(curve, L, E));
    } else if (L.cls == ProjLine::Class::Theta) {
      a2 = std::max(a2, line_scheme_degree(curve, L, E));
    }
  }
  return {a1, a2};
}

/*
 * deg(L cap E) for a divisor-style scheme: multiplicities over canonical
 * point indices including Q_inf. The contact order of a line with the branch
 * at Q_inf is q - m for every line through P_inf other than L_inf (their
 * affine intersection with the curve accounts for exactly m of the q Bezout
 * points), q for L_inf, and 0 for Theta lines.
 */
inline long line_divisor_degree(const Curve& curve, const ProjLine& L,
                                const EffectiveDivisor& E) {
  const Field* f = curve.field().get();
  std::size_t inf = curve.points().size() - 1;
  long deg = 0;
  for (const auto& [idx, mult] : E.support()) {
    if (idx == inf) {
      long contact = 0;
      if (L.cls == ProjLine::Class::LInfinity)
        contact = curve.q();
      else if (L.through_infinity())
        contact = curve.q() - curve.m();
      deg += std::min(mult, contact);
      continue;
    }
    const CurvePoint& P = curve.points()[idx];
    if (!L.contains_affine(P.x, P.y)) continue;
    if (mult == 1)
      deg += 1;
    else
      deg += std::min(mult, curve.valuation(L.affine_equation(f), P, mult));
  }
  return deg;
}

// (alpha1, alpha2) of a divisor-style scheme, Q_inf multiplicities included.
inline std::pair<long, long> alpha_invariants_divisor(const Curve& curve,
                                                      const EffectiveDivisor& E) {
  if (E.empty()) return {0, 0};
  long a1 = 0, a2 = 0;
  for (const ProjLine& L : all_lines(curve)) {
    if (L.cls == ProjLine::Class::Lambda)
      a1 = std::max(a1, line_divisor_degree(curve, L, E));
    else if (L.cls == ProjLine::Class::Theta)
      a2 = std::max(a2, line_divisor_degree(curve, L, E));
  }
  return {a1, a2};
}

// Ordered affine monomials x^a y^b with a+b <= d; the homogeneous degree-d
// form behind (a, b) is x^a y^b z^{d-a-b}.
inline std::vector<MonomialExponent> plane_form_basis(long d) {
  std::vector<MonomialExponent> basis;
  for (long t = 0; t <= d; ++t)
    for (long b = 0; b <= t; ++b) basis.push_back({t - b, b});
  return basis;
}

// Condition matrix of Z on degree-d plane forms: jet rows at affine support
// points, one evaluation row at (1:0:0) for the reduced point at infinity
// (the only degree-d monomial not vanishing there is x^d).
inline Matrix plane_condition_matrix(const Curve& curve, const PlaneScheme& Z,
                                     long d) {
  const Field* f = curve.field().get();
  std::vector<MonomialExponent> basis = plane_form_basis(d);
  Matrix cond = detail::jet_condition_matrix(curve, basis, Z.affine);
  if (Z.reduced_at_infinity) {
    std::vector<FieldElem> row(basis.size(), f->zero());
    for (std::size_t c = 0; c < basis.size(); ++c)
      if (basis[c].i == d && basis[c].j == 0) row[c] = f->one();
    cond.append_row(row);
  }
  return cond;
}

// (h0, h1) of the ideal sheaf of Z twisted by d; h1 = deg Z - rank of the
// condition matrix, h0 = binom(d+2, 2) - rank.
inline std::pair<long, long> h1_ideal_sheaf(const Curve& curve,
                                            const PlaneScheme& Z, long d) {
  if (d < 1) throw std::invalid_argument("d must be positive");
  long forms = (d + 2) * (d + 1) / 2;
  long rank = static_cast<long>(plane_condition_matrix(curve, Z, d).rank());
  return {forms - rank, Z.degree() - rank};
}

// A line with deg(L cap Z) >= d+2, if one exists. For deg Z <= 2d+1 its
// existence is equivalent to h1 > 0; the equivalence is asserted in tests,
// not assumed here.
inline std::optional<ProjLine> line_excess_certificate(const Curve& curve,
                                                       const PlaneScheme& Z,
                                                       long d) {
  for (const ProjLine& L : all_lines(curve))
    if (line_scheme_degree(curve, L, Z) >= d + 2) return L;
  return std::nullopt;
}

inline std::string line_to_string(const Curve& curve, const ProjLine& L) {
  const Field* f = curve.field().get();
  switch (L.cls) {
    case ProjLine::Class::L0:
      return "y=0";
    case ProjLine::Class::LInfinity:
      return "z=0";
    case ProjLine::Class::Lambda:
      return "y=" + f->to_string(-L.w);
    case ProjLine::Class::Theta:
      return "[" + f->to_string(L.u) + ":" + f->to_string(L.v) + ":" +
             f->to_string(L.w) + "]";
  }
  return "";
}

}  // namespace hermq

#endif  // HERMQ_PLANEGEOM_HPP
