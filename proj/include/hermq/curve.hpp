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

#ifndef HERMQ_CURVE_HPP
#define HERMQ_CURVE_HPP

#include <algorithm>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hermq/gf.hpp"
#include "hermq/poly.hpp"

namespace hermq {

// A rational point of Y_m: either affine (x, y) with y^q + y = x^m, or the
// unique point at infinity P_inf = (1:0:0).
struct CurvePoint {
  bool at_infinity = false;
  FieldElem x, y;

  static CurvePoint affine(FieldElem x, FieldElem y) { return {false, x, y}; }
  static CurvePoint infinity_point() { return {true, FieldElem(), FieldElem()}; }

  bool operator==(const CurvePoint& o) const {
    if (at_infinity != o.at_infinity) return false;
    if (at_infinity) return true;
    return x == o.x && y == o.y;
  }
};

// Power-series branch of the curve through an affine point: y = y_P + sum_k
// s_k t^k with t = x - x_P, valid modulo t^N+1 terms beyond the truncation.
struct LocalExpansion {
  CurvePoint base;
  Series y_series;  // full series for y including the constant term y_P
};

constexpr long kValInfinity = std::numeric_limits<long>::max();

/*
 * The plane quotient curve Y_m : y^q + y = x^m over GF(q^2), with m | q+1.
 *
 * Rational points are enumerated once, in the canonical order that fixes code
 * coordinates everywhere downstream: affine points sorted by (log x, log y)
 * with zero ordered before all powers of the generator, P_inf last.
 */
class Curve {
 public:
  static Curve build(long q, long m) {
    long p = smallest_prime_factor(q);
    long e = 0;
    for (long t = q; t > 1; t /= p) {
      if (t % p != 0) throw std::invalid_argument("q must be a prime power");
      ++e;
    }
    if (static_cast<long long>(q) * q > (1L << 20))
      throw std::invalid_argument("q^2 exceeds the field order bound");
    if (m < 1 || (q + 1) % m != 0)
      throw std::invalid_argument("m must divide q+1");

    Curve c;
    c.q_ = q;
    c.m_ = m;
    c.p_ = p;
    c.field_ = Field::make(p, 2 * e);
    c.c_ = (q + 1) / m;
    c.genus_ = (q - 1) * (m - 1) / 2;
    c.hermitian_ = (m == q + 1);
    c.enumerate();
    return c;
  }

  long q() const { return q_; }
  long m() const { return m_; }
  long characteristic() const { return p_; }
  long quotient_index() const { return c_; }  // c = (q+1)/m
  long genus() const { return genus_; }
  // m = q+1: the smooth Hermitian curve itself, outside the verified regime.
  bool is_hermitian() const { return hermitian_; }
  const FieldPtr& field() const { return field_; }

  long expected_point_count() const { return 1 + q_ * (1 + (q_ - 1) * m_); }

  const std::vector<CurvePoint>& points() const { return points_; }
  std::size_t affine_count() const { return points_.size() - 1; }

  std::size_t point_index(const CurvePoint& pt) const {
    if (pt.at_infinity) return points_.size() - 1;
    auto it = affine_index_.find(point_key(pt));
    if (it == affine_index_.end()) throw std::invalid_argument("point not on curve");
    return it->second;
  }

  bool on_curve(FieldElem x, FieldElem y) const {
    const Field* f = field_.get();
    return f->pow(y, q_) + y == f->pow(x, m_);
  }

  // All y in GF(q^2) with y^q + y = c; exactly q solutions for c in GF(q).
  std::vector<FieldElem> solve_trace_fiber(FieldElem c) const {
    if (!in_subfield(c, q_)) throw std::invalid_argument("c must lie in GF(q)");
    std::vector<FieldElem> sols;
    auto it = trace_fibers_.find(elem_key(c));
    if (it != trace_fibers_.end()) sols = it->second;
    return sols;
  }

  // y(t) through an affine point, t = x - x_P, to order N (series length N+1).
  LocalExpansion local_expand(const CurvePoint& P, long N) const {
    if (P.at_infinity) throw std::invalid_argument("no expansion at the singular point");
    if (!on_curve(P.x, P.y)) throw std::invalid_argument("point not on curve");
    if (N < 1) throw std::invalid_argument("N must be positive");
    const Field* f = field_.get();
    std::size_t len = static_cast<std::size_t>(N) + 1;
    Series x(f, len);
    x[0] = P.x;
    if (len > 1) x[1] = f->one();
    Series xm = x.pow(m_);
    Series y(f, len);
    y[0] = P.y;
    // Newton iteration for F(y) = y^q + y - x^m with F'(y) = 1 identically:
    // the error is raised to the q-th power per step.
    long iters = 1;
    for (long reach = 1; reach < static_cast<long>(len); reach *= q_) ++iters;
    for (long it = 0; it < iters; ++it) {
      Series residue = frob_series(y) + y - xm;
      y = y - residue;
    }
    Series check = frob_series(y) + y - xm;
    if (check.first_nonzero() != -1)
      throw std::logic_error("branch expansion failed to converge");
    return LocalExpansion{P, y};
  }

  /*
   * Order of vanishing of a reduced polynomial (y-degree <= q-1) at a point.
   * At P_inf the value is -max(q*i + m*j) over the support; the weights
   * q*i + m*j are pairwise distinct for 0 <= j <= q-1 because gcd(q, m) = 1,
   * so no cancellation can occur. At affine points the branch series is
   * substituted with adaptive truncation.
   */
  long valuation(const Poly2& f, const CurvePoint& P, long hint = 4) const {
    if (f.is_zero()) return kValInfinity;
    if (f.y_degree() > q_ - 1)
      throw std::invalid_argument("reduce f modulo the curve equation first");
    if (P.at_infinity) {
      long w = 0;
      for (const auto& [k, c] : f.terms())
        w = std::max(w, q_ * k.first + m_ * k.second);
      return -w;
    }
    long cap = 4 * (q_ + m_);
    long N = std::max<long>(hint + 2, 4);
    while (true) {
      LocalExpansion exp = local_expand(P, N);
      const Field* fl = field_.get();
      Series xs(fl, exp.y_series.len());
      xs[0] = P.x;
      xs[1] = fl->one();
      Series val = f.eval_series(xs, exp.y_series);
      long v = val.first_nonzero();
      if (v >= 0) return v;
      if (N >= cap)
        throw std::domain_error("valuation exceeds the truncation bound");
      N = std::min(cap, 2 * N);
    }
  }

  // Remainder of f modulo y^q + y - x^m, i.e. y^q is replaced by x^m - y
  // until the y-degree drops below q.
  Poly2 reduce(const Poly2& f) const {
    Poly2 r = f;
    const Field* fl = field_.get();
    while (r.y_degree() >= q_) {
      Poly2 next(fl);
      for (const auto& [k, c] : r.terms()) {
        if (k.second < q_) {
          next.add_term(k.first, k.second, c);
        } else {
          // x^i y^j -> x^i y^{j-q} (x^m - y)
          next.add_term(k.first + m_, k.second - q_, c);
          next.add_term(k.first, k.second - q_ + 1, -c);
        }
      }
      r = next;
    }
    return r;
  }

  std::string point_to_string(const CurvePoint& P) const {
    if (P.at_infinity) return "Pinf";
    return "(" + field_->to_string(P.x) + ", " + field_->to_string(P.y) + ")";
  }

  FieldElem subfield_gen() const { return field_->gen_pow(q_ + 1); }

 private:
  static long smallest_prime_factor(long q) {
    if (q < 2) throw std::invalid_argument("q must be a prime power");
    for (long d = 2; d * d <= q; ++d)
      if (q % d == 0) return d;
    return q;
  }

  static long elem_key(FieldElem a) { return a.log(); }
  static std::pair<long, long> point_key(const CurvePoint& P) {
    return {P.x.log(), P.y.log()};
  }

  // Frobenius x -> x^q is additive in characteristic p, so it acts on series
  // coefficientwise with stride q in the exponent.
  Series frob_series(const Series& s) const {
    Series r(field_.get(), s.len());
    for (std::size_t i = 0; i < s.len(); ++i) {
      if (s[i].is_zero()) continue;
      unsigned long long shifted = static_cast<unsigned long long>(i) * q_;
      if (shifted >= s.len()) continue;
      r[static_cast<std::size_t>(shifted)] = field_->pow(s[i], q_);
    }
    return r;
  }

  void enumerate() {
    const Field* f = field_.get();
    long Q = f->order();  // q^2
    // bucket y by trace value
    for (long ylog = -1; ylog < Q - 1; ++ylog) {
      FieldElem y(f, static_cast<std::int32_t>(ylog));
      FieldElem tr = rel_trace(y, q_);
      trace_fibers_[elem_key(tr)].push_back(y);
    }
    // canonical order: x by log (zero first), then y by log (zero first)
    for (long xlog = -1; xlog < Q - 1; ++xlog) {
      FieldElem x(f, static_cast<std::int32_t>(xlog));
      FieldElem xm = f->pow(x, m_);
      if (!in_subfield(xm, q_)) continue;
      auto it = trace_fibers_.find(elem_key(xm));
      if (it == trace_fibers_.end()) continue;
      for (FieldElem y : it->second)
        points_.push_back(CurvePoint::affine(x, y));
    }
    points_.push_back(CurvePoint::infinity_point());
    if (static_cast<long>(points_.size()) != expected_point_count())
      throw std::logic_error("rational point count does not match the formula");
    for (std::size_t i = 0; i + 1 < points_.size(); ++i)
      affine_index_[point_key(points_[i])] = i;
  }

  long q_ = 0, m_ = 0, p_ = 0, c_ = 0, genus_ = 0;
  bool hermitian_ = false;
  FieldPtr field_;
  std::vector<CurvePoint> points_;
  std::map<std::pair<long, long>, std::size_t> affine_index_;
  std::map<long, std::vector<FieldElem>> trace_fibers_;
};

}  // namespace hermq

#endif  // HERMQ_CURVE_HPP
