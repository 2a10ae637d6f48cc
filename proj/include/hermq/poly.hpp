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

#ifndef HERMQ_POLY_HPP
#define HERMQ_POLY_HPP

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hermq/gf.hpp"

namespace hermq {

// Truncated power series in one variable t: coefficients 0..N-1.
class Series {
 public:
  Series(const Field* field, std::size_t len)
      : field_(field), c_(len, field->zero()) {}

  const Field* field() const { return field_; }
  std::size_t len() const { return c_.size(); }
  FieldElem& operator[](std::size_t i) { return c_[i]; }
  const FieldElem& operator[](std::size_t i) const { return c_[i]; }

  Series operator+(const Series& o) const {
    Series r(field_, c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] + o.c_[i];
    return r;
  }

  Series operator-(const Series& o) const {
    Series r(field_, c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] - o.c_[i];
    return r;
  }

  Series operator*(const Series& o) const {
    Series r(field_, c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i].is_zero()) continue;
      for (std::size_t j = 0; i + j < c_.size(); ++j) {
        if (o.c_[j].is_zero()) continue;
        r[i + j] = r[i + j] + c_[i] * o.c_[j];
      }
    }
    return r;
  }

  Series pow(long e) const {
    Series r(field_, c_.size());
    r[0] = field_->one();
    Series base = *this;
    while (e > 0) {
      if (e & 1) r = r * base;
      base = base * base;
      e >>= 1;
    }
    return r;
  }

  // Index of the first nonzero coefficient, or -1 if all stored
  // coefficients vanish.
  long first_nonzero() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (!c_[i].is_zero()) return static_cast<long>(i);
    return -1;
  }

 private:
  const Field* field_;
  std::vector<FieldElem> c_;
};

// Sparse bivariate polynomial over a finite field, keyed by (x-exp, y-exp).
class Poly2 {
 public:
  using Key = std::pair<long, long>;

  explicit Poly2(const Field* field) : field_(field) {}

  static Poly2 monomial(const Field* field, long i, long j, FieldElem c) {
    Poly2 p(field);
    p.set(i, j, c);
    return p;
  }

  const Field* field() const { return field_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Key, FieldElem>& terms() const { return terms_; }

  FieldElem coeff(long i, long j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? field_->zero() : it->second;
  }

  void set(long i, long j, FieldElem c) {
    if (c.is_zero())
      terms_.erase({i, j});
    else
      terms_[{i, j}] = c;
  }

  void add_term(long i, long j, FieldElem c) { set(i, j, coeff(i, j) + c); }

  Poly2 operator+(const Poly2& o) const {
    Poly2 r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k.first, k.second, c);
    return r;
  }

  Poly2 operator-(const Poly2& o) const {
    Poly2 r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k.first, k.second, -c);
    return r;
  }

  Poly2 operator*(const Poly2& o) const {
    Poly2 r(field_);
    for (const auto& [ka, ca] : terms_)
      for (const auto& [kb, cb] : o.terms_)
        r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return r;
  }

  Poly2 scaled(FieldElem c) const {
    Poly2 r(field_);
    for (const auto& [k, v] : terms_) r.set(k.first, k.second, v * c);
    return r;
  }

  long y_degree() const {
    long d = 0;
    for (const auto& [k, c] : terms_) d = std::max(d, k.second);
    return d;
  }

  long total_degree() const {
    long d = 0;
    for (const auto& [k, c] : terms_) d = std::max(d, k.first + k.second);
    return d;
  }

  FieldElem eval(FieldElem x, FieldElem y) const {
    const Field* f = field_;
    FieldElem r = f->zero();
    for (const auto& [k, c] : terms_)
      r = r + c * f->pow(x, k.first) * f->pow(y, k.second);
    return r;
  }

  // Substitutes series for x and y, truncated to their common length.
  Series eval_series(const Series& xs, const Series& ys) const {
    // Horner in y; per y-level a plain polynomial in x evaluated on xs.
    long ydeg = y_degree();
    Series acc(field_, xs.len());
    for (long j = ydeg; j >= 0; --j) {
      if (j != ydeg) acc = acc * ys;
      // add the coefficient a_j(x) of y^j
      Series aj(field_, xs.len());
      bool any = false;
      for (const auto& [k, c] : terms_) {
        if (k.second != j) continue;
        any = true;
        Series xe = xs.pow(k.first);
        for (std::size_t t = 0; t < aj.len(); ++t)
          aj[t] = aj[t] + c * xe[t];
      }
      if (any) acc = acc + aj;
    }
    return acc;
  }

 private:
  const Field* field_;
  std::map<Key, FieldElem> terms_;
};

}  // namespace hermq

#endif  // HERMQ_POLY_HPP
