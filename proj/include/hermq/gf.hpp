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

#ifndef HERMQ_GF_HPP
#define HERMQ_GF_HPP

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace hermq {

/*
 * Exact arithmetic in GF(p^n), p^n <= 2^20.
 *
 * Nonzero elements are stored as discrete logarithms with respect to a
 * canonical generator g, the residue class of x modulo the lexicographically
 * smallest primitive polynomial of degree n over GF(p) (coefficients compared
 * in the order c_0, c_1, ..., c_{n-1}). Addition goes through a Zech-logarithm
 * table, so every field operation is a constant number of table lookups.
 */
class Field;
using FieldPtr = std::shared_ptr<const Field>;

class FieldElem {
 public:
  FieldElem() : field_(nullptr), log_(kZeroLog) {}
  FieldElem(const Field* field, std::int32_t log) : field_(field), log_(log) {}

  bool is_zero() const { return log_ == kZeroLog; }
  std::int32_t log() const { return log_; }  // kZeroLog for zero
  const Field* field() const { return field_; }

  bool operator==(const FieldElem& o) const {
    return field_ == o.field_ && log_ == o.log_;
  }
  bool operator!=(const FieldElem& o) const { return !(*this == o); }

  static constexpr std::int32_t kZeroLog = -1;

 private:
  const Field* field_;
  std::int32_t log_;
};

class Field : public std::enable_shared_from_this<Field> {
 public:
  // Constructs GF(p^n) with the deterministic primitive defining polynomial.
  static FieldPtr make(long p, long n);

  long characteristic() const { return p_; }
  long degree() const { return n_; }
  long order() const { return q_; }
  // Defining polynomial coefficients c_0..c_n (monic, c_n = 1).
  const std::vector<long>& modulus() const { return modulus_; }

  FieldElem zero() const { return FieldElem(this, FieldElem::kZeroLog); }
  FieldElem one() const { return FieldElem(this, 0); }
  FieldElem gen() const { return FieldElem(this, n_ == 1 && q_ == 2 ? 0 : 1 % (q_ - 1)); }
  // g^k for any integer k (reduced mod q-1).
  FieldElem gen_pow(long k) const {
    long e = k % (q_ - 1);
    if (e < 0) e += q_ - 1;
    return FieldElem(this, static_cast<std::int32_t>(e));
  }

  FieldElem add(FieldElem a, FieldElem b) const {
    check(a), check(b);
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    std::int32_t i = a.log(), j = b.log();
    if (i > j) std::swap(i, j);
    std::int32_t z = zech_[j - i];
    if (z == FieldElem::kZeroLog) return zero();
    return FieldElem(this, modq1(i + z));
  }

  FieldElem neg(FieldElem a) const {
    check(a);
    if (a.is_zero() || p_ == 2) return a;
    return FieldElem(this, modq1(a.log() + (q_ - 1) / 2));
  }

  FieldElem sub(FieldElem a, FieldElem b) const { return add(a, neg(b)); }

  FieldElem mul(FieldElem a, FieldElem b) const {
    check(a), check(b);
    if (a.is_zero() || b.is_zero()) return zero();
    return FieldElem(this, modq1(a.log() + b.log()));
  }

  FieldElem inv(FieldElem a) const {
    check(a);
    if (a.is_zero()) throw std::domain_error("division by zero");
    return FieldElem(this, modq1(-a.log()));
  }

  FieldElem div(FieldElem a, FieldElem b) const { return mul(a, inv(b)); }

  FieldElem pow(FieldElem a, long e) const {
    check(a);
    if (a.is_zero()) {
      if (e < 0) throw std::domain_error("division by zero");
      return e == 0 ? one() : zero();
    }
    long r = (a.log() * static_cast<long long>(e)) % (q_ - 1);
    if (r < 0) r += q_ - 1;
    return FieldElem(this, static_cast<std::int32_t>(r));
  }

  // Element from an integer in the prime field (value mod p, embedded).
  FieldElem from_int(long v) const {
    long r = v % p_;
    if (r < 0) r += p_;
    return FieldElem(this, log_of_poly_[r]);
  }

  // Packed base-p polynomial representation (digit i = coefficient of x^i).
  long to_poly_index(FieldElem a) const {
    check(a);
    return a.is_zero() ? 0 : exp_[a.log()];
  }
  FieldElem from_poly_index(long idx) const {
    if (idx < 0 || idx >= q_) throw std::invalid_argument("poly index out of range");
    return FieldElem(this, log_of_poly_[idx]);
  }

  // "0" or "g^k".
  std::string to_string(FieldElem a) const {
    check(a);
    if (a.is_zero()) return "0";
    return "g^" + std::to_string(a.log());
  }

  std::string name() const {
    return "GF(" + std::to_string(p_) + (n_ > 1 ? "^" + std::to_string(n_) : "") + ")";
  }

 private:
  Field() = default;

  void check(FieldElem a) const {
    if (a.field() != this) throw std::invalid_argument("mixed-field operands");
  }
  std::int32_t modq1(long v) const {
    long r = v % (q_ - 1);
    if (r < 0) r += q_ - 1;
    return static_cast<std::int32_t>(r);
  }

  long p_ = 0, n_ = 0, q_ = 0;
  std::vector<long> modulus_;               // c_0..c_n
  std::vector<long> exp_;                   // log -> packed poly, size q-1
  std::vector<std::int32_t> log_of_poly_;   // packed poly -> log, size q
  std::vector<std::int32_t> zech_;          // zech[k] = log(1 + g^k), size q-1
};

namespace detail {

inline bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Digitwise sum of two packed base-p polynomials.
inline long poly_add(long a, long b, long p) {
  long r = 0, mult = 1;
  while (a > 0 || b > 0) {
    r += ((a % p + b % p) % p) * mult;
    a /= p, b /= p;
    mult *= p;
  }
  return r;
}

}  // namespace detail

inline FieldPtr Field::make(long p, long n) {
  if (!detail::is_prime(p)) throw std::invalid_argument("p must be prime");
  if (n < 1) throw std::invalid_argument("n must be positive");
  long q = 1;
  for (long i = 0; i < n; ++i) {
    q *= p;
    if (q > (1L << 20)) throw std::invalid_argument("field order exceeds 2^20");
  }

  auto f = FieldPtr(new Field());
  auto* fm = const_cast<Field*>(f.get());
  fm->p_ = p, fm->n_ = n, fm->q_ = q;

  // x^n reduces to -(c_0 + c_1 x + ... + c_{n-1} x^{n-1}); precompute the
  // packed representative per candidate and fill the exp table by repeated
  // multiplication by x. The candidate is primitive (and irreducible) iff the
  // first return of x^k to 1 happens at k = q-1.
  long xn_base = 1;
  for (long i = 0; i < n - 1; ++i) xn_base *= p;  // p^{n-1}
  std::vector<long> coeffs(n, 0);
  std::vector<long> exp;
  bool found = false;
  while (!found) {
    // reduction image of x^n for this candidate
    long red = 0, mult = 1;
    for (long i = 0; i < n; ++i) {
      red += ((p - coeffs[i]) % p) * mult;
      mult *= p;
    }
    if (coeffs[0] != 0) {  // c_0 = 0 would make the candidate divisible by x
      exp.assign(1, 1);    // x^0 = 1
      long cur = 1;
      bool ok = true;
      for (long k = 1; k < q - 1; ++k) {
        // multiply by x: shift digits, reduce the overflow digit
        long top = cur / xn_base;
        cur = (cur % xn_base) * p;
        while (top > 0) {
          cur = detail::poly_add(cur, red, p);
          --top;
        }
        if (cur == 1) {  // order of x divides k < q-1
          ok = false;
          break;
        }
        exp.push_back(cur);
      }
      if (ok) {
        // closing step: x^{q-1} must equal 1
        long top = exp.back() / xn_base;
        long cur = (exp.back() % xn_base) * p;
        while (top > 0) {
          cur = detail::poly_add(cur, red, p);
          --top;
        }
        if (cur == 1) found = true;
      }
    }
    if (found) break;
    // next candidate in (c_0, c_1, ..., c_{n-1}) lexicographic order:
    // the last coordinate varies fastest
    long i = n - 1;
    while (i >= 0 && coeffs[i] == p - 1) coeffs[i--] = 0;
    if (i < 0) throw std::logic_error("no primitive polynomial found");
    ++coeffs[i];
  }

  fm->modulus_ = coeffs;
  fm->modulus_.push_back(1);
  fm->exp_ = std::move(exp);
  fm->log_of_poly_.assign(q, FieldElem::kZeroLog);
  for (long k = 0; k < q - 1; ++k)
    fm->log_of_poly_[fm->exp_[k]] = static_cast<std::int32_t>(k);
  fm->zech_.resize(q - 1);
  for (long k = 0; k < q - 1; ++k)
    fm->zech_[k] = fm->log_of_poly_[detail::poly_add(fm->exp_[k], 1, p)];
  return f;
}

// Convenience wrappers so call sites read like arithmetic.
inline FieldElem operator+(FieldElem a, FieldElem b) { return a.field()->add(a, b); }
inline FieldElem operator-(FieldElem a, FieldElem b) { return a.field()->sub(a, b); }
inline FieldElem operator*(FieldElem a, FieldElem b) { return a.field()->mul(a, b); }
inline FieldElem operator/(FieldElem a, FieldElem b) { return a.field()->div(a, b); }
inline FieldElem operator-(FieldElem a) { return a.field()->neg(a); }

// a^q for a in the field of order q^2.
inline FieldElem frobenius_q(FieldElem a, long q) {
  const Field* f = a.field();
  if (f->order() != q * q) throw std::invalid_argument("field order is not q^2");
  return f->pow(a, q);
}

// a^q + a; lands in the subfield of order q.
inline FieldElem rel_trace(FieldElem a, long q) {
  return frobenius_q(a, q) + a;
}

// True iff a lies in the subfield of order q inside the field of order q^2.
inline bool in_subfield(FieldElem a, long q) {
  return frobenius_q(a, q) == a;
}

}  // namespace hermq

#endif  // HERMQ_GF_HPP
