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

#ifndef HERMQ_CODES_HPP
#define HERMQ_CODES_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "hermq/curve.hpp"
#include "hermq/linalg.hpp"
#include "hermq/planegeom.hpp"

namespace hermq {

// Linear code over GF(q^2) given by a full-rank generator matrix whose
// columns are labeled by curve points in canonical order.
struct LinearCode {
  const Field* field = nullptr;
  Matrix gen;                     // k x n, rank k
  std::vector<std::size_t> labels;  // canonical point indices, size n

  std::size_t n() const { return gen.cols(); }
  std::size_t k() const { return gen.rows(); }
};

// Minimal dependent column set with its (unique up to scalar) dependency
// vector, normalized so the first nonzero coefficient is 1.
struct Circuit {
  std::vector<std::size_t> cols;   // sorted column indices
  std::vector<FieldElem> coeffs;   // same length as cols
};

struct DistanceResult {
  enum class Status { Exact, AboveWmax, BudgetExceeded };
  Status status = Status::Exact;
  long d_min = 0;            // exact value when status == Exact
  long proven_lower = 0;     // largest w with "no dependent set of size < w" proven
  std::optional<Circuit> witness;
  unsigned long long work = 0;
};

// Evaluates the rows of a function space (coefficients over `basis`) at the
// given points; dependent and zero rows are dropped so the rank is full.
inline LinearCode evaluate_space(const Curve& curve,
                                 const std::vector<MonomialExponent>& basis,
                                 const Matrix& coeffs,
                                 const std::vector<std::size_t>& point_indices) {
  if (point_indices.empty()) throw std::invalid_argument("empty point set");
  const Field* f = curve.field().get();
  // monomial value table: basis x points
  Matrix vals(f, basis.size(), point_indices.size());
  for (std::size_t b = 0; b < basis.size(); ++b)
    for (std::size_t c = 0; c < point_indices.size(); ++c) {
      const CurvePoint& P = curve.points()[point_indices[c]];
      if (P.at_infinity) throw std::invalid_argument("cannot evaluate at Pinf");
      vals.at(b, c) = f->pow(P.x, basis[b].i) * f->pow(P.y, basis[b].j);
    }
  Matrix rows = coeffs * vals;
  for (std::size_t r = 0; r < rows.rows(); ++r) {
    bool all_zero = true;
    for (std::size_t c = 0; c < rows.cols(); ++c)
      if (!rows.at(r, c).is_zero()) {
        all_zero = false;
        break;
      }
    if (all_zero && !coeffs.row(r).empty())
      throw std::domain_error("a section vanishes on every evaluation point");
  }
  LinearCode code;
  code.field = f;
  code.gen = independent_rows(rows);
  code.labels = point_indices;
  return code;
}

inline LinearCode dual(const LinearCode& code) {
  LinearCode d;
  d.field = code.field;
  d.gen = code.gen.kernel();
  d.labels = code.labels;
  return d;
}

namespace detail {

inline std::vector<FieldElem> column(const Matrix& g, std::size_t c) {
  std::vector<FieldElem> v(g.rows());
  for (std::size_t r = 0; r < g.rows(); ++r) v[r] = g.at(r, c);
  return v;
}

// Canonical representative of the 1-dim span: first nonzero entry scaled
// to 1; empty for the zero column. Key encodes the logs.
inline std::string span1_key(const Field* f, std::vector<FieldElem> v) {
  FieldElem lead = f->zero();
  for (const auto& e : v)
    if (!e.is_zero()) {
      lead = e;
      break;
    }
  if (lead.is_zero()) return "zero";
  FieldElem s = f->inv(lead);
  std::string key;
  for (auto& e : v) {
    e = e * s;
    key += std::to_string(e.log()) + ",";
  }
  return key;
}

// Canonical key of the 2-dim span of two independent columns: the RREF of
// the 2 x k matrix they span.
inline std::string span2_key(const Field* f, const std::vector<FieldElem>& a,
                             const std::vector<FieldElem>& b) {
  Matrix m(f, 0, a.size());
  m.append_row(a);
  m.append_row(b);
  m.rref();
  std::string key;
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      key += std::to_string(m.at(r, c).log()) + ",";
  return key;
}

// Dependency vector of a set of columns known to span a space of dimension
// |cols| - 1; throws if the kernel is not one-dimensional.
inline std::vector<FieldElem> dependency_vector(const LinearCode& code,
                                                const std::vector<std::size_t>& cols) {
  Matrix sub(code.field, code.k(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t r = 0; r < code.k(); ++r)
      sub.at(r, j) = code.gen.at(r, cols[j]);
  Matrix ker = sub.kernel();
  if (ker.rows() != 1)
    throw std::logic_error("dependency space is not one-dimensional");
  std::vector<FieldElem> v = ker.row(0);
  FieldElem lead = code.field->zero();
  for (const auto& e : v)
    if (!e.is_zero()) {
      lead = e;
      break;
    }
  FieldElem s = code.field->inv(lead);
  for (auto& e : v) e = e * s;
  return v;
}

// All dependent pairs (proportional or zero columns).
inline std::vector<Circuit> dependent_pairs(const LinearCode& code) {
  const Field* f = code.field;
  std::vector<Circuit> out;
  std::map<std::string, std::vector<std::size_t>> buckets;
  for (std::size_t c = 0; c < code.n(); ++c)
    buckets[span1_key(f, column(code.gen, c))].push_back(c);
  for (const auto& [key, cols] : buckets) {
    if (key == "zero") {
      // a zero column alone is a weight-1 dual word; surface it as a
      // degenerate circuit of size 1
      for (std::size_t c : cols)
        out.push_back(Circuit{{c}, {f->one()}});
      continue;
    }
    for (std::size_t i = 0; i < cols.size(); ++i)
      for (std::size_t j = i + 1; j < cols.size(); ++j)
        out.push_back(
            Circuit{{cols[i], cols[j]}, dependency_vector(code, {cols[i], cols[j]})});
  }
  std::sort(out.begin(), out.end(),
            [](const Circuit& a, const Circuit& b) { return a.cols < b.cols; });
  return out;
}

// All dependent triples among pairwise independent columns, via hashing of
// canonical 2-span representatives: O(n^2) pairs, each triple found once
// inside its unique 2-dimensional span.
inline std::vector<Circuit> dependent_triples(const LinearCode& code,
                                              unsigned long long* work = nullptr) {
  const Field* f = code.field;
  std::vector<std::vector<FieldElem>> cols;
  cols.reserve(code.n());
  for (std::size_t c = 0; c < code.n(); ++c) cols.push_back(column(code.gen, c));
  // collect, per 2-span, the set of member columns; with pairwise independent
  // columns every pair inside a span yields the same key, so inserting both
  // endpoints (deduplicated) recovers exactly the columns lying in that span
  std::unordered_map<std::string, std::vector<std::size_t>> buckets;
  for (std::size_t i = 0; i < code.n(); ++i)
    for (std::size_t j = i + 1; j < code.n(); ++j) {
      std::string key = span2_key(f, cols[i], cols[j]);
      auto& members = buckets[key];
      if (std::find(members.begin(), members.end(), i) == members.end())
        members.push_back(i);
      if (std::find(members.begin(), members.end(), j) == members.end())
        members.push_back(j);
      if (work) *work += code.k();
    }
  std::vector<Circuit> out;
  for (auto& [key, members] : buckets) {
    if (members.size() < 3) continue;
    std::sort(members.begin(), members.end());
    for (std::size_t a = 0; a < members.size(); ++a)
      for (std::size_t b = a + 1; b < members.size(); ++b)
        for (std::size_t c = b + 1; c < members.size(); ++c) {
          std::vector<std::size_t> t{members[a], members[b], members[c]};
          out.push_back(Circuit{t, dependency_vector(code, t)});
        }
  }
  std::sort(out.begin(), out.end(),
            [](const Circuit& a, const Circuit& b) { return a.cols < b.cols; });
  return out;
}

// DFS over sorted column subsets: enumerates dependent sets of size exactly w
// whose proper prefixes are independent, via incremental elimination.
// Returns false if the work budget runs out.
inline bool dfs_dependent_sets(const LinearCode& code, long w,
                               unsigned long long budget,
                               unsigned long long& work, bool collect_all,
                               std::vector<Circuit>& out) {
  const Field* f = code.field;
  std::size_t n = code.n(), k = code.k();
  std::vector<std::vector<FieldElem>> cols;
  cols.reserve(n);
  for (std::size_t c = 0; c < n; ++c) cols.push_back(detail::column(code.gen, c));

  // elimination state: reduced basis vectors with their pivot positions
  std::vector<std::vector<FieldElem>> basis;
  std::vector<std::size_t> pivots;
  std::vector<std::size_t> chosen;

  // reduce v against the current basis; returns true if it vanished
  auto reduce = [&](std::vector<FieldElem>& v) {
    for (std::size_t b = 0; b < basis.size(); ++b) {
      FieldElem c = v[pivots[b]];
      if (c.is_zero()) continue;
      for (std::size_t r = 0; r < k; ++r) v[r] = v[r] - c * basis[b][r];
    }
    for (std::size_t r = 0; r < k; ++r)
      if (!v[r].is_zero()) return false;
    return true;
  };

  bool ok = true;
  auto rec = [&](auto&& self, std::size_t start) -> bool {
    if (static_cast<long>(chosen.size()) == w - 1) {
      for (std::size_t c = start; c < n; ++c) {
        work += k;
        if (work > budget) {
          ok = false;
          return true;
        }
        std::vector<FieldElem> v = cols[c];
        if (reduce(v)) {
          chosen.push_back(c);
          out.push_back(Circuit{chosen, dependency_vector(code, chosen)});
          chosen.pop_back();
          if (!collect_all) return true;
        }
      }
      return false;
    }
    for (std::size_t c = start; c + (w - 1 - chosen.size()) <= n; ++c) {
      work += k * k;
      if (work > budget) {
        ok = false;
        return true;
      }
      std::vector<FieldElem> v = cols[c];
      if (reduce(v)) continue;  // dependent prefix would repeat a smaller set
      // normalize and install as a new basis vector
      std::size_t piv = 0;
      while (v[piv].is_zero()) ++piv;
      FieldElem s = f->inv(v[piv]);
      for (std::size_t r = 0; r < k; ++r) v[r] = v[r] * s;
      basis.push_back(v);
      pivots.push_back(piv);
      chosen.push_back(c);
      bool stop = self(self, c + 1);
      chosen.pop_back();
      basis.pop_back();
      pivots.pop_back();
      if (stop) return true;
    }
    return false;
  };
  rec(rec, 0);
  return ok;
}

}  // namespace detail

/*
 * Smallest size of a dependent column subset of the generator matrix, which
 * equals the minimum distance of the dual code. Sizes 2 and 3 use hashing
 * (O(n) and O(n^2 k)); larger sizes fall back to a budgeted DFS with rank
 * pruning in lexicographic column order.
 */
inline DistanceResult dual_min_distance(const LinearCode& code, long w_max,
                                        unsigned long long budget = 2'000'000'000ULL) {
  if (w_max < 2) throw std::invalid_argument("w_max must be >= 2");
  DistanceResult res;
  res.proven_lower = 1;
  {
    std::vector<Circuit> pairs = detail::dependent_pairs(code);
    if (!pairs.empty()) {
      res.d_min = static_cast<long>(pairs.front().cols.size());  // 1 or 2
      res.witness = pairs.front();
      return res;
    }
    res.proven_lower = 3;
    res.work += code.n() * code.k();
  }
  if (w_max >= 3) {
    std::vector<Circuit> triples = detail::dependent_triples(code, &res.work);
    if (!triples.empty()) {
      res.d_min = 3;
      res.witness = triples.front();
      return res;
    }
    res.proven_lower = 4;
  }
  for (long w = 4; w <= w_max; ++w) {
    std::vector<Circuit> found;
    bool within =
        detail::dfs_dependent_sets(code, w, budget, res.work, false, found);
    if (!found.empty()) {
      res.d_min = w;
      res.witness = found.front();
      return res;
    }
    if (!within) {
      res.status = DistanceResult::Status::BudgetExceeded;
      return res;
    }
    res.proven_lower = w + 1;
  }
  res.status = DistanceResult::Status::AboveWmax;
  return res;
}

// All circuits of size exactly w; intended for w equal to the dual minimum
// distance, where every dependent w-set is minimal and its dependency space
// is one-dimensional.
inline std::vector<Circuit> enumerate_circuits(const LinearCode& code, long w,
                                               unsigned long long budget = 2'000'000'000ULL) {
  if (w < 1) throw std::invalid_argument("w must be positive");
  if (w == 2) return detail::dependent_pairs(code);
  if (w == 3) return detail::dependent_triples(code);
  std::vector<Circuit> out;
  unsigned long long work = 0;
  if (!detail::dfs_dependent_sets(code, w, budget, work, true, out))
    throw std::domain_error("circuit enumeration exceeded the work budget");
  return out;
}

// Re-check that a circuit is dependent and minimally so.
inline bool verify_circuit(const LinearCode& code, const Circuit& circ) {
  Matrix sub(code.field, code.k(), circ.cols.size());
  for (std::size_t j = 0; j < circ.cols.size(); ++j)
    for (std::size_t r = 0; r < code.k(); ++r)
      sub.at(r, j) = code.gen.at(r, circ.cols[j]);
  if (sub.rank() != circ.cols.size() - 1) return false;
  for (std::size_t drop = 0; drop < circ.cols.size(); ++drop) {
    Matrix m(code.field, code.k(), circ.cols.size() - 1);
    std::size_t jj = 0;
    for (std::size_t j = 0; j < circ.cols.size(); ++j) {
      if (j == drop) continue;
      for (std::size_t r = 0; r < code.k(); ++r)
        m.at(r, jj) = code.gen.at(r, circ.cols[j]);
      ++jj;
    }
    if (m.rank() != circ.cols.size() - 1) return false;
  }
  // the dependency vector must actually annihilate the columns
  for (std::size_t r = 0; r < code.k(); ++r) {
    FieldElem s = code.field->zero();
    for (std::size_t j = 0; j < circ.cols.size(); ++j)
      s = s + circ.coeffs[j] * code.gen.at(r, circ.cols[j]);
    if (!s.is_zero()) return false;
  }
  return true;
}

enum class SupportGeometry { HorizontalLambda, HorizontalL0, OtherLine, NonCollinear };

// Classifies a support (set of affine point labels) by the line it spans.
inline SupportGeometry support_geometry(const Curve& curve,
                                        const std::vector<std::size_t>& labels) {
  const Field* f = curve.field().get();
  std::vector<CurvePoint> pts;
  for (std::size_t idx : labels) pts.push_back(curve.points()[idx]);
  // candidate line through the first two points
  if (pts.size() < 2) return SupportGeometry::OtherLine;
  FieldElem u = pts[0].y - pts[1].y;
  FieldElem v = pts[1].x - pts[0].x;
  FieldElem w = pts[0].x * pts[1].y - pts[1].x * pts[0].y;
  ProjLine L = make_line(f, u, v, w);
  for (const CurvePoint& P : pts)
    if (!L.contains_affine(P.x, P.y)) return SupportGeometry::NonCollinear;
  switch (L.cls) {
    case ProjLine::Class::Lambda:
      return SupportGeometry::HorizontalLambda;
    case ProjLine::Class::L0:
      return SupportGeometry::HorizontalL0;
    default:
      return SupportGeometry::OtherLine;
  }
}

struct MinWeightSummary {
  long d_min = 0;
  unsigned long long circuit_count = 0;
  unsigned long long codeword_count = 0;  // circuits * (|F| - 1)
  std::map<SupportGeometry, unsigned long long> geometry_histogram;
  std::vector<std::vector<std::size_t>> supports;  // column index sets
};

// Count and classify the minimum-weight codewords of the dual code; every
// circuit accounts for |F| - 1 scalar multiples of one codeword.
inline MinWeightSummary min_weight_codeword_count(const Curve& curve,
                                                  const LinearCode& code,
                                                  long d_min,
                                                  const std::vector<Circuit>& circuits) {
  MinWeightSummary s;
  s.d_min = d_min;
  s.circuit_count = circuits.size();
  s.codeword_count = circuits.size() *
                     static_cast<unsigned long long>(code.field->order() - 1);
  for (const Circuit& c : circuits) {
    std::vector<std::size_t> labels;
    for (std::size_t col : c.cols) labels.push_back(code.labels[col]);
    s.geometry_histogram[support_geometry(curve, labels)] += 1;
    s.supports.push_back(c.cols);
  }
  return s;
}

// Plain-text export: header "n k GF(p^e)" then k rows of element tokens.
inline std::string code_to_string(const LinearCode& code) {
  std::string out = std::to_string(code.n()) + " " + std::to_string(code.k()) +
                    " " + code.field->name() + "\n";
  for (std::size_t r = 0; r < code.k(); ++r) {
    for (std::size_t c = 0; c < code.n(); ++c) {
      if (c) out += " ";
      out += code.field->to_string(code.gen.at(r, c));
    }
    out += "\n";
  }
  return out;
}

}  // namespace hermq

#endif  // HERMQ_CODES_HPP
