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

#ifndef HERMQ_LINALG_HPP
#define HERMQ_LINALG_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "hermq/gf.hpp"

namespace hermq {

// Dense matrix over a finite field. Elimination is exact and deterministic:
// pivots are chosen left to right, ties broken by lowest row index.
class Matrix {
 public:
  Matrix() : field_(nullptr), rows_(0), cols_(0) {}
  Matrix(const Field* field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols),
        data_(rows * cols, FieldElem(field, FieldElem::kZeroLog)) {}

  const Field* field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  FieldElem& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const FieldElem& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void append_row(const std::vector<FieldElem>& row) {
    if (row.size() != cols_) throw std::invalid_argument("row size mismatch");
    data_.insert(data_.end(), row.begin(), row.end());
    ++rows_;
  }

  std::vector<FieldElem> row(std::size_t r) const {
    return std::vector<FieldElem>(data_.begin() + r * cols_,
                                  data_.begin() + (r + 1) * cols_);
  }

  // In-place reduced row echelon form; returns pivot column indices.
  std::vector<std::size_t> rref() {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
      std::size_t pr = r;
      while (pr < rows_ && at(pr, c).is_zero()) ++pr;
      if (pr == rows_) continue;
      if (pr != r)
        for (std::size_t j = 0; j < cols_; ++j) std::swap(at(r, j), at(pr, j));
      FieldElem piv_inv = field_->inv(at(r, c));
      for (std::size_t j = c; j < cols_; ++j) at(r, j) = at(r, j) * piv_inv;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i == r || at(i, c).is_zero()) continue;
        FieldElem factor = at(i, c);
        for (std::size_t j = c; j < cols_; ++j)
          at(i, j) = at(i, j) - factor * at(r, j);
      }
      pivots.push_back(c);
      ++r;
    }
    return pivots;
  }

  std::size_t rank() const {
    Matrix m = *this;
    return m.rref().size();
  }

  // Basis of {v : M v = 0}, rows of the result, normalized so that the free
  // coordinate of each basis vector is 1. Deterministic given column order.
  Matrix kernel() const {
    Matrix m = *this;
    std::vector<std::size_t> pivots = m.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    Matrix ker(field_, 0, cols_);
    for (std::size_t c = 0; c < cols_; ++c) {
      if (is_pivot[c]) continue;
      std::vector<FieldElem> v(cols_, field_->zero());
      v[c] = field_->one();
      for (std::size_t i = 0; i < pivots.size(); ++i)
        v[pivots[i]] = -m.at(i, c);
      ker.append_row(v);
    }
    return ker;
  }

  Matrix transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("dimension mismatch");
    Matrix r(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        FieldElem a = at(i, k);
        if (a.is_zero()) continue;
        for (std::size_t j = 0; j < o.cols_; ++j)
          r.at(i, j) = r.at(i, j) + a * o.at(k, j);
      }
    return r;
  }

  bool is_zero() const {
    for (const auto& e : data_)
      if (!e.is_zero()) return false;
    return true;
  }

  bool operator==(const Matrix& o) const {
    return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

 private:
  const Field* field_;
  std::size_t rows_, cols_;
  std::vector<FieldElem> data_;
};

// True iff every row of b lies in the row space of a.
inline bool row_space_contains(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("length mismatch");
  Matrix stacked = a;
  for (std::size_t i = 0; i < b.rows(); ++i) stacked.append_row(b.row(i));
  return stacked.rank() == a.rank();
}

inline bool row_spaces_equal(const Matrix& a, const Matrix& b) {
  return row_space_contains(a, b) && row_space_contains(b, a);
}

// Drops zero rows and rows dependent on earlier ones, keeping the original
// row vectors of a greedily chosen maximal independent subset.
inline Matrix independent_rows(const Matrix& m) {
  Matrix basis(m.field(), 0, m.cols());
  Matrix echelon(m.field(), 0, m.cols());
  std::size_t rank = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    echelon.append_row(m.row(i));
    if (echelon.rank() > rank) {
      basis.append_row(m.row(i));
      ++rank;
    } else {
      echelon = basis;
    }
  }
  return basis;
}

}  // namespace hermq

#endif  // HERMQ_LINALG_HPP
