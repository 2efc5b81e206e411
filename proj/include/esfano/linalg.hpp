// Copyright 2026 The esfano Authors.
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

#pragma once

// Dense matrices over an exact field, with row reduction, rank, nullspace
// and inverse. No pivoting strategy is needed since nothing is rounded.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "esfano/errors.hpp"
#include "esfano/scalar.hpp"

namespace esfano {

template <ExactField F>
class Matrix {
 public:
  using Field = F;
  using Scalar = typename F::value_type;

  Matrix(F field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

  Matrix(F field, const std::vector<std::vector<Scalar>>& rows)
      : field_(field), rows_(rows.size()), cols_(rows.empty() ? 0 : rows.front().size()) {
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw DimensionMismatch("ragged matrix rows");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix from_ints(F field, const std::vector<std::vector<std::int64_t>>& rows) {
    std::vector<std::vector<Scalar>> converted;
    for (const auto& r : rows) {
      auto& out = converted.emplace_back();
      for (auto v : r) out.push_back(field.from_int(v));
    }
    return Matrix(field, converted);
  }

  static Matrix identity(F field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
  }

  const F& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<Scalar> row(std::size_t i) const {
    return {data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_};
  }

  std::vector<Scalar> column(std::size_t j) const {
    std::vector<Scalar> c;
    c.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c.push_back((*this)(i, j));
    return c;
  }

  bool column_is_zero(std::size_t j) const {
    for (std::size_t i = 0; i < rows_; ++i)
      if (!is_zero((*this)(i, j))) return false;
    return true;
  }

  std::vector<std::vector<Scalar>> to_rows() const {
    std::vector<std::vector<Scalar>> out;
    for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
    return out;
  }

  Matrix transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix select_columns(const std::vector<std::size_t>& cols) const {
    Matrix out(field_, rows_, cols.size());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols.size(); ++k) out(i, k) = (*this)(i, cols[k]);
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (!(a.field_ == b.field_)) throw FieldMismatch("matrix product over different fields");
    if (a.cols_ != b.rows_)
      throw DimensionMismatch("matrix product " + a.shape() + " * " + b.shape());
    Matrix c(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Scalar& aik = a(i, k);
        if (is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) = c(i, j) + aik * b(k, j);
      }
    return c;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  // Lexicographic on (shape, entries); only meaningful within one field.
  friend bool operator<(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
    if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
    return a.data_ < b.data_;
  }

  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

 private:
  F field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

template <ExactField F>
struct RowEchelon {
  Matrix<F> reduced;
  std::vector<std::size_t> pivots;
};

// Reduced row echelon form: pivots are 1 and the only nonzero entry in
// their column; zero rows sink to the bottom.
template <ExactField F>
RowEchelon<F> rref(Matrix<F> a) {
  using Scalar = typename F::value_type;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && is_zero(a(p, c))) ++p;
    if (p == a.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    const Scalar inv = inverse(a(r, c));
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) = a(r, j) * inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || is_zero(a(i, c))) continue;
      const Scalar factor = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) = a(i, j) - factor * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(a), std::move(pivots)};
}

template <ExactField F>
std::size_t rank(const Matrix<F>& a) {
  return rref(a).pivots.size();
}

// Basis of {x : a x = 0}, one vector per free column, with a 1 in that column.
template <ExactField F>
std::vector<std::vector<typename F::value_type>> nullspace(const Matrix<F>& a) {
  using Scalar = typename F::value_type;
  const auto [reduced, pivots] = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(a.cols(), a.field().zero());
    v[free] = a.field().one();
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -reduced(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <ExactField F>
std::optional<Matrix<F>> try_inverse(const Matrix<F>& a) {
  if (a.rows() != a.cols()) throw DimensionMismatch("inverse of non-square " + a.shape());
  const std::size_t n = a.rows();
  Matrix<F> augmented(a.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) augmented(i, j) = a(i, j);
    augmented(i, n + i) = a.field().one();
  }
  auto [reduced, pivots] = rref(std::move(augmented));
  if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) return std::nullopt;
  Matrix<F> inv(a.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = reduced(i, n + j);
  return inv;
}

template <ExactField F>
Matrix<F> inverse(const Matrix<F>& a) {
  auto inv = try_inverse(a);
  if (!inv) throw RankDeficient("matrix " + a.shape() + " is singular");
  return *std::move(inv);
}

}  // namespace esfano
