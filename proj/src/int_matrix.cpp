// Copyright 2026 The torusconj Authors
// SPDX-License-Identifier: Apache-2.0

#include "torusconj/int_matrix.hpp"

#include <sstream>

#include "torusconj/errors.hpp"

namespace torusconj {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {
  if (cols == 0 && rows != 0) fail(ErrorKind::kInvalidArgument, "matrix must have at least one column");
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 1 : rows.begin()->size()) {
  if (cols_ == 0) fail(ErrorKind::kInvalidArgument, "matrix must have at least one column");
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) fail(ErrorKind::kDimensionMismatch, "ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
  IntMatrix m(0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::row_vector(std::span<const Integer> row) {
  IntMatrix m(0, row.size());
  m.append_row(row);
  return m;
}

IntVector IntMatrix::row_copy(std::size_t i) const {
  auto r = row(i);
  return {r.begin(), r.end()};
}

std::vector<IntVector> IntMatrix::to_rows() const {
  std::vector<IntVector> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row_copy(i));
  return out;
}

void IntMatrix::append_row(std::span<const Integer> row) {
  if (row.size() != cols_) fail(ErrorKind::kDimensionMismatch, "row length differs from column count");
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
  if (sgn(factor) == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) {
    mpz_addmul((*this)(dst, j).get_mpz_t(), factor.get_mpz_t(), (*this)(src, j).get_mpz_t());
  }
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
  if (sgn(factor) == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) {
    mpz_addmul((*this)(i, dst).get_mpz_t(), factor.get_mpz_t(), (*this)(i, src).get_mpz_t());
  }
}

void IntMatrix::negate_row(std::size_t i) {
  for (auto& v : row(i)) v = -v;
}

void IntMatrix::negate_col(std::size_t j) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = -(*this)(i, j);
}

IntMatrix IntMatrix::select_cols(std::span<const std::size_t> cols) const {
  IntMatrix out(rows_, cols.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols.size(); ++k) out(i, k) = (*this)(i, cols[k]);
  return out;
}

IntMatrix IntMatrix::padded_to(std::size_t rows) const {
  IntMatrix out = *this;
  while (out.rows_ < rows) {
    out.data_.resize(out.data_.size() + cols_);
    ++out.rows_;
  }
  return out;
}

bool IntMatrix::is_zero() const { return torusconj::is_zero(data_); }

Integer IntMatrix::max_abs_entry() const {
  Integer best = 0;
  for (const auto& v : data_) {
    if (cmpabs(v, best) > 0) best = abs(v);
  }
  return best;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) fail(ErrorKind::kDimensionMismatch, "matrix product shape mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Integer& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        mpz_addmul(c(i, j).get_mpz_t(), aik.get_mpz_t(), b(k, j).get_mpz_t());
      }
    }
  }
  return c;
}

IntVector operator*(std::span<const Integer> v, const IntMatrix& m) {
  if (v.size() != m.rows()) fail(ErrorKind::kDimensionMismatch, "vector-matrix product shape mismatch");
  IntVector out(m.cols());
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (sgn(v[k]) == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      mpz_addmul(out[j].get_mpz_t(), v[k].get_mpz_t(), m(k, j).get_mpz_t());
    }
  }
  return out;
}

std::string to_text(const IntMatrix& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ' ';
      os << m(i, j).get_str();
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace torusconj
