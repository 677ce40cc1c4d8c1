// Copyright 2026 The torusconj Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "torusconj/bigint.hpp"

namespace torusconj {

/// Dense row-major matrix of arbitrary-precision integers.
///
/// A matrix may have zero rows. Every nonempty matrix has at least one
/// column; the only column-free shape is 0 x 0 (e.g. the identity of order 0).
class IntMatrix {
 public:
  IntMatrix() : IntMatrix(0, 1) {}
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);
  static IntMatrix identity(std::size_t n);
  static IntMatrix row_vector(std::span<const Integer> row);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::span<Integer> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const Integer> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }
  IntVector row_copy(std::size_t i) const;
  std::vector<IntVector> to_rows() const;

  void append_row(std::span<const Integer> row);
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  /// col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);

  /// Columns selected in the given order.
  IntMatrix select_cols(std::span<const std::size_t> cols) const;
  /// Copy with trailing zero rows appended up to `rows` rows.
  IntMatrix padded_to(std::size_t rows) const;

  bool is_zero() const;
  Integer max_abs_entry() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Integer> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntVector operator*(std::span<const Integer> v, const IntMatrix& m);

/// Multi-line text, one row per line, entries separated by single spaces.
std::string to_text(const IntMatrix& m);

}  // namespace torusconj
