// Copyright 2026 The torusconj Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "torusconj/bigint.hpp"

namespace torusconj {

/// Character exponents l of G = D_n(l_1, ..., l_n) acting on A^n.
struct WeightVector {
  IntVector l;

  std::size_t n() const noexcept { return l.size(); }
  bool is_zero() const { return torusconj::is_zero(l); }
};

/// Coordinates that vanish at a point; the other coordinates are generic
/// nonzero. Orbit data of a diagonal action depend only on this set.
class ZeroPattern {
 public:
  explicit ZeroPattern(std::size_t n) : zero_(n, false) {}
  static ZeroPattern from_indices(std::size_t n, std::span<const std::size_t> indices);
  static ZeroPattern from_indices(std::size_t n, std::initializer_list<std::size_t> indices);
  static ZeroPattern all(std::size_t n);
  /// Pattern whose i-th bit of `mask` marks coordinate i.
  static ZeroPattern from_mask(std::size_t n, unsigned long mask);

  std::size_t n() const noexcept { return zero_.size(); }
  bool contains(std::size_t i) const { return zero_.at(i); }
  void insert(std::size_t i) { zero_.at(i) = true; }
  std::size_t size() const;
  std::vector<std::size_t> indices() const;
  std::vector<std::size_t> complement() const;

  friend bool operator==(const ZeroPattern&, const ZeroPattern&) = default;

 private:
  std::vector<bool> zero_;
};

}  // namespace torusconj
