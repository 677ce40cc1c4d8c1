// Copyright 2026 The torusconj Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "torusconj/bigint.hpp"

namespace torusconj {

/// The derivation x^l d/dx_i with l >= 0 and l_i = 0, normalized to
/// coefficient 1.
struct RootVector {
  std::size_t i = 0;  // 0-based
  IntVector l;

  friend bool operator==(const RootVector&, const RootVector&) = default;
  friend auto operator<=>(const RootVector&, const RootVector&) = default;
};

/// Torus the roots are taken against: D_n, or its determinant-one subtorus
/// D_n^*, whose characters are exponent vectors modulo Z(1, ..., 1).
enum class RootGroup { kDiagonal, kSpecial };

struct Root {
  IntVector exponents;
  RootGroup relative_to = RootGroup::kDiagonal;

  friend bool operator==(const Root&, const Root&) = default;
};

struct DerivationTerm {
  Integer coefficient;
  IntVector exponent;

  friend bool operator==(const DerivationTerm&, const DerivationTerm&) = default;
};

/// Validates the invariants; InvalidArgument / DimensionMismatch otherwise.
RootVector make_root_vector(std::size_t i, IntVector l);

/// All root vectors of A^n with total degree sum(l) <= max_degree, ordered
/// lexicographically by (i, l).
std::vector<RootVector> enumerate_root_vectors(std::size_t n, std::size_t max_degree);

/// n * C(max_degree + n - 1, n - 1).
Integer root_vector_count(std::size_t n, std::size_t max_degree);

/// Exponents l - e_i; for D_n^* shifted so the minimum entry is 0.
Root root_of(const RootVector& rv, RootGroup relative_to);

/// D(x^m) = m_i x^(m + l - e_i); nullopt when m_i = 0. NegativeExponent if
/// some m_j < 0.
std::optional<DerivationTerm> apply_derivation(const RootVector& rv,
                                               std::span<const Integer> m);

/// (sigma(i), l o sigma^-1).
RootVector weyl_action(std::span<const std::size_t> sigma, const RootVector& rv);

}  // namespace torusconj
