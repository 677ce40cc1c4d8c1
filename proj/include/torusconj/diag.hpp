// Copyright 2026 The torusconj Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "torusconj/bigint.hpp"
#include "torusconj/int_matrix.hpp"
#include "torusconj/lattice.hpp"
#include "torusconj/permutation.hpp"

namespace torusconj {

/// The joint kernel in the diagonal torus D_n of the characters given by the
/// rows of a defining matrix. Identified by its row lattice, so structural
/// equality is subgroup equality.
class DiagSubgroup {
 public:
  static DiagSubgroup from_matrix(const IntMatrix& defining);
  /// D_n(l) = ker of the single character with exponent vector l.
  static DiagSubgroup from_weights(std::span<const Integer> weights);
  static DiagSubgroup full_torus(std::size_t n);

  std::size_t ambient_dim() const noexcept { return lattice_.ambient_dim(); }
  const RowLattice& lattice() const noexcept { return lattice_; }

  friend bool operator==(const DiagSubgroup&, const DiagSubgroup&) = default;

 private:
  explicit DiagSubgroup(RowLattice lattice) : lattice_(std::move(lattice)) {}
  RowLattice lattice_;
};

/// mu_{d_1} x ... x mu_{d_s} x G_m^torus_rank with 2 <= d_1 | d_2 | ... | d_s.
struct IsoType {
  std::size_t torus_rank = 0;
  std::vector<Integer> factors;

  friend bool operator==(const IsoType&, const IsoType&) = default;
};

/// Representative ker eps_{r+1}^{d_1} ∩ ... ∩ ker eps_{r+s}^{d_s} ∩ ker eps_{r+s+1} ∩ ... ∩ ker eps_n.
struct CanonicalCrn {
  std::size_t r = 0;
  std::vector<Integer> factors;
  IntMatrix canonical_matrix;

  friend bool operator==(const CanonicalCrn&, const CanonicalCrn&) = default;
};

std::size_t dimension(const DiagSubgroup& g);
IsoType iso_type(const DiagSubgroup& g);

/// Column permutation conjugating g1 to g2 inside GL_n; the same permutation
/// conjugates them inside the monomial group.
std::optional<Permutation> conjugate_in_gl(const DiagSubgroup& g1, const DiagSubgroup& g2);

/// Cremona conjugacy: equal isomorphism types.
bool conjugate_in_crn(const DiagSubgroup& g1, const DiagSubgroup& g2);

/// Unimodular exponent matrix M of a monomial birational map with
/// transform(g1.lattice(), M^-1) == g2.lattice(), or nullopt when the
/// subgroups are not Cremona-conjugate.
std::optional<IntMatrix> crn_conjugator(const DiagSubgroup& g1, const DiagSubgroup& g2);

CanonicalCrn crn_canonical(const DiagSubgroup& g);

/// Membership in L_n: weakly increasing and lexicographically <= its negated
/// reversal.
bool in_canonical_domain(std::span<const Integer> l);

/// Representative in L_n of the orbit of l under coordinate permutations and
/// global sign. ZeroVector if l = 0.
IntVector codim1_canonical(std::span<const Integer> l);

/// Signed permutation (sigma, e) with l1 = e * (l2 o sigma), lexicographically
/// least sigma; this is Aut A^n-conjugacy of D_n(l1) and D_n(l2).
/// ZeroVector / DimensionMismatch.
std::optional<SignedPermutation> conjugate_in_autn_codim1(std::span<const Integer> l1,
                                                          std::span<const Integer> l2);

/// Cremona representative ker eps_n^d of D_n(l): the vector (0, ..., 0, gcd(l)).
IntVector crn_codim1_canonical(std::span<const Integer> l);

/// Equality of the one-dimensional tori t -> (t^l_1, ..., t^l_n).
/// NotPrimitive unless both vectors are nonzero with gcd 1.
bool torus_equal_1dim(std::span<const Integer> l1, std::span<const Integer> l2);

/// Canonical torus T(l) in Aut A^3. DimensionMismatch / ZeroVector / NotPrimitive.
IntVector aut3_torus_canonical(std::span<const Integer> l);

}  // namespace torusconj
