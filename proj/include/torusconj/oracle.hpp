// Copyright 2026 The torusconj Authors
// SPDX-License-Identifier: Apache-2.0

// Brute-force references used to certify the structural algorithms. They
// depend only on exact matrix primitives, never on the lattice, diag or
// action modules they are used to check.
//
// The enumeration kernels run under OpenMP; each has a single-threaded
// reference in torusconj::serial with identical results.

#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "torusconj/bigint.hpp"
#include "torusconj/int_matrix.hpp"
#include "torusconj/pattern.hpp"
#include "torusconj/permutation.hpp"

namespace torusconj {

/// Enumeration budget shared by the oracles; larger searches raise TooLarge.
inline constexpr std::uint64_t kMaxEnumeration = 10'000'000;

/// Number of t in (mu_m)^n (as exponent tuples mod m) with prod t_j^{a_ij} = 1
/// for every row of `rows`.
std::uint64_t torsion_count(const IntMatrix& rows, std::uint64_t modulus);

/// Twice the largest absolute entry of the Hermite bases of a and b (>= 1).
Integer default_lattice_bound(const IntMatrix& a, const IntMatrix& b);

/// Compares {v in R_a : |v|_inf <= bound} with the same set for b by walking
/// the box and testing membership through a Smith decomposition.
bool lattice_equal_bounded(const IntMatrix& a, const IntMatrix& b, const Integer& bound);

/// 3 * max |l_i| (>= 1).
Integer default_closedness_bound(const WeightVector& w);

/// A one-parameter subgroup d with |d|_inf <= bound, <d, l> = 0, d_j >= 0 off S
/// and d_j > 0 for some j off S. Returns the witness of least sup norm, ties
/// broken lexicographically.
std::optional<IntVector> closedness_search(const WeightVector& w, const ZeroPattern& s,
                                           const Integer& bound);

/// First (sigma, e), sigma in lexicographic order and e = +1 before -1, with
/// l1 = e * (l2 o sigma). TooLarge for n > 8.
std::optional<SignedPermutation> perm_sign_exhaust(std::span<const Integer> l1,
                                                   std::span<const Integer> l2);

namespace serial {
std::uint64_t torsion_count(const IntMatrix& rows, std::uint64_t modulus);
bool lattice_equal_bounded(const IntMatrix& a, const IntMatrix& b, const Integer& bound);
std::optional<IntVector> closedness_search(const WeightVector& w, const ZeroPattern& s,
                                           const Integer& bound);
}  // namespace serial

}  // namespace torusconj
