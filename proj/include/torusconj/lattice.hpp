// Copyright 2026 The torusconj Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "torusconj/bigint.hpp"
#include "torusconj/int_matrix.hpp"
#include "torusconj/permutation.hpp"

namespace torusconj {

/// Integer row span of a matrix, stored by its Hermite basis. Two lattices
/// are equal exactly when their bases are identical.
class RowLattice {
 public:
  /// The zero lattice in Z^ambient_dim.
  explicit RowLattice(std::size_t ambient_dim);

  std::size_t ambient_dim() const noexcept { return basis_.cols(); }
  std::size_t rank() const noexcept { return basis_.rows(); }
  const IntMatrix& basis() const noexcept { return basis_; }

  friend bool operator==(const RowLattice&, const RowLattice&) = default;

 private:
  friend RowLattice lattice_of(const IntMatrix& a);
  explicit RowLattice(IntMatrix hermite_basis) : basis_(std::move(hermite_basis)) {}

  IntMatrix basis_;
};

RowLattice lattice_of(const IntMatrix& a);

/// Whether v is an integer combination of the basis rows.
bool contains(const RowLattice& lattice, std::span<const Integer> v);

/// Hermite-basis comparison. DimensionMismatch on differing ambient dims.
bool equal(const RowLattice& a, const RowLattice& b);

/// Image of the lattice under the coordinate projection onto `cols`, taken in
/// the given order.
RowLattice project(const RowLattice& lattice, std::span<const std::size_t> cols);

/// lattice_of(basis * m) for unimodular m. NotUnimodular / DimensionMismatch.
RowLattice transform(const RowLattice& lattice, const IntMatrix& m);

/// Maximal minors of a full-row-rank matrix with the data needed to run the
/// minor-based equality test against many partners.
class PlueckerData {
 public:
  explicit PlueckerData(const IntMatrix& a);

  const IntMatrix& matrix() const noexcept { return matrix_; }
  /// Minors in the order of index_tuples(cols, rows).
  const std::vector<Integer>& coordinates() const noexcept { return coords_; }

 private:
  friend bool pluecker_equal(const PlueckerData& a, const PlueckerData& b);

  IntMatrix matrix_;
  std::vector<std::vector<std::size_t>> tuples_;
  std::vector<Integer> coords_;
  std::size_t first_nonzero_ = 0;
  IntMatrix adjugate_;  // adjugate of the square block at first_nonzero_
};

/// Row-lattice equality decided from maximal minors: the minors agree up to
/// one global sign, and B_I * (A_I)^-1 is integral for the first tuple I with
/// a nonzero minor of A. Requires both matrices m x n of rank m
/// (RankDeficient / DimensionMismatch otherwise).
bool pluecker_equal(const IntMatrix& a, const IntMatrix& b);
bool pluecker_equal(const PlueckerData& a, const PlueckerData& b);

/// Lexicographically least column permutation sigma with
/// lattice(a) == lattice(b with column j replaced by column sigma[j]), if any.
///
/// Backtracking over sigma[0], sigma[1], ... pruned by per-column lattice
/// invariants and by comparing the projections onto the assigned prefix.
/// Worst case is n! leaves; intended for small ambient dimension. Top-level
/// branches are searched in parallel; the result does not depend on the
/// thread count.
std::optional<Permutation> permuted_equal(const IntMatrix& a, const IntMatrix& b);

namespace serial {
/// Single-threaded reference for permuted_equal.
std::optional<Permutation> permuted_equal(const IntMatrix& a, const IntMatrix& b);
}  // namespace serial

}  // namespace torusconj
