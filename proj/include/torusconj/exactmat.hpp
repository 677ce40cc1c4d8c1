// Copyright 2026 The torusconj Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "torusconj/bigint.hpp"
#include "torusconj/int_matrix.hpp"

namespace torusconj {

/// S = U * A * V with U, V unimodular and S in Smith normal form.
struct SmithDecomposition {
  IntMatrix u;  // m x m
  IntMatrix s;  // m x n, nonzero only at (i, i) for i < rank
  IntMatrix v;  // n x n
  /// Positive diagonal entries s_00 | s_11 | ... in order (units included).
  std::vector<Integer> factors;

  std::size_t rank() const noexcept { return factors.size(); }
};

/// Deterministic elimination with smallest-magnitude pivoting. Never fails;
/// the zero matrix yields U = I, V = I and no factors.
SmithDecomposition smith_normal_form(const IntMatrix& a);

/// Row-style Hermite normal form of the row lattice of `a`: zero rows removed,
/// positive pivots moving strictly right going down, entries above each pivot
/// reduced into [0, pivot).
IntMatrix hermite_normal_form(const IntMatrix& a);

struct HermiteDecomposition {
  IntMatrix h;          // rank x n, as returned by hermite_normal_form
  IntMatrix transform;  // m x m unimodular; its first `rank` rows times a give h
};

HermiteDecomposition hermite_with_transform(const IntMatrix& a);

std::size_t rank(const IntMatrix& a);

/// Fraction-free (Bareiss) determinant of a square matrix.
Integer determinant(const IntMatrix& a);

bool is_unimodular(const IntMatrix& m);

/// Inverse of a unimodular matrix; NotUnimodular otherwise.
IntMatrix inverse_unimodular(const IntMatrix& m);

/// Column index tuple (0-based, strictly increasing) -> maximal minor.
using PlueckerMap = std::map<std::vector<std::size_t>, Integer>;

/// All maximal minors of a full-row-rank matrix. RankDeficient if rank < rows.
PlueckerMap pluecker_coordinates(const IntMatrix& a);

/// Lexicographic enumeration of all k-subsets of {0, ..., n-1}.
std::vector<std::vector<std::size_t>> index_tuples(std::size_t n, std::size_t k);

}  // namespace torusconj
