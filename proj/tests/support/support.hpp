// Copyright 2026 The torusconj Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <functional>
#include <random>
#include <span>
#include <vector>

#include "torusconj/bigint.hpp"
#include "torusconj/int_matrix.hpp"
#include "torusconj/permutation.hpp"

namespace torusconj::testing {

using Rng = std::mt19937_64;

long uniform(Rng& rng, long lo, long hi);
IntVector random_vector(Rng& rng, std::size_t n, long bound);
IntMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long bound);
/// Product of `steps` random elementary operations on the identity.
IntMatrix random_unimodular(Rng& rng, std::size_t n, std::size_t steps);
Permutation random_permutation(Rng& rng, std::size_t n);

/// Cofactor-expansion determinant, independent of the library's elimination.
Integer leibniz_determinant(const IntMatrix& square);
/// f_k = gcd of all k x k minors, k = 1 .. min(m, n); stops at the first zero.
std::vector<Integer> determinantal_divisors(const IntMatrix& a);
/// f_k / f_{k-1}, with units kept.
std::vector<Integer> invariant_factors_from_minors(const IntMatrix& a);

/// Row-span membership through a fresh Smith decomposition (no lattice module).
bool in_row_span(const IntMatrix& a, std::span<const Integer> v);

/// Every vector of [lo, hi]^n in lexicographic order.
void for_each_box_vector(std::size_t n, long lo, long hi,
                         const std::function<void(const IntVector&)>& visit);

/// Every m x n matrix with entries in [lo, hi].
void for_each_box_matrix(std::size_t m, std::size_t n, long lo, long hi,
                         const std::function<void(const IntMatrix&)>& visit);

IntVector unit_vector(std::size_t n, std::size_t i);

}  // namespace torusconj::testing
