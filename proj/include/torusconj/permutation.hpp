// Copyright 2026 The torusconj Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "torusconj/bigint.hpp"

namespace torusconj {

/// One-line notation, 0-based: perm[j] is the image of j.
using Permutation = std::vector<std::size_t>;

/// A permutation paired with a global sign, an element of S_n x {+1, -1}.
struct SignedPermutation {
  Permutation perm;
  int sign = 1;

  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
  friend auto operator<=>(const SignedPermutation&, const SignedPermutation&) = default;
};

Permutation identity_permutation(std::size_t n);
bool is_permutation(std::span<const std::size_t> p);
/// (a * b)[j] = a[b[j]]
Permutation compose(std::span<const std::size_t> a, std::span<const std::size_t> b);
Permutation inverse(std::span<const std::size_t> p);
SignedPermutation compose(const SignedPermutation& a, const SignedPermutation& b);

/// (v o p)[j] = v[p[j]]: the vector with coordinates pulled back along p.
IntVector pull_back(std::span<const Integer> v, std::span<const std::size_t> p);

/// Disjoint-cycle notation with 1-based points, e.g. "(1 3)"; "()" for identity.
std::string cycle_string(std::span<const std::size_t> p);

}  // namespace torusconj
