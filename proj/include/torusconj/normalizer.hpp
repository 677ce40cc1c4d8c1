// Copyright 2026 The torusconj Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "torusconj/bigint.hpp"
#include "torusconj/permutation.hpp"

namespace torusconj {

enum class CaseTag {
  kFullTorus,            // l = 0
  kAxis,                 // l = +-e_i
  kSameSignAllNonzero,   // all l_i nonzero, one sign
  kNoUnitWeights,        // no l_i equals +-1
  kZeroAndUnitSameSign,  // contains 0 and +-1, >= 2 nonzero, nonzero ones of one sign
  kMixedSigns,           // residual: both signs occur
};

std::string_view to_string(CaseTag tag);

struct NormalizerCase {
  CaseTag tag = CaseTag::kFullTorus;
  std::optional<std::size_t> axis;  // 0-based, only for kAxis

  friend bool operator==(const NormalizerCase&, const NormalizerCase&) = default;
};

/// {(sigma, e) in S_n x {+1,-1} : l o sigma = e l}, by generators and order.
struct PermGroupPart {
  std::vector<SignedPermutation> generators;
  Integer order;
};

/// Elements of the normalizer for l = e_i: g_j = t_j x_sigma(j) (j != i, sigma
/// a permutation of the other coordinates) and g_i = t_i x_i + s.
struct AxisElementShape {
  std::size_t axis = 0;
  std::vector<std::size_t> permuted_coordinates;
};

struct NormalizerReport {
  NormalizerCase normalizer_case;
  /// The full normalizer lies in N_GL(D_n).
  bool contained_in_monomial = false;
  /// The normalizer is an algebraic subgroup (holds for every l).
  bool algebraic = true;
  /// Whether explicit_structure / the monomial part describe the whole group.
  bool explicit_form_known = false;
  PermGroupPart perm_part;
  std::vector<Permutation> centralizer_perm_part;
  std::optional<std::string> explicit_structure;
  std::optional<AxisElementShape> axis_shape;
};

/// First matching tag in the order FullTorus, Axis, SameSignAllNonzero,
/// NoUnitWeights, ZeroAndUnitSameSign, MixedSigns.
NormalizerCase classify_case(std::span<const Integer> l);

PermGroupPart monomial_normalizer(std::span<const Integer> l);

/// {sigma : e_i - e_sigma(i) in Z l for all i}, in lexicographic order.
std::vector<Permutation> monomial_centralizer(std::span<const Integer> l);

NormalizerReport normalizer_report(std::span<const Integer> l);

/// All elements of the subgroup of S_n x {+1,-1} generated by `generators`,
/// sorted. Exponential in n; meant for verification at small n.
std::vector<SignedPermutation> expand_group(std::span<const SignedPermutation> generators,
                                            std::size_t n);

}  // namespace torusconj
