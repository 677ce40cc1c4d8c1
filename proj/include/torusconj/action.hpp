// Copyright 2026 The torusconj Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "torusconj/bigint.hpp"
#include "torusconj/diag.hpp"
#include "torusconj/pattern.hpp"

namespace torusconj {

struct OrbitReport {
  IsoType stabilizer;
  std::size_t stabilizer_dim = 0;
  /// Present iff the stabilizer is finite.
  std::optional<Integer> stabilizer_order;
  std::size_t orbit_dim = 0;
  bool closed = false;
  bool origin_in_closure = false;
};

struct ActionReport {
  std::size_t group_dim = 0;
  bool stable = false;
  bool has_nonconstant_invariants = false;
  std::optional<IntVector> invariant_monomial;
  /// Axes i (0-based) whose punctured hyperplane pattern {i} is a nonclosed
  /// orbit of dimension n - 1.
  std::vector<std::size_t> nonclosed_codim1_orbit_axes;
};

/// dim G = n - 1 for l != 0, n for l = 0.
std::size_t group_dimension(const WeightVector& w);

/// Stabilizer of a point with zero set S: the subgroup D_|S|(l restricted to S).
IsoType stabilizer(const WeightVector& w, const ZeroPattern& s);

/// The orbit is nonclosed iff some one-parameter subgroup d of G has d_j >= 0
/// off S, d_j > 0 somewhere off S. Closed form: the point is the origin, or
/// l vanishes on S and is nonzero of one sign off S.
bool is_orbit_closed(const WeightVector& w, const ZeroPattern& s);

/// Whether some one-parameter subgroup of G drives the point to the origin.
bool origin_in_closure(const WeightVector& w, const ZeroPattern& s);

OrbitReport orbit_report(const WeightVector& w, const ZeroPattern& s);

/// All l_i nonzero and of one sign.
bool is_stable(const WeightVector& w);

/// Nonnegative exponent m in Z*l with m != 0 (so x^m is G-invariant), taken as
/// +l or -l; nullopt if l = 0 or l has mixed signs.
std::optional<IntVector> invariant_monomial(const WeightVector& w);

/// Zero pattern of lim_{t->0} t^d . a for a point a with zero set S, if the
/// limit exists. NotInGroup unless <d, l> = 0.
std::optional<ZeroPattern> limit_pattern(const WeightVector& w, const ZeroPattern& s,
                                         std::span<const Integer> d);

ActionReport action_report(const WeightVector& w);

}  // namespace torusconj
