// Copyright 2026 The torusconj Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace torusconj {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

std::string to_string(const Integer& value);

/// Parses an optionally signed decimal integer. Throws ParseError.
Integer parse_integer(std::string_view text);

IntVector make_vector(std::initializer_list<long> values);

/// Non-negative gcd of all entries; 0 for an empty or all-zero range.
Integer gcd_of(std::span<const Integer> values);

bool is_zero(std::span<const Integer> values);

IntVector negated(std::span<const Integer> values);

/// Standard first-differing-coordinate comparison; shorter prefix is smaller.
bool lex_less(std::span<const Integer> a, std::span<const Integer> b);

/// Dot product; lengths must agree (DimensionMismatch otherwise).
Integer dot(std::span<const Integer> a, std::span<const Integer> b);

inline int cmpabs(const Integer& a, const Integer& b) {
  return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t());
}
inline int cmpabs(const Integer& a, unsigned long b) { return mpz_cmpabs_ui(a.get_mpz_t(), b); }

}  // namespace torusconj
