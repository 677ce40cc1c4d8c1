// Copyright 2026 The torusconj Authors
// SPDX-License-Identifier: Apache-2.0

#include "torusconj/bigint.hpp"

#include <cctype>

#include "torusconj/errors.hpp"

namespace torusconj {

std::string to_string(const Integer& value) { return value.get_str(10); }

Integer parse_integer(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  if (pos == text.size()) throw ParseError("expected an integer, got '" + std::string(text) + "'");
  for (std::size_t i = pos; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw ParseError("expected an integer, got '" + std::string(text) + "'");
    }
  }
  Integer value(std::string(text.substr(pos)), 10);
  return negative ? Integer(-value) : value;
}

IntVector make_vector(std::initializer_list<long> values) {
  IntVector out;
  out.reserve(values.size());
  for (long v : values) out.emplace_back(v);
  return out;
}

Integer gcd_of(std::span<const Integer> values) {
  Integer g = 0;
  for (const auto& v : values) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  return g;
}

bool is_zero(std::span<const Integer> values) {
  for (const auto& v : values) {
    if (sgn(v) != 0) return false;
  }
  return true;
}

IntVector negated(std::span<const Integer> values) {
  IntVector out;
  out.reserve(values.size());
  for (const auto& v : values) out.emplace_back(-v);
  return out;
}

bool lex_less(std::span<const Integer> a, std::span<const Integer> b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    const int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return a.size() < b.size();
}

Integer dot(std::span<const Integer> a, std::span<const Integer> b) {
  if (a.size() != b.size()) {
    fail(ErrorKind::kDimensionMismatch, "dot product of vectors of different lengths");
  }
  Integer acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

}  // namespace torusconj
