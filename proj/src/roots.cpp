// Copyright 2026 The torusconj Authors
// SPDX-License-Identifier: Apache-2.0

#include "torusconj/roots.hpp"

#include <algorithm>

#include "torusconj/errors.hpp"
#include "torusconj/permutation.hpp"

namespace torusconj {

RootVector make_root_vector(std::size_t i, IntVector l) {
  if (i >= l.size()) fail(ErrorKind::kDimensionMismatch, "root vector index outside 1..n");
  if (sgn(l[i]) != 0) fail(ErrorKind::kInvalidArgument, "root vector needs l_i = 0");
  for (const auto& v : l)
    if (sgn(v) < 0) fail(ErrorKind::kInvalidArgument, "root vector exponents must be nonnegative");
  return {i, std::move(l)};
}

std::vector<RootVector> enumerate_root_vectors(std::size_t n, std::size_t max_degree) {
  if (n == 0) fail(ErrorKind::kInvalidArgument, "dimension must be at least 1");
  std::vector<RootVector> out;
  IntVector l(n);
  for (std::size_t i = 0; i < n; ++i) {
    // Exponent vectors with l_i = 0 and sum <= max_degree, in lexicographic
    // order: fill coordinates left to right with ascending values.
    auto fill = [&](auto&& self, std::size_t k, std::size_t budget) -> void {
      if (k == n) {
        out.push_back({i, l});
        return;
      }
      if (k == i) {
        l[k] = 0;
        self(self, k + 1, budget);
        return;
      }
      for (std::size_t v = 0; v <= budget; ++v) {
        l[k] = static_cast<unsigned long>(v);
        self(self, k + 1, budget - v);
      }
      l[k] = 0;
    };
    fill(fill, 0, max_degree);
  }
  return out;
}

Integer root_vector_count(std::size_t n, std::size_t max_degree) {
  if (n == 0) return 0;
  Integer c;
  mpz_bin_uiui(c.get_mpz_t(), max_degree + n - 1, n - 1);
  return c * static_cast<unsigned long>(n);
}

Root root_of(const RootVector& rv, RootGroup relative_to) {
  Root r{rv.l, relative_to};
  r.exponents.at(rv.i) -= 1;
  if (relative_to == RootGroup::kSpecial) {
    const Integer lowest = *std::min_element(r.exponents.begin(), r.exponents.end());
    for (auto& v : r.exponents) v -= lowest;
  }
  return r;
}

std::optional<DerivationTerm> apply_derivation(const RootVector& rv, std::span<const Integer> m) {
  if (m.size() != rv.l.size()) fail(ErrorKind::kDimensionMismatch, "monomial has wrong number of exponents");
  for (const auto& v : m)
    if (sgn(v) < 0) fail(ErrorKind::kNegativeExponent, "monomial exponents must be nonnegative");
  if (sgn(m[rv.i]) == 0) return std::nullopt;
  DerivationTerm t{m[rv.i], IntVector(m.begin(), m.end())};
  for (std::size_t j = 0; j < m.size(); ++j) t.exponent[j] += rv.l[j];
  t.exponent[rv.i] -= 1;
  return t;
}

RootVector weyl_action(std::span<const std::size_t> sigma, const RootVector& rv) {
  if (sigma.size() != rv.l.size() || !is_permutation(sigma)) {
    fail(ErrorKind::kDimensionMismatch, "sigma must be a permutation of 1..n");
  }
  return {sigma[rv.i], pull_back(rv.l, inverse(sigma))};
}

}  // namespace torusconj
