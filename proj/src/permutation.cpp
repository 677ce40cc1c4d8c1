// Copyright 2026 The torusconj Authors
// SPDX-License-Identifier: Apache-2.0

#include "torusconj/permutation.hpp"

#include <numeric>
#include <sstream>

#include "torusconj/errors.hpp"

namespace torusconj {

Permutation identity_permutation(std::size_t n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  return p;
}

bool is_permutation(std::span<const std::size_t> p) {
  std::vector<bool> seen(p.size(), false);
  for (std::size_t v : p) {
    if (v >= p.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

Permutation compose(std::span<const std::size_t> a, std::span<const std::size_t> b) {
  if (a.size() != b.size()) fail(ErrorKind::kDimensionMismatch, "composing permutations of different degree");
  Permutation out(a.size());
  for (std::size_t j = 0; j < b.size(); ++j) out[j] = a[b[j]];
  return out;
}

Permutation inverse(std::span<const std::size_t> p) {
  Permutation out(p.size());
  for (std::size_t j = 0; j < p.size(); ++j) out[p[j]] = j;
  return out;
}

SignedPermutation compose(const SignedPermutation& a, const SignedPermutation& b) {
  return {compose(a.perm, b.perm), a.sign * b.sign};
}

IntVector pull_back(std::span<const Integer> v, std::span<const std::size_t> p) {
  if (v.size() != p.size()) fail(ErrorKind::kDimensionMismatch, "permutation degree differs from vector length");
  IntVector out;
  out.reserve(v.size());
  for (std::size_t j = 0; j < p.size(); ++j) out.push_back(v[p[j]]);
  return out;
}

std::string cycle_string(std::span<const std::size_t> p) {
  std::ostringstream os;
  std::vector<bool> done(p.size(), false);
  bool any = false;
  for (std::size_t start = 0; start < p.size(); ++start) {
    if (done[start] || p[start] == start) continue;
    any = true;
    os << '(';
    std::size_t x = start;
    bool first = true;
    while (!done[x]) {
      done[x] = true;
      if (!first) os << ' ';
      os << x + 1;
      first = false;
      x = p[x];
    }
    os << ')';
  }
  return any ? os.str() : "()";
}

}  // namespace torusconj
