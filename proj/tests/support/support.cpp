// Copyright 2026 The torusconj Authors
// SPDX-License-Identifier: Apache-2.0

#include "support.hpp"

#include <algorithm>
#include <numeric>

#include "torusconj/exactmat.hpp"

namespace torusconj::testing {

long uniform(Rng& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

IntVector random_vector(Rng& rng, std::size_t n, long bound) {
  IntVector v;
  for (std::size_t i = 0; i < n; ++i) v.emplace_back(uniform(rng, -bound, bound));
  return v;
}

IntMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long bound) {
  IntMatrix a(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a(i, j) = uniform(rng, -bound, bound);
  return a;
}

IntMatrix random_unimodular(Rng& rng, std::size_t n, std::size_t steps) {
  IntMatrix u = IntMatrix::identity(n);
  if (n == 0) return u;
  for (std::size_t s = 0; s < steps; ++s) {
    const auto i = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 1));
    const auto j = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 1));
    switch (uniform(rng, 0, 3)) {
      case 0: u.swap_rows(i, j); break;
      case 1: u.negate_row(i); break;
      default:
        if (i != j) u.add_row_multiple(i, j, Integer(uniform(rng, -2, 2)));
    }
  }
  return u;
}

Permutation random_permutation(Rng& rng, std::size_t n) {
  Permutation p = identity_permutation(n);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

Integer leibniz_determinant(const IntMatrix& a) {
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  if (n == 1) return a(0, 0);
  Integer det = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (sgn(a(0, j)) == 0) continue;
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(r - 1, cc++) = a(r, c);
    const Integer term = a(0, j) * leibniz_determinant(minor);
    if (j % 2 == 0) det += term;
    else det -= term;
  }
  return det;
}

namespace {

void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  if (k > n) return;
  while (true) {
    f(idx);
    std::size_t pos = k;
    while (pos > 0 && idx[pos - 1] == n - k + pos - 1) --pos;
    if (pos == 0) return;
    ++idx[pos - 1];
    for (std::size_t t = pos; t < k; ++t) idx[t] = idx[t - 1] + 1;
  }
}

}  // namespace

std::vector<Integer> determinantal_divisors(const IntMatrix& a) {
  std::vector<Integer> out;
  const std::size_t top = std::min(a.rows(), a.cols());
  for (std::size_t k = 1; k <= top; ++k) {
    Integer g = 0;
    for_each_subset(a.rows(), k, [&](const std::vector<std::size_t>& rows) {
      for_each_subset(a.cols(), k, [&](const std::vector<std::size_t>& cols) {
        IntMatrix m(k, k);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) m(i, j) = a(rows[i], cols[j]);
        g = gcd(g, leibniz_determinant(m));
      });
    });
    if (sgn(g) == 0) break;
    out.push_back(g);
  }
  return out;
}

std::vector<Integer> invariant_factors_from_minors(const IntMatrix& a) {
  std::vector<Integer> f = determinantal_divisors(a);
  std::vector<Integer> out;
  Integer prev = 1;
  for (const auto& x : f) {
    out.push_back(x / prev);
    prev = x;
  }
  return out;
}

bool in_row_span(const IntMatrix& a, std::span<const Integer> v) {
  const SmithDecomposition d = smith_normal_form(a);
  const IntVector w = v * d.v;
  for (std::size_t j = 0; j < w.size(); ++j) {
    if (j < d.rank()) {
      if (!mpz_divisible_p(w[j].get_mpz_t(), d.factors[j].get_mpz_t())) return false;
    } else if (sgn(w[j]) != 0) {
      return false;
    }
  }
  return true;
}

void for_each_box_vector(std::size_t n, long lo, long hi,
                         const std::function<void(const IntVector&)>& visit) {
  IntVector v(n, Integer(lo));
  while (true) {
    visit(v);
    std::size_t pos = n;
    while (pos > 0 && v[pos - 1] == hi) {
      v[pos - 1] = lo;
      --pos;
    }
    if (pos == 0) return;
    v[pos - 1] += 1;
  }
}

void for_each_box_matrix(std::size_t m, std::size_t n, long lo, long hi,
                         const std::function<void(const IntMatrix&)>& visit) {
  IntMatrix a(m, n);
  for_each_box_vector(m * n, lo, hi, [&](const IntVector& flat) {
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) = flat[i * n + j];
    visit(a);
  });
}

IntVector unit_vector(std::size_t n, std::size_t i) {
  IntVector v(n);
  v.at(i) = 1;
  return v;
}

}  // namespace torusconj::testing
