// Copyright 2026 The torusconj Authors
// SPDX-License-Identifier: Apache-2.0

#include "torusconj/exactmat.hpp"

#include <algorithm>
#include <optional>
#include <utility>

#include "torusconj/errors.hpp"

namespace torusconj {
namespace {

struct Position {
  std::size_t row;
  std::size_t col;
};

// Smallest-magnitude nonzero entry of s[t:, t:].
std::optional<Position> smallest_in_block(const IntMatrix& s, std::size_t t) {
  std::optional<Position> best;
  for (std::size_t i = t; i < s.rows(); ++i) {
    for (std::size_t j = t; j < s.cols(); ++j) {
      if (sgn(s(i, j)) == 0) continue;
      if (!best || cmpabs(s(i, j), s(best->row, best->col)) < 0) best = Position{i, j};
    }
  }
  return best;
}

// Smallest nonzero entry in column t below the pivot or row t right of it.
std::optional<Position> smallest_in_cross(const IntMatrix& s, std::size_t t) {
  std::optional<Position> best;
  auto consider = [&](std::size_t i, std::size_t j) {
    if (sgn(s(i, j)) == 0) return;
    if (!best || cmpabs(s(i, j), s(best->row, best->col)) < 0) best = Position{i, j};
  };
  for (std::size_t i = t + 1; i < s.rows(); ++i) consider(i, t);
  for (std::size_t j = t + 1; j < s.cols(); ++j) consider(t, j);
  return best;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  IntMatrix s = a;
  IntMatrix u = IntMatrix::identity(m);
  IntMatrix v = IntMatrix::identity(n);

  auto swap_in = [&](std::size_t t, Position p) {
    s.swap_rows(t, p.row);
    u.swap_rows(t, p.row);
    s.swap_cols(t, p.col);
    v.swap_cols(t, p.col);
  };

  Integer q;
  std::size_t t = 0;
  for (; t < std::min(m, n); ++t) {
    auto pivot = smallest_in_block(s, t);
    if (!pivot) break;
    swap_in(t, *pivot);

    while (true) {
      for (std::size_t i = t + 1; i < m; ++i) {
        if (sgn(s(i, t)) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), s(i, t).get_mpz_t(), s(t, t).get_mpz_t());
        q = -q;
        s.add_row_multiple(i, t, q);
        u.add_row_multiple(i, t, q);
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (sgn(s(t, j)) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), s(t, j).get_mpz_t(), s(t, t).get_mpz_t());
        q = -q;
        s.add_col_multiple(j, t, q);
        v.add_col_multiple(j, t, q);
      }
      if (auto rem = smallest_in_cross(s, t)) {
        swap_in(t, *rem);
        continue;
      }
      // Row and column t are clear; enforce s_tt | every remaining entry.
      std::optional<std::size_t> offending;
      for (std::size_t i = t + 1; i < m && !offending; ++i) {
        for (std::size_t j = t + 1; j < n; ++j) {
          if (!mpz_divisible_p(s(i, j).get_mpz_t(), s(t, t).get_mpz_t())) {
            offending = i;
            break;
          }
        }
      }
      if (!offending) break;
      s.add_row_multiple(t, *offending, Integer(1));
      u.add_row_multiple(t, *offending, Integer(1));
    }
    if (sgn(s(t, t)) < 0) {
      s.negate_row(t);
      u.negate_row(t);
    }
  }

  SmithDecomposition out{std::move(u), std::move(s), std::move(v), {}};
  for (std::size_t i = 0; i < t; ++i) out.factors.push_back(out.s(i, i));
  return out;
}

HermiteDecomposition hermite_with_transform(const IntMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  IntMatrix h = a;
  IntMatrix t = IntMatrix::identity(m);
  std::size_t r = 0;
  Integer q;

  for (std::size_t c = 0; c < n && r < m; ++c) {
    bool have_pivot = false;
    while (true) {
      std::optional<std::size_t> best;
      for (std::size_t i = r; i < m; ++i) {
        if (sgn(h(i, c)) == 0) continue;
        if (!best || cmpabs(h(i, c), h(*best, c)) < 0) best = i;
      }
      if (!best) break;
      have_pivot = true;
      h.swap_rows(r, *best);
      t.swap_rows(r, *best);
      bool cleared = true;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (sgn(h(i, c)) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(), h(r, c).get_mpz_t());
        q = -q;
        h.add_row_multiple(i, r, q);
        t.add_row_multiple(i, r, q);
        if (sgn(h(i, c)) != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (!have_pivot) continue;
    if (sgn(h(r, c)) < 0) {
      h.negate_row(r);
      t.negate_row(r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      mpz_fdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(), h(r, c).get_mpz_t());
      q = -q;
      h.add_row_multiple(i, r, q);
      t.add_row_multiple(i, r, q);
    }
    ++r;
  }

  IntMatrix reduced(0, n);
  for (std::size_t i = 0; i < r; ++i) reduced.append_row(h.row(i));
  return {std::move(reduced), std::move(t)};
}

IntMatrix hermite_normal_form(const IntMatrix& a) { return hermite_with_transform(a).h; }

std::size_t rank(const IntMatrix& a) { return hermite_normal_form(a).rows(); }

Integer determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) fail(ErrorKind::kDimensionMismatch, "determinant of a non-square matrix");
  const std::size_t n = a.rows();
  IntMatrix w = a;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(w(k, k)) == 0) {
      std::size_t p = k + 1;
      while (p < n && sgn(w(p, k)) == 0) ++p;
      if (p == n) return 0;
      w.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer num = w(i, j) * w(k, k) - w(i, k) * w(k, j);
        mpz_divexact(w(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      w(i, k) = 0;
    }
    prev = w(k, k);
  }
  Integer d = n ? w(n - 1, n - 1) : Integer(1);
  return sign < 0 ? Integer(-d) : d;
}

bool is_unimodular(const IntMatrix& m) {
  if (m.rows() != m.cols()) return false;
  return cmpabs(determinant(m), 1) == 0;
}

IntMatrix inverse_unimodular(const IntMatrix& m) {
  if (!is_unimodular(m)) fail(ErrorKind::kNotUnimodular, "matrix is not unimodular");
  // The Hermite form of a unimodular matrix is the identity, so the recorded
  // row operations are its inverse.
  return hermite_with_transform(m).transform;
}

std::vector<std::vector<std::size_t>> index_tuples(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

PlueckerMap pluecker_coordinates(const IntMatrix& a) {
  if (rank(a) != a.rows()) fail(ErrorKind::kRankDeficient, "Pluecker coordinates need full row rank");
  PlueckerMap out;
  if (a.rows() == 0) {
    out.emplace(std::vector<std::size_t>{}, Integer(1));
    return out;
  }
  for (auto& tuple : index_tuples(a.cols(), a.rows())) {
    Integer minor = determinant(a.select_cols(tuple));
    out.emplace(std::move(tuple), std::move(minor));
  }
  return out;
}

}  // namespace torusconj
