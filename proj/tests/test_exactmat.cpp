// Copyright 2026 The torusconj Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "support.hpp"
#include "torusconj/errors.hpp"
#include "torusconj/exactmat.hpp"

namespace torusconj {
namespace {

using testing::Rng;

bool has_smith_shape(const SmithDecomposition& d) {
  for (std::size_t i = 0; i < d.s.rows(); ++i)
    for (std::size_t j = 0; j < d.s.cols(); ++j) {
      const bool diag = i == j && i < d.rank();
      if (!diag && sgn(d.s(i, j)) != 0) return false;
      if (diag && d.s(i, j) != d.factors[i]) return false;
    }
  for (std::size_t i = 0; i < d.rank(); ++i) {
    if (sgn(d.factors[i]) <= 0) return false;
    if (i + 1 < d.rank() && !mpz_divisible_p(d.factors[i + 1].get_mpz_t(), d.factors[i].get_mpz_t()))
      return false;
  }
  return true;
}

TEST(Smith, SingleRowExtendsToUnimodular) {
  const auto d = smith_normal_form({{1, 1, 1}});
  EXPECT_EQ(d.s, (IntMatrix{{1, 0, 0}}));
  EXPECT_EQ(d.factors, make_vector({1}));
}

TEST(Smith, ZeroMatrixKeepsIdentityTransforms) {
  const auto d = smith_normal_form(IntMatrix(2, 3));
  EXPECT_TRUE(d.s.is_zero());
  EXPECT_EQ(d.u, IntMatrix::identity(2));
  EXPECT_EQ(d.v, IntMatrix::identity(3));
  EXPECT_TRUE(d.factors.empty());
}

TEST(Smith, TwoByTwo) {
  const IntMatrix a{{2, 4}, {6, 8}};
  const auto d = smith_normal_form(a);
  EXPECT_EQ(d.factors, make_vector({2, 4}));
  EXPECT_EQ(d.u * a * d.v, d.s);
}

TEST(Smith, NoRows) {
  const auto d = smith_normal_form(IntMatrix(0, 3));
  EXPECT_EQ(d.rank(), 0u);
  EXPECT_EQ(d.v, IntMatrix::identity(3));
}

TEST(Smith, HugeEntries) {
  IntMatrix a{{1, 0}, {0, 1}};
  a(0, 0) = Integer("123456789012345678901234567890");
  a(0, 1) = Integer("987654321098765432109876543210");
  a(1, 0) = Integer("-55555555555555555555555555555");
  a(1, 1) = 7;
  const auto d = smith_normal_form(a);
  EXPECT_EQ(d.u * a * d.v, d.s);
  EXPECT_TRUE(has_smith_shape(d));
  EXPECT_EQ(d.factors, testing::invariant_factors_from_minors(a));
  EXPECT_EQ(d.factors[0] * d.factors[1], abs(determinant(a)));
}

TEST(Smith, RandomMatchesMinorOracle) {
  Rng rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const auto m = static_cast<std::size_t>(testing::uniform(rng, 1, 5));
    const auto n = static_cast<std::size_t>(testing::uniform(rng, 1, 5));
    const IntMatrix a = testing::random_matrix(rng, m, n, trial % 3 == 0 ? 1 : 9);
    const auto d = smith_normal_form(a);
    ASSERT_EQ(d.u * a * d.v, d.s) << to_text(a);
    ASSERT_EQ(abs(testing::leibniz_determinant(d.u)), 1);
    ASSERT_EQ(abs(testing::leibniz_determinant(d.v)), 1);
    ASSERT_TRUE(has_smith_shape(d)) << to_text(a);
    ASSERT_EQ(d.factors, testing::invariant_factors_from_minors(a)) << to_text(a);
    ASSERT_EQ(d.rank(), rank(a));
  }
}

TEST(Smith, UnimodularInvariance) {
  Rng rng(12);
  for (int trial = 0; trial < 60; ++trial) {
    const IntMatrix a = testing::random_matrix(rng, 3, 4, 6);
    const auto base = smith_normal_form(a).factors;
    for (int k = 0; k < 10; ++k) {
      const IntMatrix p = testing::random_unimodular(rng, 3, 8);
      const IntMatrix q = testing::random_unimodular(rng, 4, 8);
      ASSERT_EQ(smith_normal_form(p * a * q).factors, base);
    }
  }
}

TEST(Hermite, Examples) {
  EXPECT_EQ(hermite_normal_form({{0, 1}, {1, 0}}), (IntMatrix{{1, 0}, {0, 1}}));
  EXPECT_EQ(hermite_normal_form({{2, 4}}), (IntMatrix{{2, 4}}));
  EXPECT_EQ(hermite_normal_form({{1, 2}, {3, 4}}), (IntMatrix{{1, 0}, {0, 2}}));
  EXPECT_EQ(hermite_normal_form({{2, 4}, {6, 8}}), (IntMatrix{{2, 0}, {0, 4}}));
  EXPECT_EQ(hermite_normal_form(IntMatrix(2, 3)).rows(), 0u);
}

TEST(Hermite, ShapeIdempotenceAndSpan) {
  Rng rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const auto m = static_cast<std::size_t>(testing::uniform(rng, 1, 5));
    const auto n = static_cast<std::size_t>(testing::uniform(rng, 1, 5));
    const IntMatrix a = testing::random_matrix(rng, m, n, trial % 2 == 0 ? 2 : 12);
    const IntMatrix h = hermite_normal_form(a);
    ASSERT_EQ(hermite_normal_form(h), h);
    ASSERT_EQ(h.rows(), rank(a));
    std::size_t last_pivot = 0;
    for (std::size_t i = 0; i < h.rows(); ++i) {
      std::size_t p = 0;
      while (sgn(h(i, p)) == 0) ++p;
      ASSERT_GT(sgn(h(i, p)), 0);
      if (i > 0) ASSERT_GT(p, last_pivot);
      for (std::size_t k = 0; k < i; ++k) {
        ASSERT_GE(sgn(h(k, p)), 0);
        ASSERT_LT(h(k, p), h(i, p));
      }
      last_pivot = p;
    }
    for (std::size_t i = 0; i < a.rows(); ++i) ASSERT_TRUE(testing::in_row_span(h, a.row(i)));
    for (std::size_t i = 0; i < h.rows(); ++i) ASSERT_TRUE(testing::in_row_span(a, h.row(i)));
  }
}

TEST(Hermite, TransformReproducesBasis) {
  Rng rng(14);
  for (int trial = 0; trial < 100; ++trial) {
    const IntMatrix a = testing::random_matrix(rng, 4, 3, 5);
    const auto hd = hermite_with_transform(a);
    ASSERT_TRUE(is_unimodular(hd.transform));
    const IntMatrix prod = hd.transform * a;
    for (std::size_t i = 0; i < hd.h.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) ASSERT_EQ(prod(i, j), hd.h(i, j));
    for (std::size_t i = hd.h.rows(); i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) ASSERT_EQ(sgn(prod(i, j)), 0);
  }
}

TEST(Determinant, AgreesWithCofactorExpansion) {
  Rng rng(15);
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = static_cast<std::size_t>(testing::uniform(rng, 1, 6));
    const IntMatrix a = testing::random_matrix(rng, n, n, 7);
    ASSERT_EQ(determinant(a), testing::leibniz_determinant(a));
  }
  EXPECT_THROW(determinant(IntMatrix(2, 3)), DomainError);
}

TEST(Unimodular, InverseRoundTrip) {
  Rng rng(16);
  for (int trial = 0; trial < 100; ++trial) {
    const IntMatrix u = testing::random_unimodular(rng, 4, 12);
    ASSERT_TRUE(is_unimodular(u));
    ASSERT_EQ(u * inverse_unimodular(u), IntMatrix::identity(4));
  }
  EXPECT_FALSE(is_unimodular({{2, 0}, {0, 1}}));
  try {
    inverse_unimodular({{2, 0}, {0, 1}});
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNotUnimodular);
  }
}

TEST(Pluecker, Examples) {
  EXPECT_EQ(pluecker_coordinates({{1, 0}, {0, 1}}), (PlueckerMap{{{0, 1}, 1}}));
  EXPECT_EQ(pluecker_coordinates({{1, 0, 0}, {0, 1, 0}}),
            (PlueckerMap{{{0, 1}, 1}, {{0, 2}, 0}, {{1, 2}, 0}}));
  EXPECT_EQ(pluecker_coordinates({{2, 0}, {0, 3}}), (PlueckerMap{{{0, 1}, 6}}));
}

TEST(Pluecker, RankDeficientRejected) {
  try {
    pluecker_coordinates({{1, 2}, {2, 4}});
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kRankDeficient);
  }
}

TEST(Pluecker, MinorsMatchCofactorDeterminants) {
  Rng rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const IntMatrix a = testing::random_matrix(rng, 2, 4, 5);
    if (rank(a) < 2) continue;
    for (const auto& [cols, minor] : pluecker_coordinates(a))
      ASSERT_EQ(minor, testing::leibniz_determinant(a.select_cols(cols)));
  }
}

TEST(IndexTuples, Lexicographic) {
  const auto t = index_tuples(4, 2);
  ASSERT_EQ(t.size(), 6u);
  EXPECT_EQ(t.front(), (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(t.back(), (std::vector<std::size_t>{2, 3}));
}

}  // namespace
}  // namespace torusconj
