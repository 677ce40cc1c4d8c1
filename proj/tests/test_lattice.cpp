// Copyright 2026 The torusconj Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <algorithm>

#include "support.hpp"
#include "torusconj/errors.hpp"
#include "torusconj/exactmat.hpp"
#include "torusconj/lattice.hpp"

namespace torusconj {
namespace {

using testing::Rng;

// Lexicographically least sigma by brute force; the reference for permuted_equal.
std::optional<Permutation> brute_permuted_equal(const IntMatrix& a, const IntMatrix& b) {
  const RowLattice la = lattice_of(a);
  Permutation sigma = identity_permutation(a.cols());
  do {
    if (equal(la, lattice_of(b.select_cols(sigma)))) return sigma;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return std::nullopt;
}

TEST(LatticeOf, Examples) {
  EXPECT_EQ(lattice_of({{1, 0}, {0, 1}}).basis(), (IntMatrix{{1, 0}, {0, 1}}));
  EXPECT_EQ(lattice_of({{2, 4}, {6, 8}}).basis(), (IntMatrix{{2, 0}, {0, 4}}));
  const RowLattice zero = lattice_of(IntMatrix(2, 3));
  EXPECT_EQ(zero.rank(), 0u);
  EXPECT_EQ(zero.ambient_dim(), 3u);
  EXPECT_EQ(zero, RowLattice(3));
}

TEST(Contains, Examples) {
  const RowLattice l = lattice_of({{1, 1, 1}});
  EXPECT_TRUE(contains(l, make_vector({2, 2, 2})));
  EXPECT_FALSE(contains(l, make_vector({1, 0, 0})));
  EXPECT_FALSE(contains(lattice_of({{2, 0}, {0, 2}}), make_vector({1, 1})));
  EXPECT_TRUE(contains(l, make_vector({0, 0, 0})));
  try {
    contains(l, make_vector({1, 1}));
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kDimensionMismatch);
  }
}

TEST(Contains, AgreesWithSmithMembership) {
  Rng rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const IntMatrix a = testing::random_matrix(rng, 2, 3, 4);
    const RowLattice l = lattice_of(a);
    for (std::size_t i = 0; i < a.rows(); ++i) ASSERT_TRUE(contains(l, a.row(i)));
    const IntVector v = testing::random_vector(rng, 3, 6);
    ASSERT_EQ(contains(l, v), testing::in_row_span(a, v));
  }
}

TEST(Equal, Examples) {
  EXPECT_TRUE(equal(lattice_of({{1, 2}, {3, 4}}), lattice_of({{1, 0}, {0, 2}})));
  EXPECT_FALSE(equal(lattice_of({{2, 0}}), lattice_of({{0, 2}})));
  const RowLattice l = lattice_of({{3, 1, 4}});
  EXPECT_TRUE(equal(l, l));
  EXPECT_THROW(equal(lattice_of({{1, 0}}), lattice_of({{1, 0, 0}})), DomainError);
}

TEST(Equal, LeftUnimodularInvariance) {
  Rng rng(22);
  for (int trial = 0; trial < 200; ++trial) {
    const auto m = static_cast<std::size_t>(testing::uniform(rng, 1, 3));
    const IntMatrix a = testing::random_matrix(rng, m, 4, 3);
    const IntMatrix q = testing::random_unimodular(rng, m, 10);
    ASSERT_TRUE(equal(lattice_of(q * a), lattice_of(a)));
  }
}

TEST(PlueckerEqual, Examples) {
  EXPECT_TRUE(pluecker_equal(IntMatrix{{1, 0}, {0, 1}}, IntMatrix{{1, 1}, {0, 1}}));
  EXPECT_TRUE(pluecker_equal(IntMatrix{{1, 0}, {0, 1}}, IntMatrix{{0, 1}, {1, 0}}));
  EXPECT_FALSE(pluecker_equal(IntMatrix{{1, 0}, {0, 1}}, IntMatrix{{2, 0}, {0, 1}}));
  try {
    pluecker_equal(IntMatrix{{1, 2}, {2, 4}}, IntMatrix{{1, 0}, {0, 1}});
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kRankDeficient);
  }
}

TEST(PlueckerEqual, AgreesWithHermiteOnSamples) {
  // Exhaustive agreement for m <= 2, n <= 3 runs in the acceptance binary;
  // here random pairs up to m = 3, n = 4, mixing equal and unequal lattices.
  Rng rng(23);
  int compared = 0;
  while (compared < 3000) {
    const auto n = static_cast<std::size_t>(testing::uniform(rng, 1, 4));
    const auto m = static_cast<std::size_t>(testing::uniform(rng, 1, static_cast<long>(std::min<std::size_t>(n, 3))));
    const IntMatrix a = testing::random_matrix(rng, m, n, 3);
    if (rank(a) < m) continue;
    IntMatrix b = compared % 3 == 0 ? testing::random_unimodular(rng, m, 6) * a : testing::random_matrix(rng, m, n, 3);
    if (compared % 5 == 1) b = testing::random_unimodular(rng, m, 3) * a.select_cols(testing::random_permutation(rng, n));
    if (rank(b) < m) continue;
    ASSERT_EQ(pluecker_equal(a, b), equal(lattice_of(a), lattice_of(b))) << to_text(a) << " | " << to_text(b);
    ++compared;
  }
}

TEST(Transform, Examples) {
  const RowLattice l = lattice_of({{2, 0}});
  EXPECT_EQ(transform(l, IntMatrix::identity(2)), l);
  EXPECT_EQ(transform(l, IntMatrix{{0, 1}, {1, 0}}), lattice_of({{0, 2}}));
  try {
    transform(l, IntMatrix{{2, 0}, {0, 1}});
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNotUnimodular);
  }
  Rng rng(24);
  for (int trial = 0; trial < 50; ++trial) {
    const RowLattice x = lattice_of(testing::random_matrix(rng, 2, 3, 5));
    const IntMatrix m = testing::random_unimodular(rng, 3, 10);
    ASSERT_EQ(transform(transform(x, m), inverse_unimodular(m)), x);
  }
}

TEST(Project, KeepsSelectedColumns) {
  EXPECT_EQ(project(lattice_of({{1, 2, 3}}), std::vector<std::size_t>{2, 0}), lattice_of({{3, 1}}));
}

TEST(PermutedEqual, Examples) {
  EXPECT_EQ(permuted_equal({{1, 2, 0}}, {{0, 2, 1}}), (Permutation{2, 1, 0}));
  EXPECT_EQ(permuted_equal({{1, 2}}, {{1, 3}}), std::nullopt);
  EXPECT_EQ(permuted_equal({{1, 2}, {0, 5}}, {{1, 2}, {0, 5}}), (Permutation{0, 1}));
  EXPECT_THROW(permuted_equal({{1, 2}}, {{1, 2, 3}}), DomainError);
}

TEST(PermutedEqual, MatchesBruteForceAndSerial) {
  Rng rng(25);
  for (int trial = 0; trial < 300; ++trial) {
    const auto n = static_cast<std::size_t>(testing::uniform(rng, 1, 5));
    const auto m = static_cast<std::size_t>(testing::uniform(rng, 0, 3));
    const IntMatrix a = testing::random_matrix(rng, m, n, 2);
    IntMatrix b = trial % 2 == 0
                      ? testing::random_unimodular(rng, m, 6) * a.select_cols(testing::random_permutation(rng, n))
                      : testing::random_matrix(rng, m, n, 2);
    const auto expected = brute_permuted_equal(a, b);
    ASSERT_EQ(permuted_equal(a, b), expected) << to_text(a) << " | " << to_text(b);
    ASSERT_EQ(serial::permuted_equal(a, b), expected);
    // Symmetry: the inverse relation exists exactly when the forward one does.
    const auto back = permuted_equal(b, a);
    ASSERT_EQ(back.has_value(), expected.has_value());
    if (expected) ASSERT_TRUE(equal(lattice_of(b), lattice_of(a.select_cols(*back))));
  }
}

TEST(PermutedEqual, RepeatedColumnsLargeN) {
  // Many equal columns: the invariant pruning must not reject valid branches.
  IntMatrix a{{1, 1, 1, 1, 1, 1, 2}};
  IntMatrix b{{2, 1, 1, 1, 1, 1, 1}};
  const auto s = permuted_equal(a, b);
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ(*s, (Permutation{1, 2, 3, 4, 5, 6, 0}));
}

}  // namespace
}  // namespace torusconj
