// Copyright 2026 The torusconj Authors
// SPDX-License-Identifier: Apache-2.0

#include "torusconj/diag.hpp"

#include <algorithm>

#include "torusconj/errors.hpp"
#include "torusconj/exactmat.hpp"

namespace torusconj {

DiagSubgroup DiagSubgroup::from_matrix(const IntMatrix& defining) {
  return DiagSubgroup(lattice_of(defining));
}

DiagSubgroup DiagSubgroup::from_weights(std::span<const Integer> weights) {
  return DiagSubgroup(lattice_of(IntMatrix::row_vector(weights)));
}

DiagSubgroup DiagSubgroup::full_torus(std::size_t n) { return DiagSubgroup(RowLattice(n)); }

namespace {

void require_same_dim(const DiagSubgroup& g1, const DiagSubgroup& g2) {
  if (g1.ambient_dim() != g2.ambient_dim()) {
    fail(ErrorKind::kDimensionMismatch, "subgroups of tori of different dimensions");
  }
}

void require_nonzero(std::span<const Integer> l) {
  if (l.empty()) fail(ErrorKind::kInvalidArgument, "weight vector must be nonempty");
  if (is_zero(l)) fail(ErrorKind::kZeroVector, "weight vector must be nonzero");
}

void require_primitive(std::span<const Integer> l) {
  if (gcd_of(l) != 1) {
    fail(ErrorKind::kNotPrimitive, "one-dimensional torus needs a nonzero weight vector with gcd 1");
  }
}

IntVector sorted(std::span<const Integer> l) {
  IntVector out(l.begin(), l.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::size_t dimension(const DiagSubgroup& g) { return g.ambient_dim() - g.lattice().rank(); }

IsoType iso_type(const DiagSubgroup& g) {
  IsoType out;
  out.torus_rank = dimension(g);
  for (auto& f : smith_normal_form(g.lattice().basis()).factors) {
    if (f != 1) out.factors.push_back(std::move(f));
  }
  return out;
}

std::optional<Permutation> conjugate_in_gl(const DiagSubgroup& g1, const DiagSubgroup& g2) {
  require_same_dim(g1, g2);
  return permuted_equal(g1.lattice().basis(), g2.lattice().basis());
}

bool conjugate_in_crn(const DiagSubgroup& g1, const DiagSubgroup& g2) {
  require_same_dim(g1, g2);
  return iso_type(g1) == iso_type(g2);
}

std::optional<IntMatrix> crn_conjugator(const DiagSubgroup& g1, const DiagSubgroup& g2) {
  if (!conjugate_in_crn(g1, g2)) return std::nullopt;
  const std::size_t rows = std::max(g1.lattice().rank(), g2.lattice().rank());
  const auto sa = smith_normal_form(g1.lattice().basis().padded_to(rows));
  const auto sb = smith_normal_form(g2.lattice().basis().padded_to(rows));
  // Equal invariant factors give S = U_A A V_A = U_B B V_B, hence
  // R_B = R_{A V_A V_B^-1}.
  return sb.v * inverse_unimodular(sa.v);
}

CanonicalCrn crn_canonical(const DiagSubgroup& g) {
  const std::size_t n = g.ambient_dim();
  CanonicalCrn out;
  out.r = dimension(g);
  out.factors = iso_type(g).factors;
  out.canonical_matrix = IntMatrix(0, n);
  IntVector row(n);
  for (std::size_t k = out.r; k < n; ++k) {
    std::fill(row.begin(), row.end(), Integer(0));
    const std::size_t idx = k - out.r;
    row[k] = idx < out.factors.size() ? out.factors[idx] : Integer(1);
    out.canonical_matrix.append_row(row);
  }
  return out;
}

bool in_canonical_domain(std::span<const Integer> l) {
  if (!std::is_sorted(l.begin(), l.end())) return false;
  IntVector reflected = negated(l);
  std::reverse(reflected.begin(), reflected.end());
  return !lex_less(reflected, l);
}

IntVector codim1_canonical(std::span<const Integer> l) {
  require_nonzero(l);
  IntVector up = sorted(l);
  IntVector down = sorted(negated(l));
  return lex_less(down, up) ? down : up;
}

std::optional<SignedPermutation> conjugate_in_autn_codim1(std::span<const Integer> l1,
                                                          std::span<const Integer> l2) {
  if (l1.size() != l2.size()) fail(ErrorKind::kDimensionMismatch, "weight vectors of different lengths");
  require_nonzero(l1);
  require_nonzero(l2);
  auto sigma = permuted_equal(IntMatrix::row_vector(l1), IntMatrix::row_vector(l2));
  if (!sigma) return std::nullopt;
  const IntVector moved = pull_back(l2, *sigma);
  const bool positive = std::equal(moved.begin(), moved.end(), l1.begin());
  return SignedPermutation{std::move(*sigma), positive ? 1 : -1};
}

IntVector crn_codim1_canonical(std::span<const Integer> l) {
  require_nonzero(l);
  IntVector out(l.size());
  out.back() = gcd_of(l);
  return out;
}

bool torus_equal_1dim(std::span<const Integer> l1, std::span<const Integer> l2) {
  if (l1.size() != l2.size()) fail(ErrorKind::kDimensionMismatch, "weight vectors of different lengths");
  require_primitive(l1);
  require_primitive(l2);
  if (std::equal(l1.begin(), l1.end(), l2.begin())) return true;
  const IntVector minus = negated(l2);
  return std::equal(l1.begin(), l1.end(), minus.begin());
}

IntVector aut3_torus_canonical(std::span<const Integer> l) {
  if (l.size() != 3) fail(ErrorKind::kDimensionMismatch, "tori in Aut A^3 need three weights");
  require_nonzero(l);
  require_primitive(l);
  return codim1_canonical(l);
}

}  // namespace torusconj
