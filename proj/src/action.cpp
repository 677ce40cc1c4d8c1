// Copyright 2026 The torusconj Authors
// SPDX-License-Identifier: Apache-2.0

#include "torusconj/action.hpp"

#include "torusconj/errors.hpp"

namespace torusconj {
namespace {

void require_compatible(const WeightVector& w, const ZeroPattern& s) {
  if (w.n() == 0) fail(ErrorKind::kInvalidArgument, "weight vector must be nonempty");
  if (s.n() != w.n()) fail(ErrorKind::kDimensionMismatch, "zero pattern and weights differ in length");
}

bool vanishes_on(const WeightVector& w, const std::vector<std::size_t>& idx) {
  for (std::size_t i : idx)
    if (sgn(w.l[i]) != 0) return false;
  return true;
}

}  // namespace

std::size_t group_dimension(const WeightVector& w) { return w.is_zero() ? w.n() : w.n() - 1; }

IsoType stabilizer(const WeightVector& w, const ZeroPattern& s) {
  require_compatible(w, s);
  const auto idx = s.indices();
  if (idx.empty()) return {};
  IntVector restricted;
  for (std::size_t i : idx) restricted.push_back(w.l[i]);
  return iso_type(DiagSubgroup::from_weights(restricted));
}

bool is_orbit_closed(const WeightVector& w, const ZeroPattern& s) {
  require_compatible(w, s);
  const auto off = s.complement();
  if (off.empty()) return true;  // the origin is fixed
  if (!vanishes_on(w, s.indices())) return false;
  int sign = 0;
  for (std::size_t j : off) {
    const int sj = sgn(w.l[j]);
    if (sj == 0) return false;
    if (sign == 0) sign = sj;
    if (sj != sign) return false;
  }
  return true;
}

bool origin_in_closure(const WeightVector& w, const ZeroPattern& s) {
  require_compatible(w, s);
  const auto off = s.complement();
  if (off.empty()) return true;
  // A weight on S lets d_i absorb any value of <d, l> over the complement.
  if (!vanishes_on(w, s.indices())) return true;
  bool pos = false;
  bool neg = false;
  for (std::size_t j : off) {
    pos = pos || sgn(w.l[j]) > 0;
    neg = neg || sgn(w.l[j]) < 0;
  }
  // Need d > 0 on the complement with <d, l> = 0.
  return pos == neg;
}

OrbitReport orbit_report(const WeightVector& w, const ZeroPattern& s) {
  OrbitReport r;
  r.stabilizer = stabilizer(w, s);
  r.stabilizer_dim = r.stabilizer.torus_rank;
  if (r.stabilizer_dim == 0) {
    Integer order = 1;
    for (const auto& f : r.stabilizer.factors) order *= f;
    r.stabilizer_order = order;
  }
  r.orbit_dim = group_dimension(w) - r.stabilizer_dim;
  r.closed = is_orbit_closed(w, s);
  r.origin_in_closure = origin_in_closure(w, s);
  return r;
}

bool is_stable(const WeightVector& w) {
  if (w.n() == 0) return false;
  const int sign = sgn(w.l.front());
  if (sign == 0) return false;
  for (const auto& v : w.l)
    if (sgn(v) != sign) return false;
  return true;
}

std::optional<IntVector> invariant_monomial(const WeightVector& w) {
  bool pos = false;
  bool neg = false;
  for (const auto& v : w.l) {
    pos = pos || sgn(v) > 0;
    neg = neg || sgn(v) < 0;
  }
  if (pos == neg) return std::nullopt;  // zero or mixed signs
  return pos ? w.l : negated(w.l);
}

std::optional<ZeroPattern> limit_pattern(const WeightVector& w, const ZeroPattern& s,
                                         std::span<const Integer> d) {
  require_compatible(w, s);
  if (d.size() != w.n()) fail(ErrorKind::kDimensionMismatch, "one-parameter subgroup has wrong length");
  if (sgn(dot(d, w.l)) != 0) fail(ErrorKind::kNotInGroup, "<d, l> != 0: not a subgroup of G");
  ZeroPattern out = s;
  for (std::size_t j : s.complement()) {
    const int sj = sgn(d[j]);
    if (sj < 0) return std::nullopt;
    if (sj > 0) out.insert(j);
  }
  return out;
}

ActionReport action_report(const WeightVector& w) {
  if (w.n() == 0) fail(ErrorKind::kInvalidArgument, "weight vector must be nonempty");
  ActionReport r;
  r.group_dim = group_dimension(w);
  r.stable = is_stable(w);
  r.invariant_monomial = invariant_monomial(w);
  r.has_nonconstant_invariants = r.invariant_monomial.has_value();
  for (std::size_t i = 0; i < w.n(); ++i) {
    const auto rep = orbit_report(w, ZeroPattern::from_indices(w.n(), {i}));
    if (rep.orbit_dim + 1 == w.n() && !rep.closed) r.nonclosed_codim1_orbit_axes.push_back(i);
  }
  return r;
}

}  // namespace torusconj
