// Copyright 2026 The torusconj Authors
// SPDX-License-Identifier: Apache-2.0

#include "torusconj/normalizer.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "torusconj/errors.hpp"
#include "torusconj/lattice.hpp"

namespace torusconj {

std::string_view to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::kFullTorus: return "FullTorus";
    case CaseTag::kAxis: return "AxisCase";
    case CaseTag::kSameSignAllNonzero: return "SameSignAllNonzero";
    case CaseTag::kNoUnitWeights: return "NoUnitWeights";
    case CaseTag::kZeroAndUnitSameSign: return "ZeroAndUnitSameSign";
    case CaseTag::kMixedSigns: return "MixedSigns";
  }
  return "Unknown";
}

NormalizerCase classify_case(std::span<const Integer> l) {
  if (l.empty()) fail(ErrorKind::kInvalidArgument, "weight vector must be nonempty");
  std::size_t nonzero = 0;
  std::size_t last_nonzero = 0;
  bool pos = false;
  bool neg = false;
  bool unit = false;
  for (std::size_t i = 0; i < l.size(); ++i) {
    const int s = sgn(l[i]);
    if (s == 0) continue;
    ++nonzero;
    last_nonzero = i;
    pos = pos || s > 0;
    neg = neg || s < 0;
    unit = unit || cmpabs(l[i], 1) == 0;
  }
  const bool has_zero = nonzero < l.size();

  if (nonzero == 0) return {CaseTag::kFullTorus, std::nullopt};
  if (nonzero == 1 && unit) return {CaseTag::kAxis, last_nonzero};
  if (pos != neg && !has_zero) return {CaseTag::kSameSignAllNonzero, std::nullopt};
  if (!unit) return {CaseTag::kNoUnitWeights, std::nullopt};
  if (pos != neg) return {CaseTag::kZeroAndUnitSameSign, std::nullopt};
  return {CaseTag::kMixedSigns, std::nullopt};
}

PermGroupPart monomial_normalizer(std::span<const Integer> l) {
  std::map<Integer, std::vector<std::size_t>> level_sets;
  for (std::size_t i = 0; i < l.size(); ++i) level_sets[l[i]].push_back(i);

  PermGroupPart out;
  out.order = 1;
  const Permutation id = identity_permutation(l.size());
  for (const auto& [value, idx] : level_sets) {
    for (std::size_t k = 1; k < idx.size(); ++k) {
      Permutation t = id;
      std::swap(t[idx[k - 1]], t[idx[k]]);
      out.generators.push_back({std::move(t), 1});
    }
    Integer fact;
    mpz_fac_ui(fact.get_mpz_t(), idx.size());
    out.order *= fact;
  }

  // (tau, -1) exists iff the multiset of values is symmetric under negation;
  // tau sends the k-th occurrence of v to the k-th occurrence of -v.
  bool symmetric = true;
  for (const auto& [value, idx] : level_sets) {
    auto it = level_sets.find(-value);
    if (it == level_sets.end() || it->second.size() != idx.size()) {
      symmetric = false;
      break;
    }
  }
  if (symmetric) {
    Permutation tau(l.size());
    for (const auto& [value, idx] : level_sets) {
      const auto& partner = level_sets.at(-value);
      for (std::size_t k = 0; k < idx.size(); ++k) tau[idx[k]] = partner[k];
    }
    out.generators.push_back({std::move(tau), -1});
    out.order *= 2;
  }
  return out;
}

std::vector<Permutation> monomial_centralizer(std::span<const Integer> l) {
  const std::size_t n = l.size();
  const RowLattice lattice = lattice_of(IntMatrix::row_vector(l));
  std::vector<std::vector<std::size_t>> allowed(n);
  IntVector diff(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::fill(diff.begin(), diff.end(), Integer(0));
      diff[i] += 1;
      diff[j] -= 1;
      if (contains(lattice, diff)) allowed[i].push_back(j);
    }
  }

  std::vector<Permutation> out;
  Permutation sigma(n);
  std::vector<bool> used(n, false);
  auto extend = [&](auto&& self, std::size_t k) -> void {
    if (k == n) {
      out.push_back(sigma);
      return;
    }
    for (std::size_t v : allowed[k]) {
      if (used[v]) continue;
      used[v] = true;
      sigma[k] = v;
      self(self, k + 1);
      used[v] = false;
    }
  };
  extend(extend, 0);
  return out;
}

NormalizerReport normalizer_report(std::span<const Integer> l) {
  NormalizerReport r;
  r.normalizer_case = classify_case(l);
  r.perm_part = monomial_normalizer(l);
  r.centralizer_perm_part = monomial_centralizer(l);
  switch (r.normalizer_case.tag) {
    case CaseTag::kFullTorus:
    case CaseTag::kSameSignAllNonzero:
    case CaseTag::kNoUnitWeights:
    case CaseTag::kZeroAndUnitSameSign:
      r.contained_in_monomial = true;
      r.explicit_form_known = true;
      break;
    case CaseTag::kAxis: {
      r.contained_in_monomial = false;
      r.explicit_form_known = true;
      r.explicit_structure = "N_{GL_{n-1}}(D_{n-1}) x Aff_1";
      AxisElementShape shape;
      shape.axis = *r.normalizer_case.axis;
      for (std::size_t j = 0; j < l.size(); ++j)
        if (j != shape.axis) shape.permuted_coordinates.push_back(j);
      r.axis_shape = std::move(shape);
      break;
    }
    case CaseTag::kMixedSigns:
      // Algebraic, but only the monomial part is certified.
      r.contained_in_monomial = false;
      r.explicit_form_known = false;
      break;
  }
  return r;
}

std::vector<SignedPermutation> expand_group(std::span<const SignedPermutation> generators,
                                            std::size_t n) {
  std::set<SignedPermutation> seen;
  std::vector<SignedPermutation> frontier{{identity_permutation(n), 1}};
  seen.insert(frontier.front());
  while (!frontier.empty()) {
    std::vector<SignedPermutation> next;
    for (const auto& x : frontier) {
      for (const auto& g : generators) {
        if (g.perm.size() != n) fail(ErrorKind::kDimensionMismatch, "generator of wrong degree");
        auto y = compose(x, g);
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

}  // namespace torusconj
