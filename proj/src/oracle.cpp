// Copyright 2026 The torusconj Authors
// SPDX-License-Identifier: Apache-2.0

// Brute-force reference procedures. Only exactmat is used here, so these
// stay independent of the lattice/diag/action code they are meant to check.

#include "torusconj/oracle.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdlib>
#include <limits>
#include <vector>

#include "torusconj/errors.hpp"
#include "torusconj/exactmat.hpp"

namespace torusconj {
namespace {

constexpr std::size_t kMaxDigits = 32;
__extension__ typedef __int128 Wide;

std::int64_t to_int64(const Integer& x, const char* what) {
  if (!x.fits_slong_p()) fail(ErrorKind::kTooLarge, std::string(what) + " does not fit in 64 bits");
  return x.get_si();
}

// base^exponent, or 0 when it exceeds `cap`.
std::uint64_t bounded_power(std::uint64_t base, std::size_t exponent, std::uint64_t cap) {
  std::uint64_t p = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    if (base != 0 && p > cap / base) return 0;
    p *= base;
  }
  return p <= cap ? p : 0;
}

std::uint64_t torsion_count_impl(const IntMatrix& rows, std::uint64_t modulus, bool parallel) {
  if (modulus == 0) fail(ErrorKind::kInvalidArgument, "modulus must be at least 1");
  if (modulus == 1) return 1;
  const std::size_t n = rows.cols();
  const std::uint64_t total = bounded_power(modulus, n, kMaxEnumeration);
  if (total == 0) fail(ErrorKind::kTooLarge, "m^n exceeds the enumeration limit");

  std::vector<std::uint64_t> res(rows.rows() * n);
  for (std::size_t i = 0; i < rows.rows(); ++i)
    for (std::size_t j = 0; j < n; ++j)
      res[i * n + j] = mpz_fdiv_ui(rows(i, j).get_mpz_t(), modulus);

  const auto count_rows = rows.rows();
  std::uint64_t count = 0;
#pragma omp parallel for reduction(+ : count) schedule(static) if (parallel)
  for (std::int64_t idx = 0; idx < static_cast<std::int64_t>(total); ++idx) {
    std::array<std::uint64_t, kMaxDigits> t{};
    auto rest = static_cast<std::uint64_t>(idx);
    for (std::size_t j = 0; j < n; ++j) {
      t[j] = rest % modulus;
      rest /= modulus;
    }
    bool ok = true;
    for (std::size_t i = 0; i < count_rows && ok; ++i) {
      std::uint64_t s = 0;
      for (std::size_t j = 0; j < n; ++j) s = (s + res[i * n + j] * t[j]) % modulus;
      ok = s == 0;
    }
    if (ok) ++count;
  }
  return count;
}

// Membership test for the row lattice of a matrix through S = U A V:
// v lies in the lattice iff (v V)_j is divisible by s_j for j < rank and
// vanishes beyond.
class SmithMembership {
 public:
  explicit SmithMembership(const IntMatrix& a) : n_(a.cols()) {
    const SmithDecomposition d = smith_normal_form(a);
    v_.reserve(n_ * n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) v_.push_back(to_int64(d.v(i, j), "transform entry"));
    for (const auto& f : d.factors) factors_.push_back(to_int64(f, "invariant factor"));
  }

  bool contains(std::span<const std::int64_t> x) const {
    for (std::size_t j = 0; j < n_; ++j) {
      Wide w = 0;
      for (std::size_t i = 0; i < n_; ++i) w += static_cast<Wide>(x[i]) * v_[i * n_ + j];
      if (j < factors_.size() ? w % factors_[j] != 0 : w != 0) return false;
    }
    return true;
  }

 private:
  std::size_t n_;
  std::vector<std::int64_t> v_;
  std::vector<std::int64_t> factors_;
};

bool lattice_equal_bounded_impl(const IntMatrix& a, const IntMatrix& b, const Integer& bound,
                                bool parallel) {
  if (a.cols() != b.cols()) fail(ErrorKind::kDimensionMismatch, "matrices have different column counts");
  if (sgn(bound) < 0) fail(ErrorKind::kInvalidArgument, "bound must be nonnegative");
  if (sgn(bound) == 0) return true;
  if (cmp(bound, std::numeric_limits<std::int32_t>::max()) > 0)
    fail(ErrorKind::kTooLarge, "bound too large");
  const std::int64_t box = bound.get_si();
  const std::size_t n = a.cols();
  const auto side = static_cast<std::uint64_t>(2 * box + 1);
  const std::uint64_t total = bounded_power(side, n, kMaxEnumeration);
  if (total == 0) fail(ErrorKind::kTooLarge, "(2b+1)^n exceeds the enumeration limit");

  const SmithMembership in_a(a);
  const SmithMembership in_b(b);
  std::atomic<bool> differ{false};
#pragma omp parallel for schedule(static) if (parallel)
  for (std::int64_t idx = 0; idx < static_cast<std::int64_t>(total); ++idx) {
    if (differ.load(std::memory_order_relaxed)) continue;
    std::array<std::int64_t, kMaxDigits> x{};
    auto rest = static_cast<std::uint64_t>(idx);
    for (std::size_t j = 0; j < n; ++j) {
      x[j] = static_cast<std::int64_t>(rest % side) - box;
      rest /= side;
    }
    const std::span<const std::int64_t> v(x.data(), n);
    if (in_a.contains(v) != in_b.contains(v)) differ.store(true, std::memory_order_relaxed);
  }
  return !differ.load();
}

struct ClosednessSearch {
  std::vector<std::int64_t> l;
  std::vector<bool> in_s;
  std::vector<std::int64_t> suffix_abs;  // sum of |l_j| for j >= index

  ClosednessSearch(const WeightVector& w, const ZeroPattern& s) : in_s(w.n()) {
    const std::size_t n = w.n();
    for (std::size_t j = 0; j < n; ++j) {
      l.push_back(to_int64(w.l[j], "weight"));
      in_s[j] = s.contains(j);
    }
    suffix_abs.assign(n + 1, 0);
    for (std::size_t j = n; j-- > 0;) suffix_abs[j] = suffix_abs[j + 1] + std::abs(l[j]);
  }

  std::int64_t low(std::size_t j, std::int64_t k) const { return in_s[j] ? -k : 0; }

  // Lex-first d with |d|_inf <= k extending d[0..pos).
  bool first(std::int64_t k, std::size_t pos, std::vector<std::int64_t>& d, std::int64_t partial,
             bool positive) const {
    const std::size_t n = l.size();
    if (pos == n) return partial == 0 && positive;
    if (std::abs(partial) > k * suffix_abs[pos]) return false;
    if (pos + 1 == n && l[pos] != 0) {
      if (partial % l[pos] != 0) return false;
      const std::int64_t x = -partial / l[pos];
      if (x < low(pos, k) || x > k) return false;
      if (!(positive || (!in_s[pos] && x > 0))) return false;
      d[pos] = x;
      return true;
    }
    for (std::int64_t x = low(pos, k); x <= k; ++x) {
      d[pos] = x;
      if (first(k, pos + 1, d, partial + x * l[pos], positive || (!in_s[pos] && x > 0))) return true;
    }
    return false;
  }
};

std::optional<IntVector> closedness_search_impl(const WeightVector& w, const ZeroPattern& s,
                                                const Integer& bound, bool parallel) {
  const std::size_t n = w.n();
  if (s.n() != n) fail(ErrorKind::kDimensionMismatch, "zero pattern has wrong length");
  if (sgn(bound) < 0) fail(ErrorKind::kInvalidArgument, "bound must be nonnegative");
  if (s.size() == n || sgn(bound) == 0) return std::nullopt;
  if (cmp(bound, 1'000'000) > 0) fail(ErrorKind::kTooLarge, "bound too large");
  const std::int64_t b = bound.get_si();
  if (bounded_power(static_cast<std::uint64_t>(2 * b + 1), n, kMaxEnumeration) == 0)
    fail(ErrorKind::kTooLarge, "search box exceeds the enumeration limit");

  const ClosednessSearch search(w, s);
  constexpr std::int64_t kSafe = std::numeric_limits<std::int64_t>::max() / 4;
  if (search.suffix_abs[0] > kSafe / b) fail(ErrorKind::kTooLarge, "weights too large");

  auto finish = [](const std::vector<std::int64_t>& d) {
    IntVector out;
    for (auto x : d) out.emplace_back(static_cast<long>(x));
    return out;
  };

  // Level k finds only vectors of norm exactly k, since lower levels came up empty.
  for (std::int64_t k = 1; k <= b; ++k) {
    if (n == 1) {
      std::vector<std::int64_t> d(1);
      if (search.first(k, 0, d, 0, false)) return finish(d);
      continue;
    }
    const std::int64_t lo = search.low(0, k);
    const std::int64_t branches = k - lo + 1;
    std::atomic<std::int64_t> best{branches};
    std::vector<std::vector<std::int64_t>> found(static_cast<std::size_t>(branches));
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (std::int64_t br = 0; br < branches; ++br) {
      if (br > best.load()) continue;
      std::vector<std::int64_t> d(n);
      d[0] = lo + br;
      const bool pos = !search.in_s[0] && d[0] > 0;
      if (search.first(k, 1, d, d[0] * search.l[0], pos)) {
        found[static_cast<std::size_t>(br)] = std::move(d);
        std::int64_t cur = best.load();
        while (br < cur && !best.compare_exchange_weak(cur, br)) {
        }
      }
    }
    if (best.load() < branches) return finish(found[static_cast<std::size_t>(best.load())]);
  }
  return std::nullopt;
}

}  // namespace

std::uint64_t torsion_count(const IntMatrix& rows, std::uint64_t modulus) {
  return torsion_count_impl(rows, modulus, true);
}

Integer default_lattice_bound(const IntMatrix& a, const IntMatrix& b) {
  const Integer ma = hermite_normal_form(a).max_abs_entry();
  const Integer mb = hermite_normal_form(b).max_abs_entry();
  return 2 * (ma > mb ? ma : mb);
}

bool lattice_equal_bounded(const IntMatrix& a, const IntMatrix& b, const Integer& bound) {
  return lattice_equal_bounded_impl(a, b, bound, true);
}

Integer default_closedness_bound(const WeightVector& w) {
  Integer m = 0;
  for (const auto& x : w.l)
    if (cmpabs(x, m) > 0) m = abs(x);
  // l = 0 still needs room for the unit witnesses.
  return m == 0 ? Integer(1) : Integer(3 * m);
}

std::optional<IntVector> closedness_search(const WeightVector& w, const ZeroPattern& s,
                                           const Integer& bound) {
  return closedness_search_impl(w, s, bound, true);
}

std::optional<SignedPermutation> perm_sign_exhaust(std::span<const Integer> l1,
                                                   std::span<const Integer> l2) {
  if (l1.size() != l2.size()) fail(ErrorKind::kDimensionMismatch, "vectors have different lengths");
  if (l1.size() > 8) fail(ErrorKind::kTooLarge, "n > 8");
  const std::size_t n = l1.size();
  Permutation sigma = identity_permutation(n);
  do {
    for (int e : {1, -1}) {
      bool match = true;
      for (std::size_t j = 0; j < n && match; ++j) match = l1[j] == e * l2[sigma[j]];
      if (match) return SignedPermutation{sigma, e};
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return std::nullopt;
}

namespace serial {

std::uint64_t torsion_count(const IntMatrix& rows, std::uint64_t modulus) {
  return torsion_count_impl(rows, modulus, false);
}

bool lattice_equal_bounded(const IntMatrix& a, const IntMatrix& b, const Integer& bound) {
  return lattice_equal_bounded_impl(a, b, bound, false);
}

std::optional<IntVector> closedness_search(const WeightVector& w, const ZeroPattern& s,
                                           const Integer& bound) {
  return closedness_search_impl(w, s, bound, false);
}

}  // namespace serial
}  // namespace torusconj
