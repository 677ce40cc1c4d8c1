// Copyright 2026 The torusconj Authors
// SPDX-License-Identifier: Apache-2.0

#include "torusconj/lattice.hpp"

#include <atomic>
#include <limits>

#include "torusconj/errors.hpp"
#include "torusconj/exactmat.hpp"

namespace torusconj {

RowLattice::RowLattice(std::size_t ambient_dim) : basis_(0, ambient_dim) {
  if (ambient_dim == 0) fail(ErrorKind::kInvalidArgument, "lattice needs ambient dimension >= 1");
}

RowLattice lattice_of(const IntMatrix& a) {
  if (a.cols() == 0) fail(ErrorKind::kInvalidArgument, "lattice needs ambient dimension >= 1");
  return RowLattice(hermite_normal_form(a));
}

bool contains(const RowLattice& lattice, std::span<const Integer> v) {
  if (v.size() != lattice.ambient_dim()) {
    fail(ErrorKind::kDimensionMismatch, "vector length differs from ambient dimension");
  }
  const IntMatrix& h = lattice.basis();
  IntVector residual(v.begin(), v.end());
  Integer q;
  std::size_t col = 0;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    while (sgn(h(i, col)) == 0) ++col;
    if (!mpz_divisible_p(residual[col].get_mpz_t(), h(i, col).get_mpz_t())) return false;
    mpz_divexact(q.get_mpz_t(), residual[col].get_mpz_t(), h(i, col).get_mpz_t());
    for (std::size_t j = col; j < h.cols(); ++j) {
      mpz_submul(residual[j].get_mpz_t(), q.get_mpz_t(), h(i, j).get_mpz_t());
    }
  }
  return is_zero(residual);
}

bool equal(const RowLattice& a, const RowLattice& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    fail(ErrorKind::kDimensionMismatch, "lattices live in different ambient dimensions");
  }
  return a == b;
}

RowLattice project(const RowLattice& lattice, std::span<const std::size_t> cols) {
  return lattice_of(lattice.basis().select_cols(cols));
}

RowLattice transform(const RowLattice& lattice, const IntMatrix& m) {
  if (m.rows() != lattice.ambient_dim() || m.cols() != lattice.ambient_dim()) {
    fail(ErrorKind::kDimensionMismatch, "transform matrix must be n x n");
  }
  if (!is_unimodular(m)) fail(ErrorKind::kNotUnimodular, "transform matrix is not unimodular");
  if (lattice.rank() == 0) return lattice;
  return lattice_of(lattice.basis() * m);
}

namespace {

IntMatrix adjugate(const IntMatrix& a) {
  const std::size_t m = a.rows();
  IntMatrix adj(m, m);
  if (m == 1) {
    adj(0, 0) = 1;
    return adj;
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      // adj(i, j) = (-1)^(i+j) * det(a without row j and column i)
      IntMatrix minor(m - 1, m - 1);
      for (std::size_t r = 0, rr = 0; r < m; ++r) {
        if (r == j) continue;
        for (std::size_t c = 0, cc = 0; c < m; ++c) {
          if (c == i) continue;
          minor(rr, cc++) = a(r, c);
        }
        ++rr;
      }
      Integer d = determinant(minor);
      adj(i, j) = ((i + j) % 2) ? Integer(-d) : d;
    }
  }
  return adj;
}

}  // namespace

PlueckerData::PlueckerData(const IntMatrix& a) : matrix_(a) {
  if (rank(a) != a.rows()) fail(ErrorKind::kRankDeficient, "Pluecker test needs full row rank");
  if (a.rows() == 0) return;
  tuples_ = index_tuples(a.cols(), a.rows());
  coords_.reserve(tuples_.size());
  for (const auto& t : tuples_) coords_.push_back(determinant(a.select_cols(t)));
  while (sgn(coords_[first_nonzero_]) == 0) ++first_nonzero_;
  adjugate_ = adjugate(a.select_cols(tuples_[first_nonzero_]));
}

bool pluecker_equal(const PlueckerData& a, const PlueckerData& b) {
  if (a.matrix_.rows() != b.matrix_.rows() || a.matrix_.cols() != b.matrix_.cols()) {
    fail(ErrorKind::kDimensionMismatch, "Pluecker test needs matrices of equal shape");
  }
  if (a.matrix_.rows() == 0) return true;

  bool same = true;
  bool opposite = true;
  for (std::size_t k = 0; k < a.coords_.size() && (same || opposite); ++k) {
    const Integer& x = a.coords_[k];
    const Integer& y = b.coords_[k];
    if (same && x != y) same = false;
    if (opposite && cmpabs(x, y) != 0) opposite = false;
    if (opposite && sgn(x) != 0 && sgn(x) == sgn(y)) opposite = false;
  }
  if (!same && !opposite) return false;

  // B_I * adj(A_I) must be divisible by det(A_I) entrywise.
  const auto& tuple = a.tuples_[a.first_nonzero_];
  const Integer& det = a.coords_[a.first_nonzero_];
  IntMatrix product = b.matrix_.select_cols(tuple) * a.adjugate_;
  for (std::size_t i = 0; i < product.rows(); ++i) {
    for (std::size_t j = 0; j < product.cols(); ++j) {
      if (!mpz_divisible_p(product(i, j).get_mpz_t(), det.get_mpz_t())) return false;
    }
  }
  return true;
}

bool pluecker_equal(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    fail(ErrorKind::kDimensionMismatch, "Pluecker test needs matrices of equal shape");
  }
  return pluecker_equal(PlueckerData(a), PlueckerData(b));
}

namespace {

struct ColumnInvariant {
  Integer gcd;
  std::vector<Integer> factors_without;

  friend bool operator==(const ColumnInvariant&, const ColumnInvariant&) = default;
};

// Basis-independent data attached to one coordinate of a lattice: the
// generator of its coordinate projection, and the invariant factors of the
// projection forgetting that coordinate.
std::vector<ColumnInvariant> column_invariants(const RowLattice& lattice) {
  const IntMatrix& h = lattice.basis();
  const std::size_t n = h.cols();
  std::vector<ColumnInvariant> out(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < h.rows(); ++i) {
      mpz_gcd(out[j].gcd.get_mpz_t(), out[j].gcd.get_mpz_t(), h(i, j).get_mpz_t());
    }
    if (n > 1) {
      std::vector<std::size_t> others;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) others.push_back(k);
      out[j].factors_without = smith_normal_form(h.select_cols(others)).factors;
    }
  }
  return out;
}

class PermutationSearch {
 public:
  PermutationSearch(const IntMatrix& a, const IntMatrix& b)
      : la_(lattice_of(a)), lb_(lattice_of(b)), n_(a.cols()) {
    if (a.cols() != b.cols()) fail(ErrorKind::kDimensionMismatch, "matrices have different column counts");
    if (la_.rank() != lb_.rank()) {
      feasible_ = false;
      return;
    }
    const auto inv_a = column_invariants(la_);
    const auto inv_b = column_invariants(lb_);
    candidates_.resize(n_);
    for (std::size_t j = 0; j < n_; ++j) {
      for (std::size_t k = 0; k < n_; ++k) {
        if (inv_a[j] == inv_b[k]) candidates_[j].push_back(k);
      }
      if (candidates_[j].empty()) feasible_ = false;
    }
    std::vector<std::size_t> prefix;
    for (std::size_t k = 0; k < n_; ++k) {
      prefix.push_back(k);
      prefix_a_.push_back(project(la_, prefix));
    }
  }

  bool feasible() const { return feasible_; }
  const std::vector<std::size_t>& first_choices() const { return candidates_[0]; }

  // Lexicographically least completion with sigma[0] = first, if any.
  std::optional<Permutation> search_from(std::size_t first) const {
    Permutation sigma(n_);
    std::vector<bool> used(n_, false);
    sigma[0] = first;
    if (!prefix_matches(sigma, 0)) return std::nullopt;
    used[first] = true;
    if (extend(sigma, used, 1)) return sigma;
    return std::nullopt;
  }

 private:
  bool prefix_matches(const Permutation& sigma, std::size_t k) const {
    std::span<const std::size_t> cols(sigma.data(), k + 1);
    return project(lb_, cols) == prefix_a_[k];
  }

  bool extend(Permutation& sigma, std::vector<bool>& used, std::size_t k) const {
    if (k == n_) return true;
    for (std::size_t v : candidates_[k]) {
      if (used[v]) continue;
      sigma[k] = v;
      if (!prefix_matches(sigma, k)) continue;
      used[v] = true;
      if (extend(sigma, used, k + 1)) return true;
      used[v] = false;
    }
    return false;
  }

  RowLattice la_;
  RowLattice lb_;
  std::size_t n_;
  bool feasible_ = true;
  std::vector<std::vector<std::size_t>> candidates_;
  std::vector<RowLattice> prefix_a_;
};

}  // namespace

std::optional<Permutation> permuted_equal(const IntMatrix& a, const IntMatrix& b) {
  const PermutationSearch search(a, b);
  if (!search.feasible()) return std::nullopt;
  const auto& firsts = search.first_choices();
  const std::size_t branches = firsts.size();
  std::vector<std::optional<Permutation>> found(branches);
  std::atomic<std::size_t> best{std::numeric_limits<std::size_t>::max()};

#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t k = 0; k < branches; ++k) {
    if (k > best.load(std::memory_order_relaxed)) continue;
    found[k] = search.search_from(firsts[k]);
    if (found[k]) {
      std::size_t cur = best.load();
      while (k < cur && !best.compare_exchange_weak(cur, k)) {
      }
    }
  }
  for (auto& f : found) {
    if (f) return f;
  }
  return std::nullopt;
}

namespace serial {

std::optional<Permutation> permuted_equal(const IntMatrix& a, const IntMatrix& b) {
  const PermutationSearch search(a, b);
  if (!search.feasible()) return std::nullopt;
  for (std::size_t first : search.first_choices()) {
    if (auto sigma = search.search_from(first)) return sigma;
  }
  return std::nullopt;
}

}  // namespace serial

}  // namespace torusconj
