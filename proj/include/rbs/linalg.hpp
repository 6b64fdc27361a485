#pragma once

#include <optional>
#include <vector>

#include "rbs/matrix.hpp"

namespace rbs {

template <class K>
struct RrefResult {
  Matrix<K> m;
  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
};

// Reduced row echelon form by exact Gauss-Jordan elimination.
template <class K>
RrefResult<K> rref(Matrix<K> a) {
  RrefResult<K> res;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && is_zero(a(piv, c))) ++piv;
    if (piv == a.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(piv, j), a(r, j));
    K inv_p = K(1) / a(r, c);
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv_p;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || is_zero(a(i, c))) continue;
      K f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    res.pivot_cols.push_back(c);
    ++r;
  }
  res.rank = r;
  res.m = std::move(a);
  return res;
}

template <class K>
std::size_t rank_via_rref(const Matrix<K>& a) {
  return rref(a).rank;
}

// Fraction-free (Bareiss) elimination on an integer matrix; every division
// is exact, which keeps intermediate entries small.  Used for rational rank
// after clearing denominators row by row.
std::size_t bareiss_rank(std::vector<std::vector<Int>> a);

inline std::size_t mat_rank(const Matrix<Rational>& a) {
  std::vector<std::vector<Int>> w(a.rows(), std::vector<Int>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Int lcm = 1;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Int d = denominator(a(i, j));
      lcm = lcm / gcd(lcm, d) * d;
    }
    for (std::size_t j = 0; j < a.cols(); ++j)
      w[i][j] = numerator(a(i, j)) * (lcm / denominator(a(i, j)));
  }
  return bareiss_rank(std::move(w));
}

inline std::size_t mat_rank(const Matrix<Fp>& a) { return rank_via_rref(a); }

template <class K>
struct AffineSolution {
  // Empty when the system is inconsistent.
  std::optional<Vec<K>> particular;
  // Basis of the homogeneous kernel, one vector per free column, ordered by
  // ascending free-column index.
  std::vector<Vec<K>> kernel;

  bool consistent() const { return particular.has_value(); }
};

// Solves A x = b exactly, returning a particular solution and a kernel
// basis.  The kernel is computed even when the system is inconsistent.
template <class K>
AffineSolution<K> solve_affine(const Matrix<K>& a, const Vec<K>& b) {
  if (b.size() != a.rows()) throw input_error("solve_affine: rhs length mismatch");
  Matrix<K> aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  RrefResult<K> r = rref(std::move(aug));

  AffineSolution<K> sol;
  std::vector<bool> is_pivot(a.cols(), false);
  bool inconsistent = false;
  std::vector<std::size_t> pivots;
  for (std::size_t t = 0; t < r.pivot_cols.size(); ++t) {
    if (r.pivot_cols[t] == a.cols())
      inconsistent = true;
    else {
      is_pivot[r.pivot_cols[t]] = true;
      pivots.push_back(r.pivot_cols[t]);
    }
  }
  for (std::size_t c = 0; c < a.cols(); ++c) {
    if (is_pivot[c]) continue;
    Vec<K> v(a.cols());
    v[c] = K(1);
    for (std::size_t t = 0; t < pivots.size(); ++t) v[pivots[t]] = -r.m(t, c);
    sol.kernel.push_back(std::move(v));
  }
  if (!inconsistent) {
    Vec<K> x(a.cols());
    for (std::size_t t = 0; t < pivots.size(); ++t) x[pivots[t]] = r.m(t, a.cols());
    sol.particular = std::move(x);
  }
  return sol;
}

template <class K>
std::optional<Matrix<K>> inverse(const Matrix<K>& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  std::size_t n = a.rows();
  Matrix<K> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = K(1);
  }
  RrefResult<K> r = rref(std::move(aug));
  if (r.rank < n || r.pivot_cols[n - 1] != n - 1) return std::nullopt;
  Matrix<K> inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.m(i, n + j);
  return inv;
}

}  // namespace rbs
