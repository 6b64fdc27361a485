#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "rbs/algebra.hpp"
#include "rbs/errors.hpp"
#include "rbs/matrix.hpp"
#include "rbs/tensor.hpp"

namespace rbs {

// A permutation of {0..i+j-1} (position -> value) together with its sign.
struct Shuffle {
  std::vector<std::size_t> perm;
  int sign = 1;
};

// All permutations ascending on the first i positions and on the last j
// positions, enumerated deterministically (lexicographic in the first
// block's value set).  For i = 0 or j = 0 this is exactly the identity.
std::vector<Shuffle> shuffles(std::size_t i, std::size_t j);

// A multilinear map M^(x arity) -> M as a dense coefficient tensor whose
// last axis indexes the output basis.
template <class K>
struct MultiMap {
  std::size_t arity = 1;
  std::size_t dimM = 0;
  Tensor<K> t;  // shape [dimM]^(arity+1)

  MultiMap() = default;
  MultiMap(std::size_t ar, std::size_t dm)
      : arity(ar), dimM(dm), t(std::vector<std::size_t>(ar + 1, dm)) {
    if (ar < 1) throw input_error("multilinear map arity must be at least 1");
  }

  static MultiMap from_algebra(const LeibnizAlgebra<K>& a) {
    MultiMap m(2, a.dim);
    m.t = a.c;
    return m;
  }

  static MultiMap from_matrix(const Matrix<K>& mat) {
    if (mat.rows() != mat.cols()) throw input_error("arity-1 map must be square");
    MultiMap m(1, mat.rows());
    for (std::size_t j = 0; j < mat.cols(); ++j)
      for (std::size_t k = 0; k < mat.rows(); ++k) m.t.at({j, k}) = mat(k, j);
    return m;
  }

  bool is_zero() const { return t.is_zero(); }

  friend MultiMap operator+(MultiMap a, const MultiMap& b) {
    a.t = a.t + b.t;
    return a;
  }

  friend MultiMap operator-(MultiMap a, const MultiMap& b) {
    a.t = a.t - b.t;
    return a;
  }

  friend MultiMap operator*(const K& c, MultiMap a) {
    a.t = c * a.t;
    return a;
  }

  friend bool operator==(const MultiMap& a, const MultiMap& b) {
    return a.arity == b.arity && a.dimM == b.dimM && a.t == b.t;
  }
};

namespace detail {

template <class K>
struct SparseEntry {
  std::vector<std::size_t> idx;  // inputs then output, length arity+1
  K value;
};

template <class K>
std::vector<SparseEntry<K>> sparse_entries(const MultiMap<K>& m) {
  std::vector<SparseEntry<K>> out;
  m.t.for_each_nonzero(
      [&](const std::vector<std::size_t>& idx, const K& v) { out.push_back({idx, v}); });
  return out;
}

}  // namespace detail

namespace detail {

// Adds outer_sign * (f o_k g) into an already-sized accumulator tensor.
// Shared by the composition entry points below so that a full bracket
// touches one dense output tensor instead of allocating one per term.
template <class K>
void accumulate_compose_k(MultiMap<K>& out, int outer_sign, const MultiMap<K>& f,
                          const MultiMap<K>& g, std::size_t k) {
  if (f.dimM != g.dimM) throw input_error("multilinear map dimension mismatch");
  const std::size_t af = f.arity, ag = g.arity, q = ag - 1;
  if (k < 1 || k > af) throw input_error("insertion slot out of range");

  const auto fe = sparse_entries(f);
  const auto ge = sparse_entries(g);
  const auto shs = shuffles(k - 1, q);

  std::vector<std::size_t> x(af + ag - 1 + 1);
  for (const auto& F : fe)
    for (const auto& G : ge) {
      if (F.idx[k - 1] != G.idx[ag]) continue;  // f's k-th slot consumes g's output
      const K fg = F.value * G.value;
      for (const Shuffle& sh : shs) {
        for (std::size_t t = 0; t + 1 < k; ++t) x[sh.perm[t]] = F.idx[t];
        for (std::size_t s = 0; s < q; ++s) x[sh.perm[k - 1 + s]] = G.idx[s];
        x[k + q - 1] = G.idx[q];
        for (std::size_t t = k; t < af; ++t) x[t + q] = F.idx[t];
        x[af + ag - 1] = F.idx[af];
        K& cell = out.t.at(x);
        cell += (outer_sign * sh.sign > 0) ? fg : -fg;
      }
    }
}

}  // namespace detail

// Insertion of g into the k-th slot of f (k is 1-based), alternating over
// the shuffles that interleave g's inputs with f's earlier inputs:
//
//   (f o_k g)(x_1,...) = sum_sigma sign(sigma)
//       f(x_{s(1)},...,x_{s(k-1)}, g(x_{s(k)},...,x_{s(k+q-1)}, x_{k+q}),
//         x_{k+q+1}, ..., x_{p+q+1})
//
// where f has arity p+1, g has arity q+1 and sigma runs over the
// (k-1, q)-shuffles.
template <class K>
MultiMap<K> compose_k(const MultiMap<K>& f, const MultiMap<K>& g, std::size_t k) {
  if (f.dimM != g.dimM) throw input_error("multilinear map dimension mismatch");
  MultiMap<K> out(f.arity + g.arity - 1, f.dimM);
  detail::accumulate_compose_k(out, 1, f, g, k);
  return out;
}

// f o-bar g = sum_k (-1)^{(k-1)q} (f o_k g).
template <class K>
MultiMap<K> bar_compose(const MultiMap<K>& f, const MultiMap<K>& g) {
  if (f.dimM != g.dimM) throw input_error("multilinear map dimension mismatch");
  const std::size_t q = g.arity - 1;
  MultiMap<K> acc(f.arity + g.arity - 1, f.dimM);
  for (std::size_t k = 1; k <= f.arity; ++k)
    detail::accumulate_compose_k(acc, ((k - 1) * q % 2 == 0) ? 1 : -1, f, g, k);
  return acc;
}

// [f, g] = f o-bar g - (-1)^{pq} g o-bar f, the degree -1 graded Lie
// bracket on multilinear maps.
template <class K>
MultiMap<K> balavoine_bracket(const MultiMap<K>& f, const MultiMap<K>& g) {
  if (f.dimM != g.dimM) throw input_error("multilinear map dimension mismatch");
  const std::size_t p = f.arity - 1, q = g.arity - 1;
  MultiMap<K> acc(f.arity + g.arity - 1, f.dimM);
  for (std::size_t k = 1; k <= f.arity; ++k)
    detail::accumulate_compose_k(acc, ((k - 1) * q % 2 == 0) ? 1 : -1, f, g, k);
  const int flip = (p * q % 2 == 0) ? -1 : 1;
  for (std::size_t k = 1; k <= g.arity; ++k)
    detail::accumulate_compose_k(acc, flip * (((k - 1) * p % 2 == 0) ? 1 : -1), g, f, k);
  return acc;
}

}  // namespace rbs
