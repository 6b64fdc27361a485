#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "rbs/errors.hpp"
#include "rbs/linalg.hpp"
#include "rbs/matrix.hpp"
#include "rbs/tensor.hpp"

namespace rbs {

// First failing basis tuple of an axiom check, with the exact residual.
template <class K>
struct AxiomWitness {
  std::vector<std::size_t> indices;  // basis tuple, lexicographically first
  int identity = 0;                  // 1-based identity/axiom number; 0 if only one
  Vec<K> residual;                   // nonzero residual vector (or flattened matrix)
};

template <class K>
struct CheckReport {
  bool holds = true;
  std::optional<AxiomWitness<K>> witness;
};

// Finite-dimensional algebra with a bilinear bracket, stored through its
// structure constants: [e_i, e_j] = sum_k c(i,j,k) e_k.  Whether the
// bracket satisfies the Leibniz identity is decided by check_leibniz, not
// assumed.
template <class K>
struct LeibnizAlgebra {
  std::size_t dim = 0;
  Tensor<K> c;  // shape [dim, dim, dim]

  LeibnizAlgebra() = default;
  explicit LeibnizAlgebra(std::size_t d) : dim(d), c({d, d, d}) {}
  LeibnizAlgebra(std::size_t d, Tensor<K> t) : dim(d), c(std::move(t)) {
    if (c.shape() != std::vector<std::size_t>{d, d, d})
      throw input_error("structure tensor shape mismatch");
  }

  const K& cst(std::size_t i, std::size_t j, std::size_t k) const { return c.at({i, j, k}); }
  K& cst(std::size_t i, std::size_t j, std::size_t k) { return c.at({i, j, k}); }

  Vec<K> bracket_basis(std::size_t i, std::size_t j) const {
    Vec<K> r(dim);
    for (std::size_t k = 0; k < dim; ++k) r[k] = cst(i, j, k);
    return r;
  }

  Vec<K> bracket(const Vec<K>& x, const Vec<K>& y) const {
    if (x.size() != dim || y.size() != dim) throw input_error("bracket operand dimension mismatch");
    Vec<K> r(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      if (is_zero(x[i])) continue;
      for (std::size_t j = 0; j < dim; ++j) {
        if (is_zero(y[j])) continue;
        const K xy = x[i] * y[j];
        for (std::size_t k = 0; k < dim; ++k) {
          const K& cc = cst(i, j, k);
          if (!is_zero(cc)) r[k] += xy * cc;
        }
      }
    }
    return r;
  }

  // The bracket as a linear map g (x) g -> g; entry (k, i*dim+j) = c(i,j,k).
  Matrix<K> bracket_matrix() const {
    Matrix<K> m(dim, dim * dim);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j)
        for (std::size_t k = 0; k < dim; ++k) m(k, i * dim + j) = cst(i, j, k);
    return m;
  }

  static LeibnizAlgebra abelian(std::size_t d) { return LeibnizAlgebra(d); }
};

// Residual of the left Leibniz identity on basis indices:
// [e_i,[e_j,e_k]] - [[e_i,e_j],e_k] - [e_j,[e_i,e_k]].
template <class K>
Vec<K> leibniz_residual(const LeibnizAlgebra<K>& a, std::size_t i, std::size_t j, std::size_t k) {
  Vec<K> r(a.dim);
  for (std::size_t l = 0; l < a.dim; ++l) {
    const K& cjk = a.cst(j, k, l);
    if (!is_zero(cjk))
      for (std::size_t m = 0; m < a.dim; ++m) r[m] += cjk * a.cst(i, l, m);
    const K& cij = a.cst(i, j, l);
    if (!is_zero(cij))
      for (std::size_t m = 0; m < a.dim; ++m) r[m] -= cij * a.cst(l, k, m);
    const K& cik = a.cst(i, k, l);
    if (!is_zero(cik))
      for (std::size_t m = 0; m < a.dim; ++m) r[m] -= cik * a.cst(j, l, m);
  }
  return r;
}

template <class K>
CheckReport<K> check_leibniz(const LeibnizAlgebra<K>& a) {
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j)
      for (std::size_t k = 0; k < a.dim; ++k) {
        Vec<K> r = leibniz_residual(a, i, j, k);
        if (!is_zero_vec(r)) return {false, AxiomWitness<K>{{i, j, k}, 0, std::move(r)}};
      }
  return {};
}

// Two linear actions of the algebra on a module V, one matrix per basis
// vector of g.  The three compatibility axioms are decided by
// check_representation.
template <class K>
struct Representation {
  std::size_t dimV = 0;
  std::vector<Matrix<K>> rhoL;  // size dim(g), each dimV x dimV
  std::vector<Matrix<K>> rhoR;

  // rho(x) = sum_i x_i rho(e_i)
  static Matrix<K> action(const std::vector<Matrix<K>>& rho, const Vec<K>& x) {
    Matrix<K> m(rho.empty() ? 0 : rho[0].rows(), rho.empty() ? 0 : rho[0].cols());
    for (std::size_t i = 0; i < rho.size(); ++i)
      if (!is_zero(x[i])) m = m + x[i] * rho[i];
    return m;
  }

  Vec<K> actL(const Vec<K>& x, const Vec<K>& v) const {
    Vec<K> r(dimV);
    for (std::size_t i = 0; i < x.size(); ++i)
      if (!is_zero(x[i])) r = add_vec(std::move(r), scale_vec(rhoL[i].apply(v), x[i]));
    return r;
  }

  Vec<K> actR(const Vec<K>& x, const Vec<K>& v) const {
    Vec<K> r(dimV);
    for (std::size_t i = 0; i < x.size(); ++i)
      if (!is_zero(x[i])) r = add_vec(std::move(r), scale_vec(rhoR[i].apply(v), x[i]));
    return r;
  }

  static Representation zero(std::size_t dimg, std::size_t dimv) {
    Representation rep;
    rep.dimV = dimv;
    rep.rhoL.assign(dimg, Matrix<K>(dimv, dimv));
    rep.rhoR.assign(dimg, Matrix<K>(dimv, dimv));
    return rep;
  }
};

template <class K>
void require_compatible(const LeibnizAlgebra<K>& a, const Representation<K>& rep) {
  if (rep.rhoL.size() != a.dim || rep.rhoR.size() != a.dim)
    throw input_error("representation family count differs from algebra dimension");
  for (const auto* fam : {&rep.rhoL, &rep.rhoR})
    for (const Matrix<K>& m : *fam)
      if (m.rows() != rep.dimV || m.cols() != rep.dimV)
        throw input_error("representation matrix is not dimV x dimV");
}

template <class K>
Vec<K> flatten_matrix(const Matrix<K>& m) {
  Vec<K> v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
  return v;
}

// Checks the three module axioms on all basis pairs:
//   (1) rhoL([e_i,e_j]) = [rhoL_i, rhoL_j]
//   (2) rhoR([e_i,e_j]) = [rhoL_i, rhoR_j]
//   (3) rhoR_j rhoL_i = -rhoR_j rhoR_i
template <class K>
CheckReport<K> check_representation(const LeibnizAlgebra<K>& a, const Representation<K>& rep) {
  require_compatible(a, rep);
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j) {
      Matrix<K> bl = Representation<K>::action(rep.rhoL, a.bracket_basis(i, j));
      Matrix<K> br = Representation<K>::action(rep.rhoR, a.bracket_basis(i, j));
      Matrix<K> r1 = bl - (rep.rhoL[i] * rep.rhoL[j] - rep.rhoL[j] * rep.rhoL[i]);
      if (!r1.is_zero()) return {false, AxiomWitness<K>{{i, j}, 1, flatten_matrix(r1)}};
      Matrix<K> r2 = br - (rep.rhoL[i] * rep.rhoR[j] - rep.rhoR[j] * rep.rhoL[i]);
      if (!r2.is_zero()) return {false, AxiomWitness<K>{{i, j}, 2, flatten_matrix(r2)}};
      Matrix<K> r3 = rep.rhoR[j] * rep.rhoL[i] + rep.rhoR[j] * rep.rhoR[i];
      if (!r3.is_zero()) return {false, AxiomWitness<K>{{i, j}, 3, flatten_matrix(r3)}};
    }
  return {};
}

// Left/right multiplication operators on g itself:
// L_i e_j = [e_i, e_j], R_i e_j = [e_j, e_i].
template <class K>
Representation<K> regular_rep(const LeibnizAlgebra<K>& a) {
  Representation<K> rep;
  rep.dimV = a.dim;
  rep.rhoL.assign(a.dim, Matrix<K>(a.dim, a.dim));
  rep.rhoR.assign(a.dim, Matrix<K>(a.dim, a.dim));
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j)
      for (std::size_t k = 0; k < a.dim; ++k) {
        rep.rhoL[i](k, j) = a.cst(i, j, k);
        rep.rhoR[i](k, j) = a.cst(j, i, k);
      }
  return rep;
}

// Action on the dual space: the pair (L*, -L*-R*) in the dual basis, where
// L*_i = -(L_i)^T and R*_i = -(R_i)^T.
template <class K>
Representation<K> dual_regular_rep(const LeibnizAlgebra<K>& a) {
  Representation<K> reg = regular_rep(a);
  Representation<K> rep;
  rep.dimV = a.dim;
  rep.rhoL.reserve(a.dim);
  rep.rhoR.reserve(a.dim);
  for (std::size_t i = 0; i < a.dim; ++i) {
    Matrix<K> lt = reg.rhoL[i].transpose();
    Matrix<K> rt = reg.rhoR[i].transpose();
    rep.rhoL.push_back(-lt);        // L*
    rep.rhoR.push_back(lt + rt);    // -L* - R* = L^T + R^T
  }
  return rep;
}

template <class K>
struct BilinearForm {
  std::size_t dim = 0;
  Matrix<K> omega;  // omega(e_i, e_j) = omega(i, j)
};

template <class K>
struct QuadraticReport {
  bool holds = false;
  bool nondegenerate = false;
  bool invariant = false;
  std::optional<AxiomWitness<K>> witness;  // first failing invariance triple
  std::optional<Matrix<K>> iso;            // matrix of x -> omega(x, .) in the dual basis
};

// Decides whether omega makes the algebra quadratic: omega nondegenerate
// and omega(x,[y,z]) = omega([x,z]+[z,x], y) on all basis triples.  On
// success returns the induced isomorphism g -> g* and verifies that it
// intertwines the regular representation with its dual.
template <class K>
QuadraticReport<K> quadratic_structure(const LeibnizAlgebra<K>& a, const BilinearForm<K>& form) {
  if (form.dim != a.dim || form.omega.rows() != a.dim || form.omega.cols() != a.dim)
    throw input_error("bilinear form dimension mismatch");
  if (!(form.omega.transpose() == -form.omega)) throw input_error("bilinear form is not skew-symmetric");

  QuadraticReport<K> rep;
  rep.nondegenerate = mat_rank(form.omega) == a.dim;

  rep.invariant = true;
  for (std::size_t i = 0; i < a.dim && rep.invariant; ++i)
    for (std::size_t j = 0; j < a.dim && rep.invariant; ++j)
      for (std::size_t k = 0; k < a.dim; ++k) {
        // omega(e_i, [e_j, e_k]) vs omega([e_i,e_k] + [e_k,e_i], e_j)
        K lhs{}, rhs{};
        for (std::size_t l = 0; l < a.dim; ++l) {
          lhs += a.cst(j, k, l) * form.omega(i, l);
          rhs += (a.cst(i, k, l) + a.cst(k, i, l)) * form.omega(l, j);
        }
        K diff = lhs - rhs;
        if (!is_zero(diff)) {
          rep.invariant = false;
          rep.witness = AxiomWitness<K>{{i, j, k}, 0, {std::move(diff)}};
          break;
        }
      }

  rep.holds = rep.nondegenerate && rep.invariant;
  if (rep.holds) {
    // Column i of the isomorphism holds the dual-basis coordinates of
    // omega(e_i, .), i.e. entry (j, i) = omega(e_i, e_j).
    Matrix<K> w = form.omega.transpose();
    Representation<K> reg = regular_rep(a);
    Representation<K> dual = dual_regular_rep(a);
    for (std::size_t i = 0; i < a.dim; ++i) {
      if (!(w * reg.rhoL[i] == dual.rhoL[i] * w) || !(w * reg.rhoR[i] == dual.rhoR[i] * w))
        throw std::logic_error("quadratic form isomorphism fails to intertwine the actions");
    }
    rep.iso = std::move(w);
  }
  return rep;
}

// Bracket on (g copy 1) + (g copy 2) + V:
//   [x1+x2+u, y1+y2+v] = [x1,y1] + [x2,y2] + rhoL(x1)v + rhoR(y2)u.
// The construction is purely structural; whether the result satisfies the
// Leibniz identity is decided by check_leibniz on the output.
template <class K>
LeibnizAlgebra<K> semidirect_sum(const LeibnizAlgebra<K>& a, const Representation<K>& rep) {
  require_compatible(a, rep);
  const std::size_t dg = a.dim, dv = rep.dimV, n = 2 * dg + dv;
  LeibnizAlgebra<K> b(n);
  for (std::size_t i = 0; i < dg; ++i)
    for (std::size_t j = 0; j < dg; ++j)
      for (std::size_t k = 0; k < dg; ++k) {
        b.cst(i, j, k) = a.cst(i, j, k);
        b.cst(dg + i, dg + j, dg + k) = a.cst(i, j, k);
      }
  for (std::size_t i = 0; i < dg; ++i)
    for (std::size_t u = 0; u < dv; ++u)
      for (std::size_t w = 0; w < dv; ++w) {
        b.cst(i, 2 * dg + u, 2 * dg + w) = rep.rhoL[i](w, u);
        b.cst(2 * dg + u, dg + i, 2 * dg + w) = rep.rhoR[i](w, u);
      }
  return b;
}

// Space with two bilinear products, "left" for -| and "right" for |-.
template <class K>
struct Dialgebra {
  std::size_t dim = 0;
  Tensor<K> left;   // a -| b = sum_k left(i,j,k) e_k
  Tensor<K> right;  // a |- b

  Dialgebra() = default;
  explicit Dialgebra(std::size_t d) : dim(d), left({d, d, d}), right({d, d, d}) {}

  Vec<K> prod(const Tensor<K>& t, std::size_t i, std::size_t j) const {
    Vec<K> r(dim);
    for (std::size_t k = 0; k < dim; ++k) r[k] = t.at({i, j, k});
    return r;
  }

  Vec<K> apply_prod(const Tensor<K>& t, const Vec<K>& x, const Vec<K>& y) const {
    Vec<K> r(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      if (is_zero(x[i])) continue;
      for (std::size_t j = 0; j < dim; ++j) {
        if (is_zero(y[j])) continue;
        const K xy = x[i] * y[j];
        for (std::size_t k = 0; k < dim; ++k) {
          const K& cc = t.at({i, j, k});
          if (!is_zero(cc)) r[k] += xy * cc;
        }
      }
    }
    return r;
  }
};

// The five compatibility axioms between -| and |-, checked on basis
// triples (a, b, c):
//   (1) a -| (b -| c) = (a -| b) -| c
//   (2) (a -| b) -| c = a -| (b |- c)
//   (3) (a |- b) -| c = a |- (b -| c)
//   (4) (a -| b) |- c = (a |- b) |- c
//   (5) (a |- b) |- c = a |- (b |- c)
template <class K>
CheckReport<K> check_dialgebra(const Dialgebra<K>& d) {
  if (d.left.shape() != std::vector<std::size_t>{d.dim, d.dim, d.dim} ||
      d.right.shape() != std::vector<std::size_t>{d.dim, d.dim, d.dim})
    throw input_error("dialgebra tensor shape mismatch");
  auto ei = [&](std::size_t i) {
    Vec<K> v(d.dim);
    v[i] = K(1);
    return v;
  };
  for (std::size_t i = 0; i < d.dim; ++i)
    for (std::size_t j = 0; j < d.dim; ++j)
      for (std::size_t k = 0; k < d.dim; ++k) {
        const Vec<K> a = ei(i), b = ei(j), c = ei(k);
        Vec<K> ldl = d.apply_prod(d.left, a, d.prod(d.left, j, k));    // a -| (b -| c)
        Vec<K> lld = d.apply_prod(d.left, d.prod(d.left, i, j), c);    // (a -| b) -| c
        Vec<K> ldr = d.apply_prod(d.left, a, d.prod(d.right, j, k));   // a -| (b |- c)
        Vec<K> rld = d.apply_prod(d.left, d.prod(d.right, i, j), c);   // (a |- b) -| c
        Vec<K> lrd = d.apply_prod(d.right, a, d.prod(d.left, j, k));   // a |- (b -| c)
        Vec<K> dlr = d.apply_prod(d.right, d.prod(d.left, i, j), c);   // (a -| b) |- c
        Vec<K> rlr = d.apply_prod(d.right, d.prod(d.right, i, j), c);  // (a |- b) |- c
        Vec<K> rrr = d.apply_prod(d.right, a, d.prod(d.right, j, k));  // a |- (b |- c)
        const std::pair<Vec<K>, Vec<K>> eqs[5] = {
            {ldl, lld}, {lld, ldr}, {rld, lrd}, {dlr, rlr}, {rlr, rrr}};
        for (int e = 0; e < 5; ++e) {
          Vec<K> r = sub_vec(eqs[e].first, eqs[e].second);
          if (!is_zero_vec(r)) return {false, AxiomWitness<K>{{i, j, k}, e + 1, std::move(r)}};
        }
      }
  return {};
}

// The bracket [a, b] = a |- b - b -| a.
template <class K>
LeibnizAlgebra<K> dialgebra_to_leibniz(const Dialgebra<K>& d) {
  if (!check_dialgebra(d).holds) throw precondition_error("dialgebra axioms fail");
  LeibnizAlgebra<K> a(d.dim);
  for (std::size_t i = 0; i < d.dim; ++i)
    for (std::size_t j = 0; j < d.dim; ++j)
      for (std::size_t k = 0; k < d.dim; ++k)
        a.cst(i, j, k) = d.right.at({i, j, k}) - d.left.at({j, i, k});
  return a;
}

// A bracket is nondegenerate when it has no nonzero one-sided annihilator:
// [x, y] = 0 for all y forces x = 0, and symmetrically on the right.
template <class K>
bool is_nondegenerate(const LeibnizAlgebra<K>& a) {
  Matrix<K> lhs(a.dim * a.dim, a.dim), rhs(a.dim * a.dim, a.dim);
  for (std::size_t j = 0; j < a.dim; ++j)
    for (std::size_t k = 0; k < a.dim; ++k)
      for (std::size_t i = 0; i < a.dim; ++i) {
        lhs(j * a.dim + k, i) = a.cst(i, j, k);  // x in slot 1
        rhs(j * a.dim + k, i) = a.cst(j, i, k);  // y in slot 2
      }
  return mat_rank(lhs) == a.dim && mat_rank(rhs) == a.dim;
}

}  // namespace rbs
