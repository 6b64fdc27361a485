#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "rbs/algebra.hpp"
#include "rbs/errors.hpp"
#include "rbs/linalg.hpp"
#include "rbs/matrix.hpp"

namespace rbs {

// A candidate pair of linear maps V -> g in the chosen bases.  No identity
// is assumed; check_rbs decides.
template <class K>
struct RbsPair {
  Matrix<K> R, S;  // dim(g) x dim(V)

  static RbsPair zero(std::size_t dg, std::size_t dv) { return {Matrix<K>(dg, dv), Matrix<K>(dg, dv)}; }

  friend RbsPair operator+(const RbsPair& a, const RbsPair& b) { return {a.R + b.R, a.S + b.S}; }
  friend RbsPair operator-(const RbsPair& a, const RbsPair& b) { return {a.R - b.R, a.S - b.S}; }
  friend bool operator==(const RbsPair& a, const RbsPair& b) { return a.R == b.R && a.S == b.S; }
};

template <class K>
void require_pair_dims(const LeibnizAlgebra<K>& a, const Representation<K>& rep, const RbsPair<K>& p) {
  require_compatible(a, rep);
  if (p.R.rows() != a.dim || p.R.cols() != rep.dimV || p.S.rows() != a.dim || p.S.cols() != rep.dimV)
    throw input_error("pair matrices must be dim(g) x dim(V)");
}

// The common right-hand argument rhoL(R eps_a) eps_b + rhoR(S eps_b) eps_a
// of both defining identities, as a vector in V.
template <class K>
Vec<K> rbs_inner(const Representation<K>& rep, const RbsPair<K>& p, std::size_t a_idx, std::size_t b_idx) {
  Vec<K> inner(rep.dimV);
  for (std::size_t i = 0; i < p.R.rows(); ++i) {
    if (!is_zero(p.R(i, a_idx)))
      inner = add_vec(std::move(inner), scale_vec(rep.rhoL[i].col(b_idx), p.R(i, a_idx)));
    if (!is_zero(p.S(i, b_idx)))
      inner = add_vec(std::move(inner), scale_vec(rep.rhoR[i].col(a_idx), p.S(i, b_idx)));
  }
  return inner;
}

// Decides the two coupled identities
//   [Ru, Rv] = R(rhoL(Ru)v + rhoR(Sv)u)
//   [Su, Sv] = S(rhoL(Ru)v + rhoR(Sv)u)
// on all basis pairs (u, v) of V; the first failing (u, v, identity) in
// lexicographic order is reported.
template <class K>
CheckReport<K> check_rbs(const LeibnizAlgebra<K>& alg, const Representation<K>& rep, const RbsPair<K>& p) {
  require_pair_dims(alg, rep, p);
  for (std::size_t a = 0; a < rep.dimV; ++a)
    for (std::size_t b = 0; b < rep.dimV; ++b) {
      Vec<K> inner = rbs_inner(rep, p, a, b);
      Vec<K> r1 = sub_vec(alg.bracket(p.R.col(a), p.R.col(b)), p.R.apply(inner));
      if (!is_zero_vec(r1)) return {false, AxiomWitness<K>{{a, b}, 1, std::move(r1)}};
      Vec<K> r2 = sub_vec(alg.bracket(p.S.col(a), p.S.col(b)), p.S.apply(inner));
      if (!is_zero_vec(r2)) return {false, AxiomWitness<K>{{a, b}, 2, std::move(r2)}};
    }
  return {};
}

// Block extensions of R and S to the space (g copy 1) + (g copy 2) + V:
// the first kills everything but V, which it sends into copy 1 through R;
// the second sends V into copy 2 through S.
template <class K>
std::pair<Matrix<K>, Matrix<K>> lift_to_semidirect(const LeibnizAlgebra<K>& alg,
                                                   const Representation<K>& rep,
                                                   const RbsPair<K>& p) {
  require_pair_dims(alg, rep, p);
  const std::size_t dg = alg.dim, dv = rep.dimV, n = 2 * dg + dv;
  Matrix<K> rt(n, n), st(n, n);
  for (std::size_t k = 0; k < dg; ++k)
    for (std::size_t a = 0; a < dv; ++a) {
      rt(k, 2 * dg + a) = p.R(k, a);
      st(dg + k, 2 * dg + a) = p.S(k, a);
    }
  return {std::move(rt), std::move(st)};
}

// [Nx, Ny] = N([Nx, y] + [x, Ny] - N[x, y]) on all basis pairs.
template <class K>
CheckReport<K> nijenhuis_check(const LeibnizAlgebra<K>& alg, const Matrix<K>& n) {
  if (n.rows() != alg.dim || n.cols() != alg.dim)
    throw input_error("endomorphism must be square of the algebra dimension");
  auto ei = [&](std::size_t i) {
    Vec<K> v(alg.dim);
    v[i] = K(1);
    return v;
  };
  for (std::size_t i = 0; i < alg.dim; ++i)
    for (std::size_t j = 0; j < alg.dim; ++j) {
      Vec<K> ni = n.col(i), nj = n.col(j);
      Vec<K> lhs = alg.bracket(ni, nj);
      Vec<K> inner = add_vec(alg.bracket(ni, ei(j)), alg.bracket(ei(i), nj));
      inner = sub_vec(std::move(inner), n.apply(alg.bracket_basis(i, j)));
      Vec<K> r = sub_vec(std::move(lhs), n.apply(inner));
      if (!is_zero_vec(r)) return {false, AxiomWitness<K>{{i, j}, 0, std::move(r)}};
    }
  return {};
}

// The strictly upper-triangular block map sending V to both g copies
// through R and S.
template <class K>
Matrix<K> build_nijenhuis(const RbsPair<K>& p) {
  const std::size_t dg = p.R.rows(), dv = p.R.cols(), n = 2 * dg + dv;
  Matrix<K> m(n, n);
  for (std::size_t k = 0; k < dg; ++k)
    for (std::size_t a = 0; a < dv; ++a) {
      m(k, 2 * dg + a) = p.R(k, a);
      m(dg + k, 2 * dg + a) = p.S(k, a);
    }
  return m;
}

// Decides whether a pair (Phi, Psi) of invertible maps g -> V satisfies
//   Phi([x,y]) = rhoL(x)Phi(y) + rhoR(Psi^{-1} Phi(y)) Phi(x)
//   Psi([x,y]) = rhoL(Phi^{-1} Psi(x)) Psi(y) + rhoR(y) Psi(x)
// on all basis pairs of g.  Singular Phi/Psi or a dimension mismatch is a
// failed hypothesis, not an identity failure.
template <class K>
CheckReport<K> check_1cocycle_system(const LeibnizAlgebra<K>& alg, const Representation<K>& rep,
                                     const Matrix<K>& phi, const Matrix<K>& psi) {
  require_compatible(alg, rep);
  if (alg.dim != rep.dimV) throw precondition_error("1-cocycle systems require dim(g) = dim(V)");
  if (phi.rows() != rep.dimV || phi.cols() != alg.dim || psi.rows() != rep.dimV || psi.cols() != alg.dim)
    throw input_error("cocycle maps must be dim(V) x dim(g)");
  std::optional<Matrix<K>> phi_inv = inverse(phi), psi_inv = inverse(psi);
  if (!phi_inv || !psi_inv) throw precondition_error("cocycle maps must be invertible");

  for (std::size_t i = 0; i < alg.dim; ++i)
    for (std::size_t j = 0; j < alg.dim; ++j) {
      Vec<K> br = alg.bracket_basis(i, j);
      {
        Vec<K> rhs = rep.rhoL[i].apply(phi.col(j));
        rhs = add_vec(std::move(rhs), rep.actR(psi_inv->apply(phi.col(j)), phi.col(i)));
        Vec<K> r = sub_vec(phi.apply(br), std::move(rhs));
        if (!is_zero_vec(r)) return {false, AxiomWitness<K>{{i, j}, 1, std::move(r)}};
      }
      {
        Vec<K> rhs = rep.actL(phi_inv->apply(psi.col(i)), psi.col(j));
        rhs = add_vec(std::move(rhs), rep.rhoR[j].apply(psi.col(i)));
        Vec<K> r = sub_vec(psi.apply(br), std::move(rhs));
        if (!is_zero_vec(r)) return {false, AxiomWitness<K>{{i, j}, 2, std::move(r)}};
      }
    }
  return {};
}

// Composes a pair of maps g* -> g with the isomorphism g -> g* induced by a
// quadratic form, producing a pair of endomorphisms of g.
template <class K>
RbsPair<K> quadratic_transport(const LeibnizAlgebra<K>& alg, const BilinearForm<K>& form,
                               const RbsPair<K>& pair_on_dual) {
  QuadraticReport<K> q = quadratic_structure(alg, form);
  if (!q.holds) throw precondition_error("form is not a quadratic structure for this algebra");
  if (pair_on_dual.R.rows() != alg.dim || pair_on_dual.R.cols() != alg.dim ||
      pair_on_dual.S.rows() != alg.dim || pair_on_dual.S.cols() != alg.dim)
    throw input_error("dual pair matrices must be dim(g) x dim(g)");
  return {pair_on_dual.R * *q.iso, pair_on_dual.S * *q.iso};
}

template <class K>
struct WeightedReport {
  bool is_weighted = false;
  std::optional<AxiomWitness<K>> witness;
  // (R, R + lambda Id) and (R + lambda Id, R), present when is_weighted.
  std::optional<std::pair<RbsPair<K>, RbsPair<K>>> systems;
};

// Checks [Rx, Ry] = R([Rx,y] + [x,Ry] + lambda [x,y]) on basis pairs; on
// success returns the two derived pairs of endomorphisms.
template <class K>
WeightedReport<K> weighted_to_systems(const LeibnizAlgebra<K>& alg, const Matrix<K>& r, const K& lambda) {
  if (r.rows() != alg.dim || r.cols() != alg.dim)
    throw input_error("endomorphism must be square of the algebra dimension");
  auto ei = [&](std::size_t i) {
    Vec<K> v(alg.dim);
    v[i] = K(1);
    return v;
  };
  WeightedReport<K> rep;
  rep.is_weighted = true;
  for (std::size_t i = 0; i < alg.dim && rep.is_weighted; ++i)
    for (std::size_t j = 0; j < alg.dim; ++j) {
      Vec<K> inner = add_vec(alg.bracket(r.col(i), ei(j)), alg.bracket(ei(i), r.col(j)));
      inner = add_vec(std::move(inner), scale_vec(alg.bracket_basis(i, j), lambda));
      Vec<K> res = sub_vec(alg.bracket(r.col(i), r.col(j)), r.apply(inner));
      if (!is_zero_vec(res)) {
        rep.is_weighted = false;
        rep.witness = AxiomWitness<K>{{i, j}, 0, std::move(res)};
        break;
      }
    }
  if (rep.is_weighted) {
    Matrix<K> shifted = r + lambda * Matrix<K>::identity(alg.dim);
    rep.systems = std::make_pair(RbsPair<K>{r, shifted}, RbsPair<K>{shifted, r});
  }
  return rep;
}

template <class K>
struct GlLinearReport {
  bool r_left_linear = false;   // R[x,y] = [x, Ry]
  bool s_right_linear = false;  // S[x,y] = [Sx, y]
  bool criterion_holds = false; // [x, RS y] = 0 = [SR x, y]
  bool rbs_holds = false;       // pair check against the regular actions
};

template <class K>
GlLinearReport<K> gl_linear_criterion(const LeibnizAlgebra<K>& alg, const Matrix<K>& r, const Matrix<K>& s) {
  if (r.rows() != alg.dim || r.cols() != alg.dim || s.rows() != alg.dim || s.cols() != alg.dim)
    throw input_error("endomorphisms must be square of the algebra dimension");
  auto ei = [&](std::size_t i) {
    Vec<K> v(alg.dim);
    v[i] = K(1);
    return v;
  };
  GlLinearReport<K> rep;
  rep.r_left_linear = rep.s_right_linear = rep.criterion_holds = true;
  Matrix<K> rs = r * s, sr = s * r;
  for (std::size_t i = 0; i < alg.dim; ++i)
    for (std::size_t j = 0; j < alg.dim; ++j) {
      Vec<K> br = alg.bracket_basis(i, j);
      if (!is_zero_vec(sub_vec(r.apply(br), alg.bracket(ei(i), r.col(j))))) rep.r_left_linear = false;
      if (!is_zero_vec(sub_vec(s.apply(br), alg.bracket(s.col(i), ei(j))))) rep.s_right_linear = false;
      if (!is_zero_vec(alg.bracket(ei(i), rs.col(j))) || !is_zero_vec(alg.bracket(sr.col(i), ei(j))))
        rep.criterion_holds = false;
    }
  rep.rbs_holds = check_rbs(alg, regular_rep(alg), RbsPair<K>{r, s}).holds;
  if (rep.r_left_linear && rep.s_right_linear && rep.criterion_holds != rep.rbs_holds)
    throw std::logic_error("linear-map criterion disagrees with the direct pair check");
  return rep;
}

template <class K>
struct TwistedReport {
  bool sigma_is_morphism = false;
  bool is_twisted_rb = false;
  std::optional<AxiomWitness<K>> witness;
  std::optional<RbsPair<K>> system;  // (R, sigma R), present when both flags hold
};

// sigma must be a bracket morphism; R must satisfy
// [Rx, Ry] = R([Rx, y] + [x, (sigma R)y]).
template <class K>
TwistedReport<K> twisted_to_system(const LeibnizAlgebra<K>& alg, const Matrix<K>& sigma, const Matrix<K>& r) {
  if (sigma.rows() != alg.dim || sigma.cols() != alg.dim || r.rows() != alg.dim || r.cols() != alg.dim)
    throw input_error("endomorphisms must be square of the algebra dimension");
  auto ei = [&](std::size_t i) {
    Vec<K> v(alg.dim);
    v[i] = K(1);
    return v;
  };
  TwistedReport<K> rep;
  rep.sigma_is_morphism = true;
  for (std::size_t i = 0; i < alg.dim && rep.sigma_is_morphism; ++i)
    for (std::size_t j = 0; j < alg.dim; ++j)
      if (!is_zero_vec(sub_vec(sigma.apply(alg.bracket_basis(i, j)), alg.bracket(sigma.col(i), sigma.col(j))))) {
        rep.sigma_is_morphism = false;
        break;
      }
  Matrix<K> sr = sigma * r;
  rep.is_twisted_rb = true;
  for (std::size_t i = 0; i < alg.dim && rep.is_twisted_rb; ++i)
    for (std::size_t j = 0; j < alg.dim; ++j) {
      Vec<K> inner = add_vec(alg.bracket(r.col(i), ei(j)), alg.bracket(ei(i), sr.col(j)));
      Vec<K> res = sub_vec(alg.bracket(r.col(i), r.col(j)), r.apply(inner));
      if (!is_zero_vec(res)) {
        rep.is_twisted_rb = false;
        rep.witness = AxiomWitness<K>{{i, j}, 0, std::move(res)};
        break;
      }
    }
  if (rep.sigma_is_morphism && rep.is_twisted_rb) rep.system = RbsPair<K>{r, sr};
  return rep;
}

template <class K>
struct DiffRbReport {
  bool dr1 = false;  // weighted operator identity for R
  bool dr2 = false;  // twisted derivation rule for del
  bool dr3 = false;  // del R = Id
  bool holds() const { return dr1 && dr2 && dr3; }
};

template <class K>
DiffRbReport<K> differential_rb_check(const LeibnizAlgebra<K>& alg, const Matrix<K>& r, const Matrix<K>& del,
                                      const K& lambda) {
  if (del.rows() != alg.dim || del.cols() != alg.dim)
    throw input_error("endomorphisms must be square of the algebra dimension");
  auto ei = [&](std::size_t i) {
    Vec<K> v(alg.dim);
    v[i] = K(1);
    return v;
  };
  DiffRbReport<K> rep;
  rep.dr1 = weighted_to_systems(alg, r, lambda).is_weighted;
  rep.dr2 = true;
  for (std::size_t i = 0; i < alg.dim && rep.dr2; ++i)
    for (std::size_t j = 0; j < alg.dim; ++j) {
      Vec<K> rhs = add_vec(alg.bracket(del.col(i), ei(j)), alg.bracket(ei(i), del.col(j)));
      rhs = add_vec(std::move(rhs), scale_vec(alg.bracket(del.col(i), del.col(j)), lambda));
      if (!is_zero_vec(sub_vec(del.apply(alg.bracket_basis(i, j)), std::move(rhs)))) {
        rep.dr2 = false;
        break;
      }
    }
  rep.dr3 = (del * r == Matrix<K>::identity(alg.dim));
  return rep;
}

template <class K>
struct DialgebraRbReport {
  bool is_dialgebra_rb = false;
  std::optional<AxiomWitness<K>> witness;  // identity 1 for -|, 2 for |-
  bool leibniz_rb_holds = false;           // weight-0 check on the induced bracket
};

// R(a) * R(b) = R(R(a) * b + a * R(b)) for both products, then the
// weight-0 operator check on the induced bracket.  The first is known to
// force the second; that implication is asserted.
template <class K>
DialgebraRbReport<K> dialgebra_rb(const Dialgebra<K>& d, const Matrix<K>& r) {
  if (!check_dialgebra(d).holds) throw precondition_error("dialgebra axioms fail");
  if (r.rows() != d.dim || r.cols() != d.dim)
    throw input_error("endomorphism must be square of the dialgebra dimension");
  auto ei = [&](std::size_t i) {
    Vec<K> v(d.dim);
    v[i] = K(1);
    return v;
  };
  DialgebraRbReport<K> rep;
  rep.is_dialgebra_rb = true;
  for (std::size_t i = 0; i < d.dim && rep.is_dialgebra_rb; ++i)
    for (std::size_t j = 0; j < d.dim; ++j) {
      const Tensor<K>* prods[2] = {&d.left, &d.right};
      bool fail = false;
      for (int which = 0; which < 2 && !fail; ++which) {
        const Tensor<K>& t = *prods[which];
        Vec<K> lhs = d.apply_prod(t, r.col(i), r.col(j));
        Vec<K> inner = add_vec(d.apply_prod(t, r.col(i), ei(j)), d.apply_prod(t, ei(i), r.col(j)));
        Vec<K> res = sub_vec(std::move(lhs), r.apply(inner));
        if (!is_zero_vec(res)) {
          rep.is_dialgebra_rb = false;
          rep.witness = AxiomWitness<K>{{i, j}, which + 1, std::move(res)};
          fail = true;
        }
      }
      if (fail) break;
    }
  LeibnizAlgebra<K> induced = dialgebra_to_leibniz(d);
  rep.leibniz_rb_holds = weighted_to_systems(induced, r, K(0)).is_weighted;
  if (rep.is_dialgebra_rb && !rep.leibniz_rb_holds)
    throw std::logic_error("dialgebra operator fails the induced-bracket check");
  return rep;
}

// New bracket [x, y]_R = [Rx, y] + [x, Ry] for a weight-0 operator R.
template <class K>
LeibnizAlgebra<K> induced_bracket_rb(const LeibnizAlgebra<K>& alg, const Matrix<K>& r) {
  if (!weighted_to_systems(alg, r, K(0)).is_weighted)
    throw precondition_error("endomorphism fails the weight-0 operator identity");
  LeibnizAlgebra<K> out(alg.dim);
  auto ei = [&](std::size_t i) {
    Vec<K> v(alg.dim);
    v[i] = K(1);
    return v;
  };
  for (std::size_t i = 0; i < alg.dim; ++i)
    for (std::size_t j = 0; j < alg.dim; ++j) {
      Vec<K> br = add_vec(alg.bracket(r.col(i), ei(j)), alg.bracket(ei(i), r.col(j)));
      for (std::size_t k = 0; k < alg.dim; ++k) out.cst(i, j, k) = br[k];
    }
  return out;
}

// T = R (x) I + I (x) R on g (x) g, and its three-factor companion
// tau = R (x) R (x) I + R (x) I (x) R + I (x) R (x) R, in the Kronecker
// pair/triple index convention.
template <class K>
std::pair<Matrix<K>, Matrix<K>> pseudotwistor_from_rb(const LeibnizAlgebra<K>& alg, const Matrix<K>& r) {
  if (r.rows() != alg.dim || r.cols() != alg.dim)
    throw input_error("endomorphism must be square of the algebra dimension");
  Matrix<K> id = Matrix<K>::identity(alg.dim);
  Matrix<K> t = Matrix<K>::kron(r, id) + Matrix<K>::kron(id, r);
  Matrix<K> tau = Matrix<K>::kron(r, Matrix<K>::kron(r, id)) +
                  Matrix<K>::kron(r, Matrix<K>::kron(id, r)) +
                  Matrix<K>::kron(id, Matrix<K>::kron(r, r));
  return {std::move(t), std::move(tau)};
}

// The flip x (x) y -> y (x) x as a permutation matrix on pair indices.
template <class K>
Matrix<K> flip_matrix(std::size_t d) {
  Matrix<K> eta(d * d, d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) eta(j * d + i, i * d + j) = K(1);
  return eta;
}

template <class K>
struct PseudotwistorReport {
  bool flip_compat = false;    // (eta12 (x) Id) tau = tau (eta12 (x) Id)
  bool left_diagram = false;   // T (Id (x) mu) (Id (x) T) = (Id (x) mu) tau
  bool right_diagram = false;  // T (mu (x) Id) (T (x) Id) = (mu (x) Id) tau
  bool holds() const { return flip_compat && left_diagram && right_diagram; }
};

template <class K>
PseudotwistorReport<K> check_weak_pseudotwistor(const LeibnizAlgebra<K>& alg, const Matrix<K>& t,
                                                const Matrix<K>& tau) {
  const std::size_t d = alg.dim;
  if (t.rows() != d * d || t.cols() != d * d) throw input_error("two-tensor map must be d^2 x d^2");
  if (tau.rows() != d * d * d || tau.cols() != d * d * d) throw input_error("companion must be d^3 x d^3");
  Matrix<K> id = Matrix<K>::identity(d);
  Matrix<K> mu = alg.bracket_matrix();
  Matrix<K> eta_ext = Matrix<K>::kron(flip_matrix<K>(d), id);
  PseudotwistorReport<K> rep;
  rep.flip_compat = (eta_ext * tau == tau * eta_ext);
  rep.left_diagram = (t * Matrix<K>::kron(id, mu) * Matrix<K>::kron(id, t) == Matrix<K>::kron(id, mu) * tau);
  rep.right_diagram = (t * Matrix<K>::kron(mu, id) * Matrix<K>::kron(t, id) == Matrix<K>::kron(mu, id) * tau);
  return rep;
}

// New bracket mu . T read back into structure constants.
template <class K>
LeibnizAlgebra<K> induced_bracket_twistor(const LeibnizAlgebra<K>& alg, const Matrix<K>& t,
                                          const Matrix<K>& tau) {
  if (!check_weak_pseudotwistor(alg, t, tau).holds())
    throw precondition_error("map fails the weak pseudotwistor conditions");
  Matrix<K> comp = alg.bracket_matrix() * t;
  LeibnizAlgebra<K> out(alg.dim);
  for (std::size_t i = 0; i < alg.dim; ++i)
    for (std::size_t j = 0; j < alg.dim; ++j)
      for (std::size_t k = 0; k < alg.dim; ++k) out.cst(i, j, k) = comp(k, i * alg.dim + j);
  return out;
}

}  // namespace rbs
