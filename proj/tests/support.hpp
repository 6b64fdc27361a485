#pragma once

// Shared fixtures and helpers for the test suites.  All fixtures are named
// for what they are: nil3 is the 3-dimensional 2-step nilpotent Leibniz
// algebra with [e1,e1]=e3, sol2 the 2-dimensional solvable one with
// [e2,e1]=[e2,e2]=e1, nil2 the 2-dimensional [e1,e1]=e2 algebra and
// affine2 the nondegenerate [e1,e2]=e1=-[e2,e1] algebra.

#include <random>
#include <utility>
#include <vector>

#include "rbs/algebra.hpp"
#include "rbs/cohomology.hpp"
#include "rbs/rota_baxter.hpp"

namespace fixtures {

using rbs::Fp;
using rbs::LeibnizAlgebra;
using rbs::Matrix;
using rbs::Rational;
using rbs::RbsPair;
using rbs::Representation;

inline LeibnizAlgebra<Rational> nil3() {
  LeibnizAlgebra<Rational> a(3);
  a.cst(0, 0, 2) = 1;
  return a;
}

inline LeibnizAlgebra<Rational> sol2() {
  LeibnizAlgebra<Rational> a(2);
  a.cst(1, 0, 0) = 1;
  a.cst(1, 1, 0) = 1;
  return a;
}

inline LeibnizAlgebra<Rational> nil2() {
  LeibnizAlgebra<Rational> a(2);
  a.cst(0, 0, 1) = 1;
  return a;
}

inline LeibnizAlgebra<Rational> affine2() {
  LeibnizAlgebra<Rational> a(2);
  a.cst(0, 1, 0) = 1;
  a.cst(1, 0, 0) = -1;
  return a;
}

inline LeibnizAlgebra<Rational> abelian(std::size_t n) {
  return LeibnizAlgebra<Rational>(n);
}

// A dimension-2 representation of nil3: commuting diagonal left actions,
// zero right actions.
inline Representation<Rational> nil3_small_rep() {
  Representation<Rational> rep;
  rep.dimV = 2;
  rep.rhoL.assign(3, Matrix<Rational>(2, 2));
  rep.rhoR.assign(3, Matrix<Rational>(2, 2));
  rep.rhoL[0](0, 0) = 1;
  rep.rhoL[1](1, 1) = 1;
  return rep;
}

// Commuting left actions, zero right actions, on an abelian algebra.
inline Representation<Rational> abelian_commuting_rep(std::size_t dim_g,
                                                      std::size_t dim_v) {
  Representation<Rational> rep;
  rep.dimV = dim_v;
  rep.rhoL.assign(dim_g, Matrix<Rational>(dim_v, dim_v));
  rep.rhoR.assign(dim_g, Matrix<Rational>(dim_v, dim_v));
  for (std::size_t i = 0; i < dim_g && i < dim_v; ++i)
    rep.rhoL[i](i, i) = Rational(static_cast<int>(i) + 1);
  return rep;
}

inline Representation<Rational> zero_rep(std::size_t dim_g,
                                         std::size_t dim_v) {
  Representation<Rational> rep;
  rep.dimV = dim_v;
  rep.rhoL.assign(dim_g, Matrix<Rational>(dim_v, dim_v));
  rep.rhoR.assign(dim_g, Matrix<Rational>(dim_v, dim_v));
  return rep;
}

// One-dimensional algebra/space with left action 1 and right action 0.
// The zero-order pair (R,S) = (0,1) passes the system check and its
// cohomology at degree 2 vanishes, which makes this the canonical base
// for full-extension tests.
struct ScalarBase {
  LeibnizAlgebra<Rational> alg = abelian(1);
  Representation<Rational> rep;
  RbsPair<Rational> base = RbsPair<Rational>::zero(1, 1);
  ScalarBase() {
    rep.dimV = 1;
    rep.rhoL.assign(1, Matrix<Rational>(1, 1));
    rep.rhoR.assign(1, Matrix<Rational>(1, 1));
    rep.rhoL[0](0, 0) = 1;
    base.S(0, 0) = 1;
  }
};

// Ambient data: algebra + representation whose semidirect sum is again a
// Leibniz algebra (verified in the tests before use).
struct Ambient {
  const char* name;
  LeibnizAlgebra<Rational> alg;
  Representation<Rational> rep;
};

inline std::vector<Ambient> leibniz_ambients() {
  std::vector<Ambient> out;
  out.push_back({"nil3+regular", nil3(), rbs::regular_rep(nil3())});
  out.push_back({"nil3+dual", nil3(), rbs::dual_regular_rep(nil3())});
  out.push_back({"nil2+regular", nil2(), rbs::regular_rep(nil2())});
  out.push_back({"nil2+dual", nil2(), rbs::dual_regular_rep(nil2())});
  out.push_back({"nil3+small", nil3(), nil3_small_rep()});
  out.push_back({"abelian2+commuting", abelian(2), abelian_commuting_rep(2, 2)});
  out.push_back({"abelian1+scalar", ScalarBase().alg, ScalarBase().rep});
  return out;
}

// Ambients used for equivalence sweeps where the semidirect sum need not
// be a Leibniz algebra (identity-level statements hold regardless).
inline std::vector<Ambient> mixed_ambients() {
  std::vector<Ambient> out = leibniz_ambients();
  out.push_back({"sol2+regular", sol2(), rbs::regular_rep(sol2())});
  out.push_back({"sol2+dual", sol2(), rbs::dual_regular_rep(sol2())});
  out.push_back({"affine2+regular", affine2(), rbs::regular_rep(affine2())});
  out.push_back({"affine2+dual", affine2(), rbs::dual_regular_rep(affine2())});
  return out;
}

// Small-dimensional ambients (dim g <= 3, dim V <= 2) for randomized
// equivalence sweeps.
inline std::vector<Ambient> small_ambients() {
  std::vector<Ambient> out;
  out.push_back({"sol2+regular", sol2(), rbs::regular_rep(sol2())});
  out.push_back({"sol2+dual", sol2(), rbs::dual_regular_rep(sol2())});
  out.push_back({"nil2+regular", nil2(), rbs::regular_rep(nil2())});
  out.push_back({"nil2+dual", nil2(), rbs::dual_regular_rep(nil2())});
  out.push_back({"affine2+regular", affine2(), rbs::regular_rep(affine2())});
  out.push_back({"affine2+dual", affine2(), rbs::dual_regular_rep(affine2())});
  out.push_back({"nil3+small", nil3(), nil3_small_rep()});
  out.push_back({"abelian3+commuting", abelian(3), abelian_commuting_rep(3, 2)});
  return out;
}

inline RbsPair<Rational> random_pair(std::mt19937& rng, std::size_t dg,
                                     std::size_t dv, int lo = -2, int hi = 2) {
  std::uniform_int_distribution<int> d(lo, hi);
  RbsPair<Rational> p = RbsPair<Rational>::zero(dg, dv);
  for (std::size_t i = 0; i < dg; ++i)
    for (std::size_t j = 0; j < dv; ++j) {
      p.R(i, j) = d(rng);
      p.S(i, j) = d(rng);
    }
  return p;
}

// A random pair with both first rows zero; for nil3/nil2 with the regular
// representation these always pass the system check.
inline RbsPair<Rational> random_first_row_zero_pair(std::mt19937& rng,
                                                    std::size_t dg,
                                                    std::size_t dv) {
  RbsPair<Rational> p = random_pair(rng, dg, dv, -3, 3);
  for (std::size_t j = 0; j < dv; ++j) {
    p.R(0, j) = 0;
    p.S(0, j) = 0;
  }
  return p;
}

inline rbs::MultiMap<Rational> random_multimap(std::mt19937& rng,
                                               std::size_t arity,
                                               std::size_t dim, int lo = -2,
                                               int hi = 2) {
  std::uniform_int_distribution<int> d(lo, hi);
  rbs::MultiMap<Rational> m(arity, dim);
  for (std::size_t i = 0; i < m.t.size(); ++i) m.t[i] = d(rng);
  return m;
}

inline rbs::Cochain<Rational> random_cochain(std::mt19937& rng,
                                             std::size_t arity, std::size_t dv,
                                             std::size_t dg, int lo = -2,
                                             int hi = 2) {
  std::uniform_int_distribution<int> d(lo, hi);
  rbs::Cochain<Rational> c(arity, dv, dg);
  for (std::size_t i = 0; i < c.P.size(); ++i) {
    c.P[i] = d(rng);
    c.Q[i] = d(rng);
  }
  return c;
}

// Nontrivial valid bases for differential/cohomology tests, per ambient.
struct NamedBase {
  const char* name;
  LeibnizAlgebra<Rational> alg;
  Representation<Rational> rep;
  RbsPair<Rational> base;
};

inline std::vector<NamedBase> cohomology_bases() {
  std::vector<NamedBase> out;
  auto add = [&](const char* name, LeibnizAlgebra<Rational> a,
                 Representation<Rational> r, RbsPair<Rational> p) {
    out.push_back({name, std::move(a), std::move(r), std::move(p)});
  };

  {
    auto a = nil3();
    auto reg = rbs::regular_rep(a);
    RbsPair<Rational> p = RbsPair<Rational>::zero(3, 3);
    p.R(2, 2) = 1;
    p.S(2, 2) = 1;
    add("nil3+regular diag(0,0,1)", a, reg, p);
    add("nil3+regular zero", a, reg, RbsPair<Rational>::zero(3, 3));
    RbsPair<Rational> q = RbsPair<Rational>::zero(3, 3);
    q.R(1, 0) = 1;
    q.R(2, 1) = 2;
    q.S(1, 2) = -1;
    q.S(2, 0) = 3;
    add("nil3+regular lower", a, reg, q);
    RbsPair<Rational> r = RbsPair<Rational>::zero(3, 3);
    r.R(1, 1) = 1;
    r.S(1, 1) = 1;
    r.S(2, 2) = Rational(1) / 2;
    add("nil3+regular mid", a, reg, r);
  }
  {
    auto a = nil3();
    auto dual = rbs::dual_regular_rep(a);
    RbsPair<Rational> p = RbsPair<Rational>::zero(3, 3);
    p.R(0, 2) = 1;
    p.R(2, 0) = 1;
    p.S(0, 2) = 1;
    p.S(2, 0) = 1;
    add("nil3+dual cross", a, dual, p);
    RbsPair<Rational> q = p;
    q.R(1, 1) = 2;
    q.S(2, 2) = -1;
    add("nil3+dual decorated", a, dual, q);
  }
  {
    auto a = nil2();
    auto reg = rbs::regular_rep(a);
    RbsPair<Rational> p = RbsPair<Rational>::zero(2, 2);
    p.R(1, 0) = 1;
    p.S(1, 1) = -2;
    add("nil2+regular lower", a, reg, p);
    add("nil2+regular zero", a, reg, RbsPair<Rational>::zero(2, 2));
  }
  {
    auto a = nil2();
    auto dual = rbs::dual_regular_rep(a);
    RbsPair<Rational> p = RbsPair<Rational>::zero(2, 2);
    p.R(0, 1) = 1;
    p.R(1, 0) = 1;
    p.S(0, 1) = 1;
    p.S(1, 0) = 1;
    add("nil2+dual cross", a, dual, p);
  }
  {
    ScalarBase sb;
    add("scalar base", sb.alg, sb.rep, sb.base);
  }
  {
    auto a = abelian(2);
    auto rep = zero_rep(2, 2);
    RbsPair<Rational> p = RbsPair<Rational>::zero(2, 2);
    p.R(0, 1) = 5;
    p.S(1, 0) = -3;
    add("abelian2+zero-rep", a, rep, p);
  }
  return out;
}

}  // namespace fixtures
