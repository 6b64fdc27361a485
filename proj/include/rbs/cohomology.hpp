#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "rbs/algebra.hpp"
#include "rbs/linalg.hpp"
#include "rbs/multimap.hpp"
#include "rbs/rota_baxter.hpp"

namespace rbs {

// An element of Hom(V^(x n), g + g): two coefficient tensors of shape
// [dimV]^n x [dimg], the output axis last.
template <class K>
struct Cochain {
  std::size_t arity = 1;
  std::size_t dimV = 0, dimg = 0;
  Tensor<K> P, Q;

  Cochain() = default;
  Cochain(std::size_t n, std::size_t dv, std::size_t dg)
      : arity(n), dimV(dv), dimg(dg), P(shape(n, dv, dg)), Q(shape(n, dv, dg)) {
    if (n < 1) throw input_error("cochain arity must be at least 1");
  }

  static std::vector<std::size_t> shape(std::size_t n, std::size_t dv, std::size_t dg) {
    std::vector<std::size_t> s(n, dv);
    s.push_back(dg);
    return s;
  }

  static Cochain from_pair(const RbsPair<K>& p) {
    Cochain c(1, p.R.cols(), p.R.rows());
    for (std::size_t a = 0; a < c.dimV; ++a)
      for (std::size_t k = 0; k < c.dimg; ++k) {
        c.P.at({a, k}) = p.R(k, a);
        c.Q.at({a, k}) = p.S(k, a);
      }
    return c;
  }

  // Inverse of from_pair; only meaningful at arity 1.
  RbsPair<K> to_pair() const {
    if (arity != 1) throw input_error("only arity-1 cochains convert to a map pair");
    RbsPair<K> p = RbsPair<K>::zero(dimg, dimV);
    for (std::size_t a = 0; a < dimV; ++a)
      for (std::size_t k = 0; k < dimg; ++k) {
        p.R(k, a) = P.at({a, k});
        p.S(k, a) = Q.at({a, k});
      }
    return p;
  }

  bool is_zero() const { return P.is_zero() && Q.is_zero(); }

  friend Cochain operator+(Cochain a, const Cochain& b) {
    a.P = a.P + b.P;
    a.Q = a.Q + b.Q;
    return a;
  }

  friend Cochain operator-(Cochain a, const Cochain& b) {
    a.P = a.P - b.P;
    a.Q = a.Q - b.Q;
    return a;
  }

  friend Cochain operator*(const K& c, Cochain a) {
    a.P = c * a.P;
    a.Q = c * a.Q;
    return a;
  }

  friend bool operator==(const Cochain& a, const Cochain& b) {
    return a.arity == b.arity && a.P == b.P && a.Q == b.Q;
  }
};

template <class K>
std::size_t cochain_dim(std::size_t arity, std::size_t dv, std::size_t dg) {
  std::size_t n = 2 * dg;
  for (std::size_t t = 0; t < arity; ++t) n *= dv;
  return n;
}

// Basis order of the flattened coordinates: the first component's entries
// before the second's; within each, row-major over (input multi-index,
// output index).
template <class K>
Vec<K> flatten_cochain(const Cochain<K>& c) {
  Vec<K> v;
  v.reserve(2 * c.P.size());
  for (std::size_t f = 0; f < c.P.size(); ++f) v.push_back(c.P[f]);
  for (std::size_t f = 0; f < c.Q.size(); ++f) v.push_back(c.Q[f]);
  return v;
}

template <class K>
Cochain<K> unflatten_cochain(const Vec<K>& v, std::size_t arity, std::size_t dv, std::size_t dg) {
  Cochain<K> c(arity, dv, dg);
  if (v.size() != 2 * c.P.size()) throw input_error("cochain coordinate length mismatch");
  for (std::size_t f = 0; f < c.P.size(); ++f) c.P[f] = v[f];
  for (std::size_t f = 0; f < c.Q.size(); ++f) c.Q[f] = v[c.P.size() + f];
  return c;
}

// The ambient multilinear space M = (g copy 1) + (g copy 2) + V with basis
// blocks in that order; a cochain embeds as the map that feeds each input
// through the projection M -> V and lands in the two g blocks.
template <class K>
MultiMap<K> embed_cochain(const Cochain<K>& c) {
  const std::size_t dg = c.dimg, dv = c.dimV, dm = 2 * dg + dv;
  MultiMap<K> m(c.arity, dm);
  std::vector<std::size_t> idx(c.arity + 1);
  c.P.for_each_nonzero([&](const std::vector<std::size_t>& src, const K& v) {
    for (std::size_t t = 0; t < c.arity; ++t) idx[t] = 2 * dg + src[t];
    idx[c.arity] = src[c.arity];
    m.t.at(idx) = v;
  });
  c.Q.for_each_nonzero([&](const std::vector<std::size_t>& src, const K& v) {
    for (std::size_t t = 0; t < c.arity; ++t) idx[t] = 2 * dg + src[t];
    idx[c.arity] = dg + src[c.arity];
    m.t.at(idx) = v;
  });
  return m;
}

// Restriction of an ambient map to V-only inputs, reading off the two
// g-block components of the output.
template <class K>
Cochain<K> project_multimap(const MultiMap<K>& m, std::size_t dg, std::size_t dv) {
  if (m.dimM != 2 * dg + dv) throw input_error("ambient dimension mismatch");
  Cochain<K> c(m.arity, dv, dg);
  std::vector<std::size_t> src(m.arity + 1);
  for (std::size_t f = 0; f < c.P.size(); ++f) {
    c.P.unflatten(f, src);
    std::vector<std::size_t> idx(src);
    for (std::size_t t = 0; t < m.arity; ++t) idx[t] = 2 * dg + src[t];
    c.P[f] = m.t.at(idx);
    idx[m.arity] = dg + src[m.arity];
    c.Q[f] = m.t.at(idx);
  }
  return c;
}

// True when every nonzero entry reads all inputs from the V block and
// writes into one of the g blocks.
template <class K>
bool is_embedded(const MultiMap<K>& m, std::size_t dg, std::size_t dv) {
  if (m.dimM != 2 * dg + dv) throw input_error("ambient dimension mismatch");
  bool ok = true;
  m.t.for_each_nonzero([&](const std::vector<std::size_t>& idx, const K&) {
    for (std::size_t t = 0; t < m.arity; ++t)
      if (idx[t] < 2 * dg) ok = false;
    if (idx[m.arity] >= 2 * dg) ok = false;
  });
  return ok;
}

// The ambient product on M = g + g + V as an arity-2 multilinear map.
template <class K>
MultiMap<K> mu_hat(const LeibnizAlgebra<K>& alg, const Representation<K>& rep) {
  return MultiMap<K>::from_algebra(semidirect_sum(alg, rep));
}

// Shared state for derived-bracket computations against one (algebra,
// representation) pair.
template <class K>
struct DerivedContext {
  std::size_t dg = 0, dv = 0;
  MultiMap<K> mu;  // ambient product

  DerivedContext(const LeibnizAlgebra<K>& alg, const Representation<K>& rep)
      : dg(alg.dim), dv(rep.dimV), mu(mu_hat(alg, rep)) {}
};

// The bracket on cochains obtained by bracketing with the ambient product
// first: sign * [[mu, embed(c1)], embed(c2)] read back through the
// projection, where sign is +1 for odd first-argument arity and -1 for
// even.  The inner double bracket always lands in the embedded subspace;
// that closure is asserted.
template <class K>
Cochain<K> derived_bracket(const DerivedContext<K>& ctx, const Cochain<K>& c1, const Cochain<K>& c2) {
  MultiMap<K> inner = balavoine_bracket(ctx.mu, embed_cochain(c1));
  MultiMap<K> outer = balavoine_bracket(inner, embed_cochain(c2));
  if (!is_embedded(outer, ctx.dg, ctx.dv))
    throw std::logic_error("derived bracket left the embedded subspace");
  Cochain<K> r = project_multimap(outer, ctx.dg, ctx.dv);
  if (c1.arity % 2 == 0) r = K(-1) * r;
  return r;
}

template <class K>
Cochain<K> derived_bracket(const LeibnizAlgebra<K>& alg, const Representation<K>& rep,
                           const Cochain<K>& c1, const Cochain<K>& c2) {
  return derived_bracket(DerivedContext<K>(alg, rep), c1, c2);
}

// First nonzero slice of a cochain: the input multi-index and component at
// which it fails to vanish, with the full output-coordinate residual.
template <class K>
std::optional<AxiomWitness<K>> first_nonzero_slice(const Cochain<K>& c) {
  const Tensor<K>* comps[2] = {&c.P, &c.Q};
  std::size_t rows = 1;
  for (std::size_t t = 0; t < c.arity; ++t) rows *= c.dimV;
  std::vector<std::size_t> idx;
  for (int comp = 0; comp < 2; ++comp)
    for (std::size_t row = 0; row < rows; ++row) {
      const Tensor<K>& t = *comps[comp];
      Vec<K> res(c.dimg);
      bool nz = false;
      for (std::size_t k = 0; k < c.dimg; ++k) {
        res[k] = t[row * c.dimg + k];
        if (!is_zero(res[k])) nz = true;
      }
      if (nz) {
        t.unflatten(row * c.dimg, idx);
        idx.pop_back();
        return AxiomWitness<K>{idx, comp + 1, std::move(res)};
      }
    }
  return std::nullopt;
}

// Maurer-Cartan test: the self-bracket of the pair vanishes.  Agrees with
// the direct two-identity check.
template <class K>
CheckReport<K> mc_check(const LeibnizAlgebra<K>& alg, const Representation<K>& rep, const RbsPair<K>& p) {
  require_pair_dims(alg, rep, p);
  Cochain<K> c = Cochain<K>::from_pair(p);
  Cochain<K> self = derived_bracket(DerivedContext<K>(alg, rep), c, c);
  if (self.is_zero()) return {};
  return {false, first_nonzero_slice(self)};
}

// Shared state for applying the differential of a fixed base pair: the
// degree-1 part h = [mu, embed(base)] is computed once.
template <class K>
struct DifferentialContext {
  std::size_t dg = 0, dv = 0;
  MultiMap<K> h;

  DifferentialContext(const LeibnizAlgebra<K>& alg, const Representation<K>& rep, const RbsPair<K>& base,
                      bool validate = true)
      : dg(alg.dim), dv(rep.dimV) {
    if (validate && !check_rbs(alg, rep, base).holds)
      throw precondition_error("base pair fails the defining identities");
    h = balavoine_bracket(mu_hat(alg, rep), embed_cochain(Cochain<K>::from_pair(base)));
  }

  Cochain<K> apply(const Cochain<K>& c) const {
    MultiMap<K> outer = balavoine_bracket(h, embed_cochain(c));
    if (!is_embedded(outer, dg, dv))
      throw std::logic_error("derived bracket left the embedded subspace");
    return project_multimap(outer, dg, dv);
  }
};

template <class K>
Cochain<K> differential_apply(const LeibnizAlgebra<K>& alg, const Representation<K>& rep,
                              const RbsPair<K>& base, const Cochain<K>& c) {
  return DifferentialContext<K>(alg, rep, base).apply(c);
}

// Matrix of the degree-n differential in the flattened cochain bases;
// column f is the image of the f-th basis cochain.
template <class K>
Matrix<K> differential_matrix(const LeibnizAlgebra<K>& alg, const Representation<K>& rep,
                              const RbsPair<K>& base, std::size_t n) {
  if (n < 1) throw input_error("differential degree must be at least 1");
  DifferentialContext<K> ctx(alg, rep, base);
  const std::size_t dv = rep.dimV, dg = alg.dim;
  const std::size_t cols = cochain_dim<K>(n, dv, dg), rows = cochain_dim<K>(n + 1, dv, dg);
  Matrix<K> mat(rows, cols);
  for (std::size_t f = 0; f < cols; ++f) {
    Cochain<K> e(n, dv, dg);
    const std::size_t half = e.P.size();
    if (f < half)
      e.P[f] = K(1);
    else
      e.Q[f - half] = K(1);
    Vec<K> col = flatten_cochain(ctx.apply(e));
    for (std::size_t r = 0; r < rows; ++r) mat(r, f) = col[r];
  }
  return mat;
}

// The coefficientwise formula for the differential of a degree-0 element
// (x, y) of g + g:
//   P(u) = [R(u), x] - R(rhoR(y)u) - [x, R(u)] + R(rhoL(x)u)
//   Q(u) = [S(u), y] - S(rhoR(y)u) - [y, S(u)] + S(rhoL(x)u)
template <class K>
Cochain<K> degree0_differential(const LeibnizAlgebra<K>& alg, const Representation<K>& rep,
                                const RbsPair<K>& base, const Vec<K>& x, const Vec<K>& y) {
  require_pair_dims(alg, rep, base);
  if (x.size() != alg.dim || y.size() != alg.dim) throw input_error("degree-0 element dimension mismatch");
  if (!check_rbs(alg, rep, base).holds)
    throw precondition_error("base pair fails the defining identities");
  Cochain<K> c(1, rep.dimV, alg.dim);
  for (std::size_t a = 0; a < rep.dimV; ++a) {
    Vec<K> ua(rep.dimV);
    ua[a] = K(1);
    Vec<K> ru = base.R.col(a), su = base.S.col(a);
    Vec<K> rr = base.R.apply(rep.actR(y, ua)), rl = base.R.apply(rep.actL(x, ua));
    Vec<K> sr = base.S.apply(rep.actR(y, ua)), sl = base.S.apply(rep.actL(x, ua));
    Vec<K> p = sub_vec(alg.bracket(ru, x), rr);
    p = sub_vec(std::move(p), alg.bracket(x, ru));
    p = add_vec(std::move(p), rl);
    Vec<K> qv = sub_vec(alg.bracket(su, y), sr);
    qv = sub_vec(std::move(qv), alg.bracket(y, su));
    qv = add_vec(std::move(qv), sl);
    for (std::size_t k = 0; k < alg.dim; ++k) {
      c.P.at({a, k}) = p[k];
      c.Q.at({a, k}) = qv[k];
    }
  }
  return c;
}

// Matrix of the degree-0 differential: columns are the images of
// (e_i, 0) for each g basis vector, then (0, e_i).
template <class K>
Matrix<K> degree0_matrix(const LeibnizAlgebra<K>& alg, const Representation<K>& rep, const RbsPair<K>& base) {
  const std::size_t dg = alg.dim;
  Matrix<K> mat(cochain_dim<K>(1, rep.dimV, dg), 2 * dg);
  for (std::size_t col = 0; col < 2 * dg; ++col) {
    Vec<K> x(dg), y(dg);
    if (col < dg)
      x[col] = K(1);
    else
      y[col - dg] = K(1);
    Vec<K> image = flatten_cochain(degree0_differential(alg, rep, base, x, y));
    for (std::size_t r = 0; r < mat.rows(); ++r) mat(r, col) = image[r];
  }
  return mat;
}

struct CohomologyDims {
  std::size_t dim_z = 0;  // kernel of the outgoing differential
  std::size_t dim_b = 0;  // rank of the incoming differential
  std::size_t dim_h = 0;
};

// Kernel/image/quotient dimensions at degree n.  The complex starts at
// degree 1, so by default nothing bounds at n = 1; enabling
// quotient_degree0 divides the degree-1 kernel by the image of the
// degree-0 map after verifying it is a chain map for this base.
template <class K>
CohomologyDims cohomology_dims(const LeibnizAlgebra<K>& alg, const Representation<K>& rep,
                               const RbsPair<K>& base, std::size_t n, bool quotient_degree0 = false) {
  if (n < 1) throw input_error("cohomology degree must be at least 1");
  CohomologyDims dims;
  Matrix<K> dn = differential_matrix(alg, rep, base, n);
  dims.dim_z = dn.cols() - mat_rank(dn);
  if (n > 1) {
    dims.dim_b = mat_rank(differential_matrix(alg, rep, base, n - 1));
  } else if (quotient_degree0) {
    Matrix<K> d0 = degree0_matrix(alg, rep, base);
    if (!(dn * d0).is_zero())
      throw precondition_error("degree-0 map is not a chain map for this base");
    dims.dim_b = mat_rank(d0);
  }
  dims.dim_h = dims.dim_z - dims.dim_b;
  return dims;
}

template <class K>
struct McDeformationReport {
  bool sum_is_rbs = false;
  bool mc_equation_holds = false;
};

// The shifted pair (base + delta) satisfies the defining identities
// exactly when delta satisfies the Maurer-Cartan equation of the
// differential graded structure induced by the base.  The equation is
// checked in the division-free form 2 d(delta) + [[delta, delta]] = 0,
// which is the literal expansion of the self-bracket of base + delta.
template <class K>
McDeformationReport<K> mc_deformation_check(const LeibnizAlgebra<K>& alg, const Representation<K>& rep,
                                            const RbsPair<K>& base, const RbsPair<K>& delta) {
  require_pair_dims(alg, rep, delta);
  McDeformationReport<K> out;
  out.sum_is_rbs = check_rbs(alg, rep, base + delta).holds;
  DerivedContext<K> ctx(alg, rep);
  Cochain<K> d = Cochain<K>::from_pair(delta);
  Cochain<K> mc = K(2) * differential_apply(alg, rep, base, d) + derived_bracket(ctx, d, d);
  out.mc_equation_holds = mc.is_zero();
  return out;
}

}  // namespace rbs
