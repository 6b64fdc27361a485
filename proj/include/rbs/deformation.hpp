#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "rbs/cohomology.hpp"
#include "rbs/rota_baxter.hpp"

namespace rbs {

// A polynomial family of map pairs truncated at degree `order`:
// coefficient i multiplies t^i, and coefficient 0 is the base pair.
template <class K>
struct TruncatedDeformation {
  std::vector<RbsPair<K>> coeffs;

  TruncatedDeformation() = default;
  explicit TruncatedDeformation(std::vector<RbsPair<K>> cs) : coeffs(std::move(cs)) {
    if (coeffs.empty()) throw input_error("a truncated deformation needs at least the constant coefficient");
    for (const RbsPair<K>& p : coeffs)
      if (p.R.rows() != coeffs[0].R.rows() || p.R.cols() != coeffs[0].R.cols())
        throw input_error("deformation coefficients have inconsistent dimensions");
  }

  std::size_t order() const { return coeffs.size() - 1; }
  const RbsPair<K>& base() const { return coeffs.front(); }
};

template <class K>
struct OrderCheckReport {
  bool holds = true;
  std::optional<std::size_t> failing_order;
  std::optional<AxiomWitness<K>> witness;
};

// Checks the defining identities with all maps replaced by the truncated
// polynomial family, coefficient by coefficient: for every k up to the
// order, sum over i + j = k of [X_i u, X_j v] minus X_i applied to
// rhoL(R_j u)v + rhoR(S_j v)u must vanish, for X = R (identity 1) and
// X = S (identity 2).  A failing base shows up as failing order 0.
template <class K>
OrderCheckReport<K> check_order_n(const LeibnizAlgebra<K>& alg, const Representation<K>& rep,
                                  const TruncatedDeformation<K>& def) {
  for (const RbsPair<K>& p : def.coeffs) require_pair_dims(alg, rep, p);
  const std::size_t dv = rep.dimV;
  for (std::size_t k = 0; k <= def.order(); ++k)
    for (std::size_t a = 0; a < dv; ++a)
      for (std::size_t b = 0; b < dv; ++b) {
        Vec<K> ea(dv), eb(dv);
        ea[a] = K(1);
        eb[b] = K(1);
        Vec<K> res_r(alg.dim), res_s(alg.dim);
        for (std::size_t i = 0; i <= k; ++i) {
          const std::size_t j = k - i;
          const RbsPair<K>&pi = def.coeffs[i], &pj = def.coeffs[j];
          Vec<K> inner = add_vec(rep.actL(pj.R.col(a), eb), rep.actR(pj.S.col(b), ea));
          res_r = add_vec(std::move(res_r), sub_vec(alg.bracket(pi.R.col(a), pj.R.col(b)), pi.R.apply(inner)));
          res_s = add_vec(std::move(res_s), sub_vec(alg.bracket(pi.S.col(a), pj.S.col(b)), pi.S.apply(inner)));
        }
        if (!is_zero_vec(res_r))
          return {false, k, AxiomWitness<K>{{a, b}, 1, std::move(res_r)}};
        if (!is_zero_vec(res_s))
          return {false, k, AxiomWitness<K>{{a, b}, 2, std::move(res_s)}};
      }
  return {};
}

// The k-th coefficient of the self-bracket of the whole family:
// sum over i + j = k of the derived bracket of coefficients i and j.
// It equals twice the coefficient-wise residual checked by
// check_order_n, giving an independent route to the same answer.
template <class K>
Cochain<K> mc_coefficient(const DerivedContext<K>& ctx, const TruncatedDeformation<K>& def, std::size_t k) {
  Cochain<K> acc(2, ctx.dv, ctx.dg);
  std::vector<Cochain<K>> as;
  as.reserve(def.coeffs.size());
  for (const RbsPair<K>& p : def.coeffs) as.push_back(Cochain<K>::from_pair(p));
  for (std::size_t i = 0; i <= k; ++i) {
    if (i > def.order() || k - i > def.order()) continue;
    acc = acc + derived_bracket(ctx, as[i], as[k - i]);
  }
  return acc;
}

template <class K>
struct InfinitesimalResult {
  Cochain<K> cochain;
  bool is_cocycle = false;
};

// Extracts the degree-1 coefficient of a valid deformation and reports
// whether it is annihilated by the differential of the base.  Validity
// guarantees the answer is yes; the computation is still performed.
template <class K>
InfinitesimalResult<K> infinitesimal(const LeibnizAlgebra<K>& alg, const Representation<K>& rep,
                                     const TruncatedDeformation<K>& def) {
  if (def.order() < 1) throw input_error("infinitesimal needs a deformation of order at least 1");
  if (!check_order_n(alg, rep, def).holds)
    throw precondition_error("deformation fails the coefficient identities at its stated order");
  InfinitesimalResult<K> out;
  out.cochain = Cochain<K>::from_pair(def.coeffs[1]);
  out.is_cocycle = differential_apply(alg, rep, def.base(), out.cochain).is_zero();
  return out;
}

template <class K>
struct EquivalenceReport {
  bool equivalent_at_degree1 = false;
  std::optional<std::pair<Vec<K>, Vec<K>>> witness;
};

// Two degree-1 cocycles are identified when their difference is the
// degree-0 differential of some pair of algebra elements (x, y); decided
// as an affine linear system.
template <class K>
EquivalenceReport<K> equivalence_solve(const LeibnizAlgebra<K>& alg, const Representation<K>& rep,
                                       const RbsPair<K>& base, const Cochain<K>& inf1,
                                       const Cochain<K>& inf2) {
  DifferentialContext<K> ctx(alg, rep, base);
  if (inf1.arity != 1 || inf2.arity != 1 || inf1.dimV != rep.dimV || inf1.dimg != alg.dim ||
      inf2.dimV != rep.dimV || inf2.dimg != alg.dim)
    throw input_error("equivalence inputs must be arity-1 cochains matching the ambient dimensions");
  if (!ctx.apply(inf1).is_zero() || !ctx.apply(inf2).is_zero())
    throw precondition_error("equivalence inputs must be cocycles for the base pair");
  Matrix<K> d0 = degree0_matrix(alg, rep, base);
  AffineSolution<K> sol = solve_affine(d0, flatten_cochain(inf1 - inf2));
  EquivalenceReport<K> out;
  out.equivalent_at_degree1 = sol.consistent();
  if (sol.consistent()) {
    Vec<K> x(alg.dim), y(alg.dim);
    for (std::size_t i = 0; i < alg.dim; ++i) {
      x[i] = (*sol.particular)[i];
      y[i] = (*sol.particular)[alg.dim + i];
    }
    out.witness = std::make_pair(std::move(x), std::move(y));
  }
  return out;
}

template <class K>
struct ObstructionResult {
  Cochain<K> cochain;
  bool is_2cocycle = false;
};

// The obstruction to extending a valid order-n deformation one step:
// minus one half the sum of derived brackets of coefficients i and j
// over ordered pairs with i + j = n + 1 and i, j >= 1.  Always a cocycle
// for the base differential.
template <class K>
ObstructionResult<K> obstruction(const LeibnizAlgebra<K>& alg, const Representation<K>& rep,
                                 const TruncatedDeformation<K>& def) {
  if (!check_order_n(alg, rep, def).holds)
    throw precondition_error("deformation fails the coefficient identities at its stated order");
  const std::size_t n = def.order();
  DerivedContext<K> ctx(alg, rep);
  std::vector<Cochain<K>> as;
  as.reserve(def.coeffs.size());
  for (const RbsPair<K>& p : def.coeffs) as.push_back(Cochain<K>::from_pair(p));
  Cochain<K> acc(2, ctx.dv, ctx.dg);
  for (std::size_t i = 1; i <= n; ++i) {
    const std::size_t j = n + 1 - i;
    if (j < 1 || j > n) continue;
    acc = acc + derived_bracket(ctx, as[i], as[j]);
  }
  ObstructionResult<K> out;
  out.cochain = (K(-1) / K(2)) * acc;
  out.is_2cocycle = differential_apply(alg, rep, def.base(), out.cochain).is_zero();
  return out;
}

template <class K>
struct ExtendOneReport {
  bool extensible = false;
  std::optional<RbsPair<K>> next;
  std::optional<TruncatedDeformation<K>> extended;
};

// One step of the extension problem: the next coefficient must satisfy
// d(next) = obstruction, a linear system in the flattened arity-1
// coordinates.  Solvability is exactly extensibility; the particular
// solution (free coordinates zero) is returned.
template <class K>
ExtendOneReport<K> extend_one_order(const LeibnizAlgebra<K>& alg, const Representation<K>& rep,
                                    const TruncatedDeformation<K>& def) {
  ObstructionResult<K> ob = obstruction(alg, rep, def);
  Matrix<K> d1 = differential_matrix(alg, rep, def.base(), 1);
  AffineSolution<K> sol = solve_affine(d1, flatten_cochain(ob.cochain));
  ExtendOneReport<K> out;
  out.extensible = sol.consistent();
  if (out.extensible) {
    Cochain<K> next = unflatten_cochain(*sol.particular, 1, rep.dimV, alg.dim);
    out.next = next.to_pair();
    std::vector<RbsPair<K>> cs = def.coeffs;
    cs.push_back(*out.next);
    out.extended = TruncatedDeformation<K>(std::move(cs));
  }
  return out;
}

template <class K>
struct ExtendToReport {
  std::size_t reached = 0;
  TruncatedDeformation<K> final;
};

// Repeats single-step extension until the target order or the first
// obstruction that is not a coboundary.
template <class K>
ExtendToReport<K> extend_to_order(const LeibnizAlgebra<K>& alg, const Representation<K>& rep,
                                  const TruncatedDeformation<K>& def, std::size_t target) {
  if (target < def.order()) throw input_error("target order is below the deformation's current order");
  ExtendToReport<K> out{def.order(), def};
  while (out.reached < target) {
    ExtendOneReport<K> step = extend_one_order(alg, rep, out.final);
    if (!step.extensible) break;
    out.final = *step.extended;
    out.reached = out.final.order();
  }
  return out;
}

}  // namespace rbs
