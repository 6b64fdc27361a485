#include "rbs/search.hpp"

#include <cstddef>
#include <thread>
#include <utility>

namespace rbs {

LeibnizAlgebra<Fp> algebra_mod_p(const LeibnizAlgebra<Rational>& a, std::int64_t p) {
  LeibnizAlgebra<Fp> out(a.dim);
  for (std::size_t f = 0; f < a.c.size(); ++f) out.c[f] = reduce_mod_p(a.c[f], p);
  return out;
}

namespace {

Matrix<Fp> matrix_mod_p(const Matrix<Rational>& m, std::int64_t p) {
  Matrix<Fp> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = reduce_mod_p(m(i, j), p);
  return out;
}

// Decodes candidate `index` into a pair by reading base-p digits most
// significant first: R's entries in row-major order, then S's.  Ascending
// index is therefore ascending lexicographic order of the entry sequence.
RbsPair<Fp> decode_candidate(std::uint64_t index, std::size_t dg, std::size_t dv, std::int64_t p) {
  const std::size_t n = 2 * dg * dv;
  std::vector<std::int64_t> digits(n, 0);
  for (std::size_t t = n; t-- > 0;) {
    digits[t] = static_cast<std::int64_t>(index % static_cast<std::uint64_t>(p));
    index /= static_cast<std::uint64_t>(p);
  }
  RbsPair<Fp> pr{Matrix<Fp>(dg, dv), Matrix<Fp>(dg, dv)};
  std::size_t t = 0;
  for (std::size_t i = 0; i < dg; ++i)
    for (std::size_t j = 0; j < dv; ++j) pr.R(i, j) = Fp(digits[t++], p);
  for (std::size_t i = 0; i < dg; ++i)
    for (std::size_t j = 0; j < dv; ++j) pr.S(i, j) = Fp(digits[t++], p);
  return pr;
}

}  // namespace

Representation<Fp> rep_mod_p(const Representation<Rational>& r, std::int64_t p) {
  Representation<Fp> out;
  out.dimV = r.dimV;
  for (const Matrix<Rational>& m : r.rhoL) out.rhoL.push_back(matrix_mod_p(m, p));
  for (const Matrix<Rational>& m : r.rhoR) out.rhoR.push_back(matrix_mod_p(m, p));
  return out;
}

RbsPair<Fp> pair_mod_p(const RbsPair<Rational>& pr, std::int64_t p) {
  return {matrix_mod_p(pr.R, p), matrix_mod_p(pr.S, p)};
}

std::vector<RbsPair<Fp>> search_rbs_mod_p(const LeibnizAlgebra<Rational>& a,
                                          const Representation<Rational>& rep, std::int64_t p,
                                          const Int& budget, unsigned workers) {
  if (!is_prime(p)) throw input_error("search modulus must be prime");
  const LeibnizAlgebra<Fp> ap = algebra_mod_p(a, p);
  const Representation<Fp> rp = rep_mod_p(rep, p);
  const std::size_t dg = a.dim, dv = rep.dimV;

  Int total = 1;
  for (std::size_t t = 0; t < 2 * dg * dv; ++t) total *= p;
  if (total > budget) throw budget_error(total);
  if (total > (Int(1) << 62)) throw input_error("search space too large to enumerate");
  const std::uint64_t count = static_cast<std::uint64_t>(total);

  if (workers == 0) workers = 1;
  if (static_cast<std::uint64_t>(workers) > count) workers = static_cast<unsigned>(count);

  std::vector<std::vector<RbsPair<Fp>>> found(workers);
  auto scan = [&](std::uint64_t begin, std::uint64_t end, std::vector<RbsPair<Fp>>& out) {
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      RbsPair<Fp> cand = decode_candidate(idx, dg, dv, p);
      if (check_rbs(ap, rp, cand).holds) out.push_back(std::move(cand));
    }
  };

  if (workers == 1) {
    scan(0, count, found[0]);
  } else {
    const std::uint64_t chunk = count / workers, rem = count % workers;
    std::vector<std::thread> pool;
    std::uint64_t begin = 0;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t end = begin + chunk + (w < rem ? 1 : 0);
      pool.emplace_back(scan, begin, end, std::ref(found[w]));
      begin = end;
    }
    for (std::thread& t : pool) t.join();
  }

  std::vector<RbsPair<Fp>> merged;
  for (std::vector<RbsPair<Fp>>& part : found)
    for (RbsPair<Fp>& pr : part) merged.push_back(std::move(pr));
  return merged;
}

}  // namespace rbs
