#pragma once

#include <cstdint>
#include <vector>

#include "rbs/algebra.hpp"
#include "rbs/rota_baxter.hpp"
#include "rbs/scalar.hpp"

namespace rbs {

// Search-space size exceeded the configured cap; carries the size the
// caller would need to allow.
struct budget_error : input_error {
  Int required;
  explicit budget_error(Int req)
      : input_error("search space has " + req.str() + " candidates, above the configured budget"),
        required(std::move(req)) {}
};

inline constexpr std::uint64_t kDefaultSearchBudget = std::uint64_t(1) << 24;

LeibnizAlgebra<Fp> algebra_mod_p(const LeibnizAlgebra<Rational>& a, std::int64_t p);
Representation<Fp> rep_mod_p(const Representation<Rational>& r, std::int64_t p);
RbsPair<Fp> pair_mod_p(const RbsPair<Rational>& pr, std::int64_t p);

// Exhaustive enumeration of every (R, S) pair over F_p satisfying the
// defining identities, in ascending lexicographic order of the entry
// sequence (R row-major, then S row-major).  The candidate space may be
// split into contiguous index ranges handled by parallel workers; the
// per-range results are concatenated in range order, so the output is
// identical for every worker count.
std::vector<RbsPair<Fp>> search_rbs_mod_p(const LeibnizAlgebra<Rational>& a,
                                          const Representation<Rational>& rep, std::int64_t p,
                                          const Int& budget = Int(kDefaultSearchBudget),
                                          unsigned workers = 1);

}  // namespace rbs
