#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>

#include "rbs/scalar.hpp"

namespace rbs {

struct WittReport {
  bool holds = true;
  std::size_t checked_pairs = 0;
  // Pairs whose bracket lands on index 0 or outside the window.
  std::size_t skipped_pairs = 0;
  std::optional<std::pair<int, int>> witness;  // first failing (m, n)
  std::optional<Rational> residual;            // coefficient residual at the target index
};

// Finite-window verification of the twisted-operator identity on the
// graded algebra with bracket [l_m, l_n] = (m-n) l_{m+n}, where the
// operator scales l_n by (1-q)/(1-q^n) and the twist scales l_n by q^n.
// All indices m, n with 0 < |m|, |n|, |m+n| <= window are checked; pairs
// with m+n = 0 or |m+n| > window fall outside the window and are counted
// as skipped.
//
// Preconditions: q != 0 and q^n != 1 for 0 < n <= 2*window (otherwise the
// operator is undefined on some index); window >= 2.
//
// `overrides` substitutes the operator's eigencoefficient on selected
// indices, used to build negative controls in tests.
WittReport witt_window_check(const Rational& q, int window,
                             const std::map<int, Rational>& overrides = {});

}  // namespace rbs
