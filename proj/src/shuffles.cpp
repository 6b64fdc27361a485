#include "rbs/multimap.hpp"

namespace rbs {

namespace {

int permutation_sign(const std::vector<std::size_t>& perm) {
  int inversions = 0;
  for (std::size_t a = 0; a < perm.size(); ++a)
    for (std::size_t b = a + 1; b < perm.size(); ++b)
      if (perm[a] > perm[b]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

// Advances an i-subset of {0..n-1} (sorted) to its lexicographic successor;
// returns false when pick was the last subset.
bool next_subset(std::vector<std::size_t>& pick, std::size_t n) {
  const std::size_t i = pick.size();
  for (std::size_t t = i; t-- > 0;) {
    if (pick[t] < n - i + t) {
      ++pick[t];
      for (std::size_t s = t + 1; s < i; ++s) pick[s] = pick[s - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

std::vector<Shuffle> shuffles(std::size_t i, std::size_t j) {
  const std::size_t n = i + j;
  std::vector<Shuffle> out;

  // Each shuffle is determined by the sorted value set of the first block;
  // enumerate i-subsets of {0..n-1} in lexicographic order.
  std::vector<std::size_t> pick(i);
  for (std::size_t t = 0; t < i; ++t) pick[t] = t;
  do {
    Shuffle sh;
    sh.perm.resize(n);
    std::vector<bool> used(n, false);
    for (std::size_t t = 0; t < i; ++t) {
      sh.perm[t] = pick[t];
      used[pick[t]] = true;
    }
    std::size_t pos = i;
    for (std::size_t v = 0; v < n; ++v)
      if (!used[v]) sh.perm[pos++] = v;
    sh.sign = permutation_sign(sh.perm);
    out.push_back(std::move(sh));
  } while (i > 0 && next_subset(pick, n));
  return out;
}

}  // namespace rbs
