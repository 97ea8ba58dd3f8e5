#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "tropcon/errors.hpp"

namespace tropcon {

/// sigma[i] is the column chosen for row i.
using Permutation = std::vector<int>;

inline constexpr int kDefaultEnumerationBound = 8;

/// +1 for even permutations, -1 for odd ones (inversion count parity).
inline int permutation_sign(const Permutation& sigma) {
  int inversions = 0;
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    for (std::size_t j = i + 1; j < sigma.size(); ++j) {
      if (sigma[i] > sigma[j]) ++inversions;
    }
  }
  return inversions % 2 == 0 ? 1 : -1;
}

inline void check_enumeration_bound(long n, int bound) {
  if (n > bound) {
    throw EnumerationBoundError("permutation expansion of size " + std::to_string(n) +
                                " exceeds bound " + std::to_string(bound));
  }
}

/// Calls `visit(sigma, sign)` for every permutation of {0..n-1} in
/// lexicographic order.
template <class Visitor>
void for_each_permutation(int n, Visitor&& visit) {
  Permutation sigma(static_cast<std::size_t>(n));
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    visit(static_cast<const Permutation&>(sigma), permutation_sign(sigma));
  } while (std::next_permutation(sigma.begin(), sigma.end()));
}

}  // namespace tropcon
