#pragma once

// Independent reference implementations. They deliberately avoid the library
// code paths they are compared against.

#include <algorithm>
#include <numeric>
#include <vector>

#include "tropcon/dense.hpp"
#include "tropcon/rational.hpp"
#include "tropcon/trop_core.hpp"

namespace tropcon::testing {

/// max over permutations via std::next_permutation.
inline Rational brute_trop_det(const TropMatrix& m) {
  std::vector<int> sigma(static_cast<std::size_t>(m.rows()));
  std::iota(sigma.begin(), sigma.end(), 0);
  bool first = true;
  Rational best;
  do {
    Rational s = 0;
    for (Index i = 0; i < m.rows(); ++i) s += m(i, sigma[static_cast<std::size_t>(i)]).value();
    if (first || s > best) best = s;
    first = false;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return best;
}

/// Laplace expansion along the first row.
template <class R>
R cofactor_det(const Matrix<R>& m) {
  const Index n = m.rows();
  if (n == 0) return R(1);
  if (n == 1) return m(0, 0);
  R total(0);
  for (Index j = 0; j < n; ++j) {
    Matrix<R> minor(n - 1, n - 1);
    for (Index i = 1; i < n; ++i) {
      Index c = 0;
      for (Index k = 0; k < n; ++k) {
        if (k != j) minor(i - 1, c++) = m(i, k);
      }
    }
    const R term = m(0, j) * cofactor_det(minor);
    total = j % 2 == 0 ? R(total + term) : R(total - term);
  }
  return total;
}

/// Maximum of row . p over the coordinates, and how often it is attained.
inline std::pair<Rational, int> row_maximum(const TropVector& row, const TropPoint& p) {
  Rational best;
  int count = 0;
  for (Index j = 0; j < row.size(); ++j) {
    const Rational v = row(j).value() + p[j].value();
    if (count == 0 || v > best) {
      best = v;
      count = 1;
    } else if (v == best) {
      ++count;
    }
  }
  return {best, count};
}

}  // namespace tropcon::testing
