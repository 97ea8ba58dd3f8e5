#pragma once

#include <concepts>
#include <string>

#include "tropcon/dense.hpp"
#include "tropcon/errors.hpp"
#include "tropcon/permutation.hpp"

namespace tropcon {

/// Exact commutative ring usable as an Eigen scalar. Division is never needed.
template <class R>
concept CommutativeRing = requires(const R& a, const R& b) {
  { a + b } -> std::convertible_to<R>;
  { a - b } -> std::convertible_to<R>;
  { a * b } -> std::convertible_to<R>;
  { -a } -> std::convertible_to<R>;
  { is_zero(a) } -> std::convertible_to<bool>;
  R(0);
  R(1);
};

/// Signed permutation expansion of a square matrix.
template <CommutativeRing R>
R classical_det(const Matrix<R>& b, int bound = kDefaultEnumerationBound) {
  if (b.rows() != b.cols()) {
    throw DimensionError("classical_det: matrix is " + std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()));
  }
  if (b.rows() == 0) return R(1);
  check_enumeration_bound(b.rows(), bound);
  R total(0);
  for_each_permutation(static_cast<int>(b.rows()), [&](const Permutation& sigma, int sign) {
    R term(1);
    for (Index i = 0; i < b.rows(); ++i) term = term * b(i, sigma[static_cast<std::size_t>(i)]);
    total = sign > 0 ? total + term : total - term;
  });
  return total;
}

/// Homogeneous solution of an n x (n+1) system: component i is
/// (-1)^i * det(B with column i deleted), zero-based. Throws
/// DegenerateSystemError when every maximal minor vanishes.
template <CommutativeRing R>
Vector<R> classical_cramer(const Matrix<R>& b, int bound = kDefaultEnumerationBound) {
  if (b.cols() != b.rows() + 1) {
    throw DimensionError("classical_cramer: expected n x (n+1), got " + std::to_string(b.rows()) +
                         "x" + std::to_string(b.cols()));
  }
  Vector<R> solution(b.cols());
  bool all_zero = true;
  for (Index i = 0; i < b.cols(); ++i) {
    const R minor = classical_det<R>(delete_column(b, i), bound);
    solution(i) = i % 2 == 0 ? minor : -minor;
    all_zero = all_zero && is_zero(minor);
  }
  if (all_zero) throw DegenerateSystemError("classical_cramer: all maximal minors vanish");
  return solution;
}

/// b * x without relying on Eigen's product kernels (which assume a field-like scalar).
template <CommutativeRing R>
Vector<R> apply_rows(const Matrix<R>& b, const Vector<R>& x) {
  if (b.cols() != x.size()) throw DimensionError("apply_rows: size mismatch");
  Vector<R> out(b.rows());
  for (Index i = 0; i < b.rows(); ++i) {
    R acc(0);
    for (Index j = 0; j < b.cols(); ++j) acc = acc + b(i, j) * x(j);
    out(i) = acc;
  }
  return out;
}

}  // namespace tropcon
