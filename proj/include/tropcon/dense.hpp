#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Core>

#include "tropcon/rational.hpp"

namespace tropcon {

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Index = Eigen::Index;

/// Copy of `m` with column `col` removed.
template <class Derived>
Matrix<typename Derived::Scalar> delete_column(const Eigen::MatrixBase<Derived>& m, Index col) {
  std::vector<Index> keep;
  keep.reserve(static_cast<std::size_t>(m.cols()));
  for (Index j = 0; j < m.cols(); ++j) {
    if (j != col) keep.push_back(j);
  }
  return m(Eigen::all, keep);
}

/// Stacks equal-length vectors as the rows of a matrix.
template <class Scalar>
Matrix<Scalar> stack_rows(const std::vector<Vector<Scalar>>& rows) {
  const Index cols = rows.empty() ? 0 : rows.front().size();
  Matrix<Scalar> out(static_cast<Index>(rows.size()), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out.row(static_cast<Index>(i)) = rows[i].transpose();
  }
  return out;
}

namespace detail {

// Exact scalars: no epsilon, no vectorization, always initialized.
template <class T>
struct ExactNumTraits : Eigen::GenericNumTraits<T> {
  using Real = T;
  using NonInteger = T;
  using Literal = T;
  using Nested = T;
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 16,
    MulCost = 32
  };
  // Stream output of exact matrices prints full values.
  static constexpr int digits10() { return 0; }
};

}  // namespace detail
}  // namespace tropcon

namespace Eigen {
template <>
struct NumTraits<tropcon::Rational> : tropcon::detail::ExactNumTraits<tropcon::Rational> {};
}  // namespace Eigen
