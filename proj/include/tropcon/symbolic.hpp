#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tropcon/dense.hpp"
#include "tropcon/rational.hpp"
#include "tropcon/ring.hpp"
#include "tropcon/trop_core.hpp"

namespace tropcon {

/// Ordered, pairwise disjoint families of named variables C_1, ..., C_k.
/// Variables are numbered globally in registration order.
class VariableRegistry {
 public:
  /// Registers a new family; returns its index. Throws on a duplicate name.
  std::size_t add_family(const std::vector<std::string>& names);

  std::size_t family_count() const noexcept { return families_.size(); }
  std::size_t variable_count() const noexcept { return names_.size(); }
  const std::vector<std::size_t>& family(std::size_t f) const { return families_.at(f); }
  std::size_t family_of(std::size_t var) const { return family_of_.at(var); }
  const std::string& name(std::size_t var) const { return names_.at(var); }
  std::optional<std::size_t> find(std::string_view name) const;

 private:
  std::vector<std::vector<std::size_t>> families_;
  std::vector<std::size_t> family_of_;
  std::vector<std::string> names_;
};

/// Exponent vector indexed by global variable number. Stored without
/// trailing zeros so that the constant monomial is the empty vector.
using Monomial = std::vector<int>;

/// Per-family total degree.
using Multidegree = std::vector<int>;

/// Sparse integer-coefficient polynomial in the registry variables.
class MultiPoly {
 public:
  using Terms = std::map<Monomial, Integer>;

  MultiPoly() = default;
  MultiPoly(int constant);  // NOLINT(google-explicit-constructor)

  static MultiPoly variable(std::size_t index);
  static MultiPoly term(Integer coefficient, Monomial exponents);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }

  Rational evaluate(std::span<const Rational> point) const;

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

 private:
  void add_term(const Monomial& m, const Integer& c);

  Terms terms_;
};

inline bool is_zero(const MultiPoly& p) { return p.is_zero(); }

/// Monomials sorted lexicographically by registry order, highest first.
std::string to_string(const MultiPoly& p, const VariableRegistry& registry);

/// Parses sums of products such as "x^2*y*z - 3*m*n + 2"; every name must be
/// registered.
MultiPoly parse_multipoly(std::string_view text, const VariableRegistry& registry);

/// Multidegree if every monomial has the same per-family degree vector;
/// nullopt for the zero polynomial or mixed degrees.
std::optional<Multidegree> multidegree(const MultiPoly& p, const VariableRegistry& registry);
inline bool is_multihomogeneous(const MultiPoly& p, const VariableRegistry& registry) {
  return multidegree(p, registry).has_value();
}

/// No exponent vector occurs in both polynomials.
bool monomials_disjoint(const MultiPoly& p, const MultiPoly& q);

/// Entrywise evaluation of a polynomial matrix at a rational point.
Matrix<Rational> evaluate(const Matrix<MultiPoly>& a, std::span<const Rational> point);

}  // namespace tropcon

namespace Eigen {
template <>
struct NumTraits<tropcon::MultiPoly> : tropcon::detail::ExactNumTraits<tropcon::MultiPoly> {};
}  // namespace Eigen

namespace tropcon {

/// Signed contribution of each permutation optimal for |O|_t, in the order of
/// trop_det(o).optimal. Their sum is the pseudo-determinant.
template <CommutativeRing R>
std::vector<R> pseudo_det_contributions(const TropMatrix& o, const Matrix<R>& a,
                                        int bound = kDefaultEnumerationBound) {
  if (o.rows() != a.rows() || o.cols() != a.cols()) {
    throw DimensionError("pseudo_det: tropical and coefficient matrices differ in shape");
  }
  const TropDeterminant det = trop_det(o, bound);
  std::vector<R> out;
  out.reserve(det.optimal.size());
  for (const Permutation& sigma : det.optimal) {
    R term(1);
    for (Index i = 0; i < a.rows(); ++i) term = term * a(i, sigma[static_cast<std::size_t>(i)]);
    out.push_back(permutation_sign(sigma) > 0 ? term : R(-term));
  }
  return out;
}

/// Delta_O(A): the signed permutation expansion of A restricted to the
/// permutations attaining the tropical determinant of O.
template <CommutativeRing R>
R pseudo_det(const TropMatrix& o, const Matrix<R>& a, int bound = kDefaultEnumerationBound) {
  R total(0);
  for (const R& term : pseudo_det_contributions<R>(o, a, bound)) total = total + term;
  return total;
}

/// (S_1, ..., S_{n+1}) with S_i the pseudo-determinant of the submatrices with
/// column i deleted. No alternating sign is applied.
template <CommutativeRing R>
Vector<R> cram_o(const TropMatrix& o, const Matrix<R>& a, int bound = kDefaultEnumerationBound) {
  if (o.rows() != a.rows() || o.cols() != a.cols() || o.cols() != o.rows() + 1) {
    throw DimensionError("cram_o: expected matching n x (n+1) matrices");
  }
  Vector<R> out(o.cols());
  for (Index i = 0; i < o.cols(); ++i) {
    out(i) = pseudo_det<R>(delete_column(o, i), Matrix<R>(delete_column(a, i)), bound);
  }
  return out;
}

}  // namespace tropcon
