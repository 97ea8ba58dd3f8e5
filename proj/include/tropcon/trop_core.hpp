#pragma once

#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "tropcon/dense.hpp"
#include "tropcon/permutation.hpp"
#include "tropcon/rational.hpp"

namespace tropcon {

/// Element of the max-plus semiring over the rationals. a (+) b = max(a, b),
/// a (.) b = a + b. The tropical zero (-inf) is not representable.
class TropScalar {
 public:
  TropScalar() = default;
  TropScalar(Rational value) : value_(std::move(value)) {}  // NOLINT(google-explicit-constructor)
  TropScalar(long value) : value_(value) {}                  // NOLINT(google-explicit-constructor)
  TropScalar(int value) : value_(value) {}                   // NOLINT(google-explicit-constructor)

  const Rational& value() const noexcept { return value_; }

  /// Multiplicative inverse in the semifield, i.e. the negated rational.
  TropScalar inverse() const { return TropScalar(-value_); }

  friend TropScalar oplus(const TropScalar& a, const TropScalar& b) {
    return a.value_ < b.value_ ? b : a;
  }
  friend TropScalar otimes(const TropScalar& a, const TropScalar& b) {
    return TropScalar(a.value_ + b.value_);
  }
  /// a (.) b^{-1}
  friend TropScalar odiv(const TropScalar& a, const TropScalar& b) {
    return TropScalar(a.value_ - b.value_);
  }

  friend bool operator==(const TropScalar& a, const TropScalar& b) { return a.value_ == b.value_; }
  friend bool operator!=(const TropScalar& a, const TropScalar& b) { return a.value_ != b.value_; }
  friend bool operator<(const TropScalar& a, const TropScalar& b) { return a.value_ < b.value_; }
  friend bool operator<=(const TropScalar& a, const TropScalar& b) { return a.value_ <= b.value_; }
  friend bool operator>(const TropScalar& a, const TropScalar& b) { return a.value_ > b.value_; }
  friend bool operator>=(const TropScalar& a, const TropScalar& b) { return a.value_ >= b.value_; }

 private:
  Rational value_{0};
};

std::string to_string(const TropScalar& x);
inline std::ostream& operator<<(std::ostream& os, const TropScalar& x) { return os << to_string(x); }

}  // namespace tropcon

namespace Eigen {
template <>
struct NumTraits<tropcon::TropScalar> : tropcon::detail::ExactNumTraits<tropcon::TropScalar> {};
}  // namespace Eigen

namespace tropcon {

using TropMatrix = Matrix<TropScalar>;
using TropVector = Vector<TropScalar>;

/// Builds a tropical matrix from rows of rationals; rows must have equal length.
TropMatrix make_trop_matrix(std::initializer_list<std::initializer_list<Rational>> rows);

/// Homogeneous tropical coordinates [y_1 : ... : y_{n+1}]. Equality is
/// projective: two points are equal iff their canonical forms agree.
class TropPoint {
 public:
  TropPoint() = default;
  explicit TropPoint(TropVector coords) : coords_(std::move(coords)) {}
  TropPoint(std::initializer_list<Rational> coords);

  Index size() const noexcept { return coords_.size(); }
  const TropScalar& operator[](Index i) const { return coords_(i); }
  const TropVector& coords() const noexcept { return coords_; }

  /// Last coordinate shifted to 0. Idempotent.
  TropPoint canonical() const;

  /// The n affine coordinates y_i - y_{n+1}.
  Vector<Rational> affine() const;
  static TropPoint from_affine(const Vector<Rational>& affine);

  friend bool operator==(const TropPoint& a, const TropPoint& b);
  friend bool operator!=(const TropPoint& a, const TropPoint& b) { return !(a == b); }

 private:
  TropVector coords_;
};

/// "[c1:c2:...]" of the canonical form.
std::string to_string(const TropPoint& p);
inline std::ostream& operator<<(std::ostream& os, const TropPoint& p) { return os << to_string(p); }
/// "(x1, x2, ...)" of the affine chart.
std::string to_affine_string(const TropPoint& p);
/// Coordinates exactly as stored, without canonicalization.
std::string to_raw_string(const TropPoint& p);

/// Tropical determinant together with every permutation attaining it.
struct TropDeterminant {
  TropScalar value;
  std::vector<Permutation> optimal;  // lexicographic order
};

/// max over sigma of sum_i m(i, sigma(i)) by full enumeration.
TropDeterminant trop_det(const TropMatrix& m, int bound = kDefaultEnumerationBound);

/// Same value as trop_det, via the Hungarian algorithm (O(n^3), no bound).
TropScalar trop_det_assignment(const TropMatrix& m);

/// [ |O^1|_t : ... : |O^{n+1}|_t ] for an n x (n+1) matrix, canonicalized.
TropPoint trop_cramer(const TropMatrix& o);

/// Stable join of two plane points or stable meet of two plane lines.
TropPoint cross_product(const TropPoint& x, const TropPoint& y);

/// True iff max_j (coeffs_j (.) p_j) is attained at least twice.
bool attains_max_twice(const TropVector& coeffs, const TropPoint& p);

/// Coefficients of the stable conic through five plane points, in the
/// monomial order x^2, xy, y^2, x, y, 1.
TropPoint stable_conic(std::span<const TropPoint> points);

/// Tropical value of a conic with coefficients `conic` at plane point `p`,
/// per monomial (same order as stable_conic).
TropVector conic_terms(const TropPoint& conic, const TropPoint& p);

}  // namespace tropcon
