#pragma once

#include <map>
#include <ostream>
#include <string>
#include <string_view>

#include "tropcon/dense.hpp"
#include "tropcon/rational.hpp"
#include "tropcon/ring.hpp"
#include "tropcon/trop_core.hpp"

namespace tropcon {

/// Finite Puiseux sum  sum_q c_q t^q  with rational exponents and nonzero
/// rational coefficients. The empty sum is zero.
class PuiseuxPoly {
 public:
  using Terms = std::map<Rational, Rational>;  // exponent -> coefficient

  PuiseuxPoly() = default;
  PuiseuxPoly(int constant) : PuiseuxPoly(monomial(Rational(constant), Rational(0))) {}  // NOLINT
  explicit PuiseuxPoly(const Rational& constant) : PuiseuxPoly(monomial(constant, Rational(0))) {}

  /// coefficient * t^exponent
  static PuiseuxPoly monomial(const Rational& coefficient, const Rational& exponent);
  /// Builds from (exponent, coefficient) pairs; repeated exponents accumulate.
  static PuiseuxPoly from_terms(const std::vector<std::pair<Rational, Rational>>& terms);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Minimal exponent o(x). Throws TropicalizationError on zero.
  const Rational& order() const;
  /// Coefficient of the minimal-exponent term. Throws on zero.
  const Rational& principal_coefficient() const;
  /// T(x) = -o(x). Throws TropicalizationError on zero.
  TropScalar valuation() const;

  friend PuiseuxPoly operator+(const PuiseuxPoly& a, const PuiseuxPoly& b);
  friend PuiseuxPoly operator-(const PuiseuxPoly& a, const PuiseuxPoly& b);
  friend PuiseuxPoly operator*(const PuiseuxPoly& a, const PuiseuxPoly& b);
  friend PuiseuxPoly operator-(const PuiseuxPoly& a);
  friend bool operator==(const PuiseuxPoly& a, const PuiseuxPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const PuiseuxPoly& a, const PuiseuxPoly& b) { return !(a == b); }

 private:
  void add_term(const Rational& exponent, const Rational& coefficient);

  Terms terms_;
};

inline bool is_zero(const PuiseuxPoly& x) { return x.is_zero(); }

/// "c1*t^q1 + c2*t^q2 + ..." in increasing exponent order; "0" for zero.
std::string to_string(const PuiseuxPoly& x);
inline std::ostream& operator<<(std::ostream& os, const PuiseuxPoly& x) { return os << to_string(x); }
/// Inverse of to_string. Also accepts bare constants, "t", "t^q" and "c*t".
PuiseuxPoly parse_puiseux(std::string_view text);

}  // namespace tropcon

namespace Eigen {
template <>
struct NumTraits<tropcon::PuiseuxPoly> : tropcon::detail::ExactNumTraits<tropcon::PuiseuxPoly> {};
}  // namespace Eigen

namespace tropcon {

using PuiseuxMatrix = Matrix<PuiseuxPoly>;
using PuiseuxVector = Vector<PuiseuxPoly>;

TropScalar valuation(const PuiseuxPoly& x);
Rational principal_coefficient(const PuiseuxPoly& x);

/// Componentwise valuation; every entry must be nonzero.
TropScalar tropicalize(const PuiseuxPoly& x);
/// Canonical tropical point of a homogeneous Puiseux vector.
TropPoint tropicalize(const PuiseuxVector& x);
TropMatrix tropicalize(const PuiseuxMatrix& b);
Matrix<Rational> principal_coefficients(const PuiseuxMatrix& b);

inline PuiseuxPoly classical_det(const PuiseuxMatrix& b, int bound = kDefaultEnumerationBound) {
  return classical_det<PuiseuxPoly>(b, bound);
}
inline PuiseuxVector classical_cramer(const PuiseuxMatrix& b, int bound = kDefaultEnumerationBound) {
  return classical_cramer<PuiseuxPoly>(b, bound);
}

}  // namespace tropcon
