#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace tropcon {

// Expression templates are disabled so the types behave as plain values inside
// Eigen containers and generic ring code.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

/// Parses "7", "-3/4" or a terminating decimal such as "-1.25" exactly.
/// Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise (q > 0, lowest terms).
std::string to_string(const Rational& value);

inline bool is_zero(const Rational& x) { return x == 0; }

}  // namespace tropcon
