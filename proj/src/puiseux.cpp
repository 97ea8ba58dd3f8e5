#include "tropcon/puiseux.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

#include "tropcon/errors.hpp"

namespace tropcon {

PuiseuxPoly PuiseuxPoly::monomial(const Rational& coefficient, const Rational& exponent) {
  PuiseuxPoly out;
  out.add_term(exponent, coefficient);
  return out;
}

PuiseuxPoly PuiseuxPoly::from_terms(const std::vector<std::pair<Rational, Rational>>& terms) {
  PuiseuxPoly out;
  for (const auto& [exponent, coefficient] : terms) out.add_term(exponent, coefficient);
  return out;
}

void PuiseuxPoly::add_term(const Rational& exponent, const Rational& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

const Rational& PuiseuxPoly::order() const {
  if (terms_.empty()) throw TropicalizationError("order of the zero series is undefined");
  return terms_.begin()->first;
}

const Rational& PuiseuxPoly::principal_coefficient() const {
  if (terms_.empty()) {
    throw TropicalizationError("principal coefficient of the zero series is undefined");
  }
  return terms_.begin()->second;
}

TropScalar PuiseuxPoly::valuation() const {
  if (terms_.empty()) throw TropicalizationError("tropicalization undefined for the zero series");
  return TropScalar(-terms_.begin()->first);
}

PuiseuxPoly operator+(const PuiseuxPoly& a, const PuiseuxPoly& b) {
  PuiseuxPoly out = a;
  for (const auto& [e, c] : b.terms_) out.add_term(e, c);
  return out;
}

PuiseuxPoly operator-(const PuiseuxPoly& a) {
  PuiseuxPoly out = a;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

PuiseuxPoly operator-(const PuiseuxPoly& a, const PuiseuxPoly& b) {
  PuiseuxPoly out = a;
  for (const auto& [e, c] : b.terms_) out.add_term(e, -c);
  return out;
}

PuiseuxPoly operator*(const PuiseuxPoly& a, const PuiseuxPoly& b) {
  PuiseuxPoly out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  }
  return out;
}

std::string to_string(const PuiseuxPoly& x) {
  if (x.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : x.terms()) {
    if (!first) out << " + ";
    first = false;
    out << to_string(c) << "*t^" << to_string(e);
  }
  return out.str();
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// One summand: "c", "t", "t^q", "c*t", "c*t^q".
std::pair<Rational, Rational> parse_term(std::string_view term, std::string_view whole) {
  term = trim(term);
  if (term.empty()) {
    throw std::invalid_argument("malformed Puiseux polynomial '" + std::string(whole) + "'");
  }
  Rational coefficient(1);
  std::string_view power = term;
  if (auto star = term.find('*'); star != std::string_view::npos) {
    coefficient = parse_rational(trim(term.substr(0, star)));
    power = trim(term.substr(star + 1));
  } else if (term.front() != 't') {
    return {Rational(0), parse_rational(term)};
  }
  if (power.empty() || power.front() != 't') {
    throw std::invalid_argument("malformed Puiseux term '" + std::string(term) + "'");
  }
  power.remove_prefix(1);
  power = trim(power);
  if (power.empty()) return {Rational(1), coefficient};
  if (power.front() != '^') {
    throw std::invalid_argument("malformed Puiseux term '" + std::string(term) + "'");
  }
  power.remove_prefix(1);
  return {parse_rational(trim(power)), coefficient};
}

}  // namespace

PuiseuxPoly parse_puiseux(std::string_view text) {
  const std::string_view body = trim(text);
  if (body == "0") return {};
  std::vector<std::pair<Rational, Rational>> terms;
  std::size_t start = 0;
  while (start <= body.size()) {
    const std::size_t plus = body.find('+', start);
    const std::size_t stop = plus == std::string_view::npos ? body.size() : plus;
    terms.push_back(parse_term(body.substr(start, stop - start), text));
    if (plus == std::string_view::npos) break;
    start = plus + 1;
  }
  return PuiseuxPoly::from_terms(terms);
}

TropScalar valuation(const PuiseuxPoly& x) { return x.valuation(); }

Rational principal_coefficient(const PuiseuxPoly& x) { return x.principal_coefficient(); }

TropScalar tropicalize(const PuiseuxPoly& x) {
  if (x.is_zero()) throw TropicalizationError("no tropicalization: zero component");
  return x.valuation();
}

TropPoint tropicalize(const PuiseuxVector& x) {
  TropVector coords(x.size());
  for (Index i = 0; i < x.size(); ++i) coords(i) = tropicalize(x(i));
  return TropPoint(std::move(coords)).canonical();
}

TropMatrix tropicalize(const PuiseuxMatrix& b) {
  TropMatrix o(b.rows(), b.cols());
  for (Index i = 0; i < b.rows(); ++i) {
    for (Index j = 0; j < b.cols(); ++j) o(i, j) = tropicalize(b(i, j));
  }
  return o;
}

Matrix<Rational> principal_coefficients(const PuiseuxMatrix& b) {
  Matrix<Rational> a(b.rows(), b.cols());
  for (Index i = 0; i < b.rows(); ++i) {
    for (Index j = 0; j < b.cols(); ++j) a(i, j) = b(i, j).principal_coefficient();
  }
  return a;
}

}  // namespace tropcon
