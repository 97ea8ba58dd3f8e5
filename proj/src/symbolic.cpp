#include "tropcon/symbolic.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "tropcon/errors.hpp"

namespace tropcon {

std::size_t VariableRegistry::add_family(const std::vector<std::string>& names) {
  std::vector<std::size_t> indices;
  for (const std::string& name : names) {
    if (find(name) || std::count(names.begin(), names.end(), name) > 1) {
      throw std::invalid_argument("duplicate variable name '" + name + "'");
    }
  }
  const std::size_t f = families_.size();
  for (const std::string& name : names) {
    indices.push_back(names_.size());
    names_.push_back(name);
    family_of_.push_back(f);
  }
  families_.push_back(std::move(indices));
  return f;
}

std::optional<std::size_t> VariableRegistry::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

namespace {

void trim_trailing_zeros(Monomial& m) {
  while (!m.empty() && m.back() == 0) m.pop_back();
}

Monomial multiply(const Monomial& a, const Monomial& b) {
  Monomial out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

}  // namespace

MultiPoly::MultiPoly(int constant) { add_term({}, Integer(constant)); }

MultiPoly MultiPoly::variable(std::size_t index) {
  Monomial m(index + 1, 0);
  m[index] = 1;
  return term(Integer(1), std::move(m));
}

MultiPoly MultiPoly::term(Integer coefficient, Monomial exponents) {
  for (int e : exponents) {
    if (e < 0) throw std::invalid_argument("MultiPoly: negative exponent");
  }
  trim_trailing_zeros(exponents);
  MultiPoly out;
  out.add_term(exponents, coefficient);
  return out;
}

void MultiPoly::add_term(const Monomial& m, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational MultiPoly::evaluate(std::span<const Rational> point) const {
  Rational total(0);
  for (const auto& [m, c] : terms_) {
    if (m.size() > point.size()) throw DimensionError("MultiPoly::evaluate: point too short");
    Rational value(c);
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (int k = 0; k < m[i]; ++k) value *= point[i];
    }
    total += value;
  }
  return total;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly out = a;
  for (const auto& [m, c] : b.terms_) out.add_term(m, c);
  return out;
}

MultiPoly operator-(const MultiPoly& a) {
  MultiPoly out = a;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly out = a;
  for (const auto& [m, c] : b.terms_) out.add_term(m, -c);
  return out;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(multiply(ma, mb), ca * cb);
  }
  return out;
}

std::string to_string(const MultiPoly& p, const VariableRegistry& registry) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    Integer magnitude = c < 0 ? Integer(-c) : c;
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (magnitude != 1 || m.empty()) {
      out << magnitude.str();
      wrote = true;
    }
    for (std::size_t v = 0; v < m.size(); ++v) {
      if (m[v] == 0) continue;
      if (wrote) out << '*';
      out << registry.name(v);
      if (m[v] > 1) out << '^' << m[v];
      wrote = true;
    }
  }
  return out.str();
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const VariableRegistry& registry)
      : text_(text), registry_(registry) {}

  MultiPoly parse() {
    MultiPoly total;
    skip_space();
    bool negative = false;
    if (peek() == '-' || peek() == '+') negative = get() == '-';
    for (;;) {
      MultiPoly t = parse_product();
      total = negative ? total - t : total + t;
      skip_space();
      if (at_end()) break;
      const char op = get();
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      negative = op == '-';
    }
    return total;
  }

 private:
  MultiPoly parse_product() {
    MultiPoly product(1);
    for (;;) {
      skip_space();
      product = product * parse_factor();
      skip_space();
      if (peek() != '*') return product;
      get();
    }
  }

  MultiPoly parse_factor() {
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::string digits;
      while (std::isdigit(static_cast<unsigned char>(peek()))) digits.push_back(get());
      digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size() - 1));
      return MultiPoly::term(Integer(digits), {});
    }
    std::string name;
    while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') name.push_back(get());
    if (name.empty()) fail("expected a variable or integer");
    auto index = registry_.find(name);
    if (!index) fail("unknown variable '" + name + "'");
    int exponent = 1;
    skip_space();
    if (peek() == '^') {
      get();
      skip_space();
      std::string digits;
      while (std::isdigit(static_cast<unsigned char>(peek()))) digits.push_back(get());
      if (digits.empty()) fail("expected an exponent");
      exponent = std::stoi(digits);
    }
    Monomial m(*index + 1, 0);
    m[*index] = exponent;
    return MultiPoly::term(Integer(1), std::move(m));
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  char get() { return at_end() ? '\0' : text_[pos_++]; }
  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("parse_multipoly: " + why + " at offset " + std::to_string(pos_) +
                                " in '" + std::string(text_) + "'");
  }

  std::string_view text_;
  const VariableRegistry& registry_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_multipoly(std::string_view text, const VariableRegistry& registry) {
  return PolyParser(text, registry).parse();
}

std::optional<Multidegree> multidegree(const MultiPoly& p, const VariableRegistry& registry) {
  if (p.is_zero()) return std::nullopt;
  std::optional<Multidegree> common;
  for (const auto& [m, c] : p.terms()) {
    Multidegree degree(registry.family_count(), 0);
    for (std::size_t v = 0; v < m.size(); ++v) {
      if (m[v] == 0) continue;
      if (v >= registry.variable_count()) throw DimensionError("multidegree: unregistered variable");
      degree[registry.family_of(v)] += m[v];
    }
    if (!common) {
      common = std::move(degree);
    } else if (*common != degree) {
      return std::nullopt;
    }
  }
  return common;
}

bool monomials_disjoint(const MultiPoly& p, const MultiPoly& q) {
  auto a = p.terms().begin();
  auto b = q.terms().begin();
  while (a != p.terms().end() && b != q.terms().end()) {
    if (a->first < b->first) {
      ++a;
    } else if (b->first < a->first) {
      ++b;
    } else {
      return false;
    }
  }
  return true;
}

Matrix<Rational> evaluate(const Matrix<MultiPoly>& a, std::span<const Rational> point) {
  Matrix<Rational> out(a.rows(), a.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) out(i, j) = a(i, j).evaluate(point);
  }
  return out;
}

}  // namespace tropcon
