#include "tropcon/feasibility.hpp"

#include <algorithm>

#include "tropcon/errors.hpp"

namespace tropcon {
namespace {

// Scale so the leading nonzero coefficient has magnitude one; lets exact
// duplicates be dropped between elimination rounds.
LinearConstraint normalized(LinearConstraint c) {
  for (Index j = 0; j < c.coeffs.size(); ++j) {
    if (c.coeffs(j) != 0) {
      const Rational scale = abs(c.coeffs(j));
      for (Index k = 0; k < c.coeffs.size(); ++k) c.coeffs(k) /= scale;
      c.bound /= scale;
      break;
    }
  }
  return c;
}

bool same(const LinearConstraint& a, const LinearConstraint& b) {
  return a.bound == b.bound && a.coeffs == b.coeffs;
}

std::vector<LinearConstraint> eliminate_last(const std::vector<LinearConstraint>& system,
                                             Index var) {
  std::vector<LinearConstraint> upper, lower, out;
  for (const auto& c : system) {
    if (c.coeffs(var) > 0) {
      upper.push_back(c);
    } else if (c.coeffs(var) < 0) {
      lower.push_back(c);
    } else {
      out.push_back(c);
    }
  }
  for (const auto& u : upper) {
    for (const auto& l : lower) {
      // (-l_v) * u + u_v * l cancels x_var.
      const Rational su = -l.coeffs(var);
      const Rational sl = u.coeffs(var);
      LinearConstraint c{Vector<Rational>(u.coeffs.size()), su * u.bound + sl * l.bound};
      for (Index k = 0; k < c.coeffs.size(); ++k) c.coeffs(k) = su * u.coeffs(k) + sl * l.coeffs(k);
      c.coeffs(var) = 0;
      out.push_back(std::move(c));
    }
  }
  std::vector<LinearConstraint> unique;
  for (auto& c : out) {
    LinearConstraint n = normalized(std::move(c));
    if (std::none_of(unique.begin(), unique.end(), [&](const auto& e) { return same(e, n); })) {
      unique.push_back(std::move(n));
    }
  }
  return unique;
}

}  // namespace

void add_equality(std::vector<LinearConstraint>& system, const Vector<Rational>& lhs,
                  const Rational& rhs) {
  system.push_back({lhs, rhs});
  Vector<Rational> negated(lhs.size());
  for (Index k = 0; k < lhs.size(); ++k) negated(k) = -lhs(k);
  system.push_back({negated, -rhs});
}

std::optional<Vector<Rational>> find_feasible_point(const std::vector<LinearConstraint>& system,
                                                    Index dimension) {
  for (const auto& c : system) {
    if (c.coeffs.size() != dimension) throw DimensionError("find_feasible_point: constraint size");
  }
  // stages[k] only involves x_0 .. x_{k-1}.
  std::vector<std::vector<LinearConstraint>> stages(static_cast<std::size_t>(dimension) + 1);
  stages[static_cast<std::size_t>(dimension)] = system;
  for (Index v = dimension - 1; v >= 0; --v) {
    stages[static_cast<std::size_t>(v)] = eliminate_last(stages[static_cast<std::size_t>(v) + 1], v);
  }
  for (const auto& c : stages[0]) {
    if (c.bound < 0) return std::nullopt;
  }
  Vector<Rational> x = Vector<Rational>::Constant(dimension, Rational(0));
  for (Index v = 0; v < dimension; ++v) {
    std::optional<Rational> lo, hi;
    for (const auto& c : stages[static_cast<std::size_t>(v) + 1]) {
      if (c.coeffs(v) == 0) continue;
      Rational rest = c.bound;
      for (Index k = 0; k < v; ++k) rest -= c.coeffs(k) * x(k);
      const Rational limit = rest / c.coeffs(v);
      if (c.coeffs(v) > 0) {
        if (!hi || limit < *hi) hi = limit;
      } else {
        if (!lo || limit > *lo) lo = limit;
      }
    }
    if (lo && hi && *lo > *hi) return std::nullopt;  // unreachable for exact elimination
    x(v) = lo ? *lo : hi ? *hi : Rational(0);
  }
  return x;
}

}  // namespace tropcon
