#pragma once

#include <optional>
#include <vector>

#include "tropcon/dense.hpp"
#include "tropcon/rational.hpp"

namespace tropcon {

/// coeffs . x <= bound
struct LinearConstraint {
  Vector<Rational> coeffs;
  Rational bound;
};

/// Adds  lhs . x == rhs  as a pair of opposite inequalities.
void add_equality(std::vector<LinearConstraint>& system, const Vector<Rational>& lhs,
                  const Rational& rhs);

/// Exact Fourier-Motzkin feasibility over the rationals. Returns a feasible
/// point or nullopt. The point is chosen coordinate by coordinate from x_0:
/// the least feasible value when bounded below, else the greatest when
/// bounded above, else 0.
std::optional<Vector<Rational>> find_feasible_point(const std::vector<LinearConstraint>& system,
                                                    Index dimension);

}  // namespace tropcon
