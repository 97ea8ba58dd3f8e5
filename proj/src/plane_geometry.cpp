#include "tropcon/plane_geometry.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "tropcon/errors.hpp"
#include "tropcon/feasibility.hpp"

namespace tropcon {
namespace {

AffinePoint affine(const Rational& x, const Rational& y) {
  AffinePoint p;
  p << x, y;
  return p;
}

Rational cross(const AffinePoint& u, const AffinePoint& v) { return u(0) * v(1) - u(1) * v(0); }
Rational dot(const AffinePoint& u, const AffinePoint& v) { return u(0) * v(0) + u(1) * v(1); }

std::string affine_string(const AffinePoint& p) {
  return "(" + to_string(p(0)) + ", " + to_string(p(1)) + ")";
}

bool lex_less(const AffinePoint& a, const AffinePoint& b) {
  return a(0) < b(0) || (a(0) == b(0) && a(1) < b(1));
}

}  // namespace

TropLine::TropLine(TropPoint coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != 3) throw DimensionError("TropLine: expected 3 coefficients");
}

AffinePoint TropLine::vertex() const {
  const Rational& a = coeffs_[0].value();
  const Rational& b = coeffs_[1].value();
  const Rational& c = coeffs_[2].value();
  return affine(c - a, c - b);
}

const std::array<AffinePoint, 3>& TropLine::ray_directions() {
  static const std::array<AffinePoint, 3> dirs = {affine(1, 1), affine(0, -1), affine(-1, 0)};
  return dirs;
}

std::string to_string(const TropLine& l) { return to_string(l.coeffs()); }

bool point_on_line(const TropPoint& p, const TropLine& l) {
  if (p.size() != 3) throw DimensionError("point_on_line: expected a plane point");
  return attains_max_twice(l.coeffs().coords(), p);
}

bool point_on_line(const AffinePoint& p, const TropLine& l) {
  return point_on_line(TropPoint{p(0), p(1), Rational(0)}, l);
}

bool Cell::contains(const AffinePoint& p) const {
  switch (kind) {
    case Kind::Point:
      return p == start;
    case Kind::Ray: {
      const AffinePoint d = p - start;
      return cross(d, direction) == 0 && dot(d, direction) >= 0;
    }
    case Kind::Segment: {
      const AffinePoint d = p - start;
      const AffinePoint e = end - start;
      return cross(d, e) == 0 && dot(d, e) >= 0 && dot(d, e) <= dot(e, e);
    }
  }
  return false;
}

bool operator==(const Cell& a, const Cell& b) {
  if (a.kind != b.kind || a.start != b.start) return false;
  switch (a.kind) {
    case Cell::Kind::Point:
      return true;
    case Cell::Kind::Segment:
      return a.end == b.end;
    case Cell::Kind::Ray:
      return a.direction == b.direction;
  }
  return false;
}

std::string to_string(const Cell& c) {
  switch (c.kind) {
    case Cell::Kind::Point:
      return "point " + affine_string(c.start);
    case Cell::Kind::Segment:
      return "segment " + affine_string(c.start) + " -- " + affine_string(c.end);
    case Cell::Kind::Ray:
      return "ray " + affine_string(c.start) + " dir " + affine_string(c.direction);
  }
  return {};
}

std::vector<Cell> line_intersection_cells(const TropLine& l1, const TropLine& l2) {
  // No two ray directions are opposite, so every ray/ray intersection is
  // empty, a point, or a ray; bounded segments never arise.
  const auto& dirs = TropLine::ray_directions();
  const AffinePoint v1 = l1.vertex();
  const AffinePoint v2 = l2.vertex();
  std::vector<Cell> rays, points;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      const AffinePoint& d1 = dirs[i];
      const AffinePoint& d2 = dirs[j];
      const AffinePoint offset = v2 - v1;
      if (i == j) {
        if (cross(offset, d1) != 0) continue;
        // Collinear rays with one direction: the later origin starts the overlap.
        const AffinePoint origin = dot(offset, d1) >= 0 ? v2 : v1;
        Cell c{Cell::Kind::Ray, origin, AffinePoint::Zero(), d1};
        if (std::find(rays.begin(), rays.end(), c) == rays.end()) rays.push_back(c);
        continue;
      }
      // v1 + s d1 = v2 + u d2
      const Rational det = cross(d1, d2);
      const Rational s = cross(offset, d2) / det;
      const Rational u = cross(offset, d1) / det;
      if (s >= 0 && u >= 0) {
        points.push_back({Cell::Kind::Point, AffinePoint(v1 + s * d1), AffinePoint::Zero(),
                          AffinePoint::Zero()});
      }
    }
  }
  // Nested collinear rays with one direction: keep the outermost.
  std::vector<Cell> cells;
  for (const Cell& r : rays) {
    const bool covered = std::any_of(rays.begin(), rays.end(), [&](const Cell& other) {
      return !(other == r) && other.direction == r.direction && other.contains(r.start);
    });
    if (!covered) cells.push_back(r);
  }
  std::sort(points.begin(), points.end(),
            [](const Cell& a, const Cell& b) { return lex_less(a.start, b.start); });
  for (const Cell& p : points) {
    const bool covered =
        std::any_of(cells.begin(), cells.end(), [&](const Cell& c) { return c.contains(p.start); });
    if (!covered) cells.push_back(p);
  }
  return cells;
}

std::optional<TropPoint> common_point_witness(std::span<const TropLine> lines) {
  if (lines.empty()) throw DimensionError("common_point_witness: need at least one line");
  // Term t of a line, in the chart z = 0, is coeff_t . (x, y) + constant_t.
  const std::array<Vector<Rational>, 3> slope = [] {
    std::array<Vector<Rational>, 3> s;
    for (auto& v : s) v = Vector<Rational>::Zero(2);
    s[0](0) = 1;
    s[1](1) = 1;
    return s;
  }();
  static constexpr int kPairs[3][3] = {{0, 1, 2}, {0, 2, 1}, {1, 2, 0}};  // tie, tie, dominated

  std::optional<AffinePoint> best;
  std::vector<int> choice(lines.size(), 0);
  for (;;) {
    std::vector<LinearConstraint> system;
    for (std::size_t k = 0; k < lines.size(); ++k) {
      const TropPoint& c = lines[k].coeffs();
      const int p = kPairs[choice[k]][0];
      const int q = kPairs[choice[k]][1];
      const int r = kPairs[choice[k]][2];
      add_equality(system, slope[p] - slope[q], c[q].value() - c[p].value());
      system.push_back({slope[r] - slope[p], c[p].value() - c[r].value()});
      system.push_back({slope[r] - slope[q], c[q].value() - c[r].value()});
    }
    if (auto x = find_feasible_point(system, 2)) {
      const AffinePoint candidate = affine((*x)(0), (*x)(1));
      if (!best || lex_less(candidate, *best)) best = candidate;
    }
    std::size_t k = 0;
    while (k < choice.size() && ++choice[k] == 3) choice[k++] = 0;
    if (k == choice.size()) break;
  }
  if (!best) return std::nullopt;
  return TropPoint{(*best)(0), (*best)(1), Rational(0)};
}

PappusElements pappus_construct(std::span<const TropPoint, 5> pts) {
  PappusElements e;
  for (std::size_t i = 0; i < 5; ++i) {
    if (pts[i].size() != 3) throw DimensionError("pappus_construct: expected plane points");
    e.emplace(std::to_string(i + 1), pts[i]);
  }
  auto at = [&](const char* name) -> const TropPoint& { return e.find(name)->second; };
  auto put = [&](const char* name, const char* x, const char* y) {
    e.insert_or_assign(name, cross_product(at(x), at(y)));
  };
  put("a", "1", "4");
  put("b", "2", "4");
  put("c", "3", "4");
  put("a'", "1", "5");
  put("b'", "2", "5");
  put("c'", "3", "5");
  put("6", "b", "c'");
  put("7", "a'", "c");
  put("8", "a", "b'");
  put("a''", "1", "6");
  put("b''", "2", "7");
  put("c''", "3", "8");
  return e;
}

PappusResult pappus_verify(std::span<const TropPoint, 5> points) {
  PappusResult result;
  result.elements = pappus_construct(points);
  const std::array<TropLine, 3> lines = {TropLine(result.elements.find("a''")->second),
                                         TropLine(result.elements.find("b''")->second),
                                         TropLine(result.elements.find("c''")->second)};
  result.witness = common_point_witness(lines);
  return result;
}

ConstructionProgram pappus_program() {
  ConstructionProgram prog(2);
  for (const char* id : {"1", "2", "3", "4", "5"}) prog.add_input(id, ElementKind::Point);
  prog.add_join("a", {"1", "4"});
  prog.add_join("b", {"2", "4"});
  prog.add_join("c", {"3", "4"});
  prog.add_join("a'", {"1", "5"});
  prog.add_join("b'", {"2", "5"});
  prog.add_join("c'", {"3", "5"});
  prog.add_meet("6", {"b", "c'"});
  prog.add_meet("7", {"a'", "c"});
  prog.add_meet("8", {"a", "b'"});
  prog.add_join("a''", {"1", "6"});
  prog.add_join("b''", {"2", "7"});
  prog.add_join("c''", {"3", "8"});
  for (const char* id : {"a''", "b''", "c''"}) prog.add_output(id);
  return prog;
}

LiftedCommonPoint lifted_common_point_check(std::span<const PuiseuxVector> lines,
                                            const PuiseuxVector& point) {
  if (lines.empty()) throw std::invalid_argument("lifted_common_point_check: no lines");
  if (point.size() != 3) throw DimensionError("lifted_common_point_check: expected a plane point");
  std::vector<TropLine> tropical;
  for (const PuiseuxVector& l : lines) {
    if (l.size() != 3) throw DimensionError("lifted_common_point_check: expected 3 coefficients");
    for (Index j = 0; j < 3; ++j) {
      if (l(j).is_zero()) throw std::invalid_argument("lifted_common_point_check: zero coefficient");
    }
    if (!(l(0) * point(0) + l(1) * point(1) + l(2) * point(2)).is_zero()) {
      throw std::invalid_argument("lifted_common_point_check: certificate is not on every line");
    }
    tropical.emplace_back(tropicalize(l));
  }

  std::vector<Index> zeros;
  for (Index j = 0; j < 3; ++j) {
    if (point(j).is_zero()) zeros.push_back(j);
  }
  TropPoint derived;
  if (zeros.empty()) {
    derived = tropicalize(point);
  } else if (zeros.size() == 1) {
    // Reorder coordinates to (zero, i, j): the point is [0 : a : b] and in the
    // chart where the last coordinate is 1 every line reads X = p (Y - a/b).
    // Moving X to a series x0 of large enough order keeps Y of order o(a/b).
    const Index k = zeros.front();
    const Index i = (k + 1) % 3 < (k + 2) % 3 ? (k + 1) % 3 : (k + 2) % 3;
    const Index j = 3 - k - i;
    const Rational order_ratio = point(i).order() - point(j).order();
    Rational max_slope_order = lines[0](i).order() - lines[0](k).order();
    for (const PuiseuxVector& l : lines) {
      max_slope_order = std::max(max_slope_order, Rational(l(i).order() - l(k).order()));
    }
    const Rational x0_order = order_ratio + max_slope_order + 1;
    TropVector coords(3);
    coords(k) = TropScalar(-x0_order);
    coords(i) = TropScalar(-order_ratio);
    coords(j) = TropScalar(0);
    derived = TropPoint(std::move(coords)).canonical();
  } else {
    throw std::invalid_argument(
        "lifted_common_point_check: a coordinate point cannot lie on lines with nonzero "
        "coefficients");
  }

  for (const TropLine& l : tropical) {
    if (!point_on_line(derived, l)) {
      throw std::logic_error("lifted_common_point_check: derived point " + to_string(derived) +
                             " misses line " + to_string(l));
    }
  }
  auto witness = common_point_witness(tropical);
  if (!witness) throw std::logic_error("lifted_common_point_check: tropical lines share no point");
  return {*witness, derived};
}

}  // namespace tropcon
