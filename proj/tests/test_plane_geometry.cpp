#include <doctest.h>

#include <array>

#include "support/generators.hpp"
#include "tropcon/errors.hpp"
#include "tropcon/plane_geometry.hpp"

using namespace tropcon;
using namespace tropcon::testing;

namespace {

AffinePoint pt(const Rational& x, const Rational& y) {
  AffinePoint p;
  p << x, y;
  return p;
}

TropLine line(long a, long b, long c) { return TropLine(TropPoint{Rational(a), Rational(b), Rational(c)}); }

TropLine random_line(Rng& rng, long range) { return TropLine(random_trop_point(rng, 3, range)); }

// Half-integer grid points of [-r, r]^2.
template <class F>
void for_grid(long r, F&& f) {
  for (long i = -2 * r; i <= 2 * r; ++i) {
    for (long j = -2 * r; j <= 2 * r; ++j) f(pt(Rational(i, 2), Rational(j, 2)));
  }
}

}  // namespace

TEST_CASE("vertex and rays") {
  const TropLine l = line(1, 2, 4);
  CHECK(l.vertex() == pt(3, 2));
  CHECK(point_on_line(pt(3, 2), l));
  CHECK(point_on_line(pt(10, 9), l));
  CHECK(point_on_line(pt(3, -100), l));
  CHECK(point_on_line(pt(-7, 2), l));
  CHECK_FALSE(point_on_line(pt(0, 0), l));
  CHECK_FALSE(point_on_line(pt(4, 2), l));
  CHECK_THROWS_AS(TropLine(TropPoint{Rational(0), Rational(0)}), DimensionError);
}

TEST_CASE("intersection cells") {
  SUBCASE("generic lines meet in one point") {
    const auto cells = line_intersection_cells(line(0, 0, 0), line(-2, -1, 0));
    REQUIRE(cells.size() == 1);
    CHECK(cells[0].kind == Cell::Kind::Point);
    CHECK(cells[0].start == pt(1, 1));
  }
  SUBCASE("lines sharing a ray") {
    const auto cells = line_intersection_cells(line(2, -3, 0), line(-4, -3, 0));
    REQUIRE(cells.size() == 1);
    CHECK(cells[0].kind == Cell::Kind::Ray);
    CHECK(cells[0].start == pt(-2, 3));
    CHECK(cells[0].direction == pt(-1, 0));
    CHECK(to_string(cells[0]) == "ray (-2, 3) dir (-1, 0)");
  }
  SUBCASE("equal lines") {
    CHECK(line_intersection_cells(line(0, 0, 0), line(0, 0, 0)).size() == 3);
  }
}

TEST_CASE("intersection cells agree with grid sampling") {
  Rng rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const TropLine l1 = random_line(rng, 3);
    const TropLine l2 = random_line(rng, 3);
    const auto cells = line_intersection_cells(l1, l2);
    CHECK_FALSE(cells.empty());
    for (const Cell& c : cells) {
      CHECK(point_on_line(c.start, l1));
      CHECK(point_on_line(c.start, l2));
    }
    for_grid(8, [&](const AffinePoint& p) {
      const bool on_both = point_on_line(p, l1) && point_on_line(p, l2);
      bool in_cell = false;
      for (const Cell& c : cells) in_cell = in_cell || c.contains(p);
      CHECK(on_both == in_cell);
    });
  }
}

TEST_CASE("common point witness") {
  const std::array<TropLine, 2> pair = {line(0, 0, 0), line(-2, -1, 0)};
  CHECK(common_point_witness(pair) == TropPoint{Rational(1), Rational(1), Rational(0)});
  // Shared west ray: the lexicographically least choice is unbounded, so the
  // selection rule lands on some point of the ray.
  const std::array<TropLine, 2> shared = {line(2, -3, 0), line(-4, -3, 0)};
  const auto w = common_point_witness(shared);
  REQUIRE(w.has_value());
  CHECK(w->affine()(1) == 3);
  CHECK(w->affine()(0) <= -2);
  // Vertices (0,0), (2,1), (0,3): the first two lines meet only at (1,1).
  const std::array<TropLine, 3> triangle = {line(0, 0, 0), line(-2, -1, 0), line(0, -3, 0)};
  CHECK_FALSE(common_point_witness(triangle).has_value());
  CHECK_THROWS_AS(common_point_witness(std::span<const TropLine>()), DimensionError);

  Rng rng(37);
  for (int trial = 0; trial < 100; ++trial) {
    const int k = static_cast<int>(random_int(rng, 1, 4));
    std::vector<TropLine> lines;
    for (int i = 0; i < k; ++i) lines.push_back(random_line(rng, 2));
    const auto w = common_point_witness(lines);
    if (w) {
      for (const TropLine& l : lines) CHECK(point_on_line(*w, l));
    } else {
      for_grid(6, [&](const AffinePoint& p) {
        bool all = true;
        for (const TropLine& l : lines) all = all && point_on_line(p, l);
        CHECK_FALSE(all);
      });
    }
    if (k == 2) CHECK(w.has_value());  // two tropical lines always meet
  }
}

TEST_CASE("witness exists for lines through a planted point") {
  Rng rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const AffinePoint p = pt(random_rational(rng, 5, 2), random_rational(rng, 5, 2));
    std::vector<TropLine> lines;
    const int k = static_cast<int>(random_int(rng, 2, 5));
    while (static_cast<int>(lines.size()) < k) {
      const TropLine l = random_line(rng, 5);
      if (point_on_line(p, l)) {
        lines.push_back(l);
        continue;
      }
      // Shift the line so its vertex moves onto p along a random ray.
      const AffinePoint& d = TropLine::ray_directions()[static_cast<std::size_t>(random_int(rng, 0, 2))];
      const AffinePoint v = p - Rational(random_int(rng, 0, 3)) * d;
      lines.push_back(TropLine(TropPoint{-v(0), -v(1), Rational(0)}));
    }
    for (const TropLine& l : lines) REQUIRE(point_on_line(p, l));
    const auto w = common_point_witness(lines);
    REQUIRE(w.has_value());
    for (const TropLine& l : lines) CHECK(point_on_line(*w, l));
  }
}

TEST_CASE("pappus chain") {
  const std::array<TropPoint, 5> pts = {plane_point(0, 0), plane_point(4, 1), plane_point(1, 5),
                                        plane_point(6, 2), plane_point(2, 7)};
  const PappusResult r = pappus_verify(pts);
  REQUIRE(r.witness.has_value());
  CHECK(r.elements.size() == 17);
  for (const char* id : {"a''", "b''", "c''"}) {
    CHECK(point_on_line(*r.witness, TropLine(r.elements.at(id))));
  }
  // Incidences built by the chain.
  const auto on = [&](const char* p, const char* l) {
    return point_on_line(r.elements.at(p), TropLine(r.elements.at(l)));
  };
  CHECK(on("1", "a"));
  CHECK(on("4", "a"));
  CHECK(on("6", "b"));
  CHECK(on("6", "c'"));
  CHECK(on("8", "c''"));
  const TropicalBindings in{{"1", pts[0]}, {"2", pts[1]}, {"3", pts[2]}, {"4", pts[3]}, {"5", pts[4]}};
  const TropicalBindings run = execute_tropical(pappus_program(), in);
  for (const std::string& id : kPappusElements) CHECK(run.at(id) == r.elements.at(id));
}

TEST_CASE("pappus with all points equal") {
  std::array<TropPoint, 5> pts;
  pts.fill(plane_point(3, -1));
  CHECK(pappus_verify(pts).witness.has_value());
}

namespace {
PuiseuxVector pv(std::initializer_list<const char*> xs) {
  PuiseuxVector v(static_cast<Index>(xs.size()));
  Index i = 0;
  for (const char* x : xs) v(i++) = parse_puiseux(x);
  return v;
}
}  // namespace

TEST_CASE("lifted common point in the torus") {
  Rng rng(43);
  const PuiseuxVector p = pv({"2*t^-1", "1*t^1 + 3*t^2", "-1"});
  const auto lines = random_lines_through(rng, p, 3);
  const LiftedCommonPoint r = lifted_common_point_check(lines, p);
  CHECK(r.derived == tropicalize(p));
  for (const PuiseuxVector& l : lines) {
    CHECK(point_on_line(r.witness, TropLine(tropicalize(l))));
    CHECK(point_on_line(r.derived, TropLine(tropicalize(l))));
  }
}

TEST_CASE("lifted common point with a zero coordinate") {
  Rng rng(47);
  for (Index k = 0; k < 3; ++k) {
    PuiseuxVector p = pv({"1*t^-2 + 1", "5*t^1", "-3*t^3"});
    p(k) = PuiseuxPoly();
    const auto lines = random_lines_through(rng, p, 4);
    const LiftedCommonPoint r = lifted_common_point_check(lines, p);
    for (const PuiseuxVector& l : lines) {
      CHECK(point_on_line(r.witness, TropLine(tropicalize(l))));
      CHECK(point_on_line(r.derived, TropLine(tropicalize(l))));
    }
  }
}

TEST_CASE("lifted common point rejects bad certificates") {
  const PuiseuxVector p = pv({"1", "1", "1"});
  std::vector<PuiseuxVector> lines{pv({"1", "1", "-2"})};
  CHECK_NOTHROW(lifted_common_point_check(lines, p));
  lines.push_back(pv({"1", "1", "1"}));
  CHECK_THROWS_AS(lifted_common_point_check(lines, p), std::invalid_argument);
  lines = {pv({"1", "0", "-1"})};
  CHECK_THROWS_AS(lifted_common_point_check(lines, p), std::invalid_argument);
  CHECK_THROWS_AS(lifted_common_point_check({}, p), std::invalid_argument);
}
