#include <doctest.h>

#include "support/generators.hpp"
#include "tropcon/construction_file.hpp"

using namespace tropcon;
using namespace tropcon::testing;

namespace {

void check_same(const ConstructionFile& a, const ConstructionFile& b) {
  CHECK(a.program == b.program);
  REQUIRE(a.inputs.size() == b.inputs.size());
  for (const auto& [id, p] : a.inputs) CHECK(to_raw_string(b.inputs.at(id)) == to_raw_string(p));
}

int error_line(const char* text) {
  try {
    parse_construction(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_CASE("parse the cycle example") {
  const ConstructionFile f = parse_construction(R"(# comment
point a = [0:0:0]
point b = [-2 : 1 : 0]   # trailing comment
point c = [-1:3:0]

line l1 = join a b
line l2 = join a c
point p = meet l1 l2
output p
)");
  CHECK(f.program.dimension() == 2);
  CHECK(f.program.elements().size() == 6);
  CHECK(f.program.element("p").step == StepKind::Meet);
  CHECK(f.program.outputs() == std::vector<std::size_t>{5});
  CHECK(f.inputs.at("b") == plane_point(-2, 1));
  CHECK(execute_tropical(f.program, f.inputs).at("p") == plane_point(0, 1));
}

TEST_CASE("rationals, input lines, primes and higher dimension") {
  const ConstructionFile f = parse_construction(
      "line f = [1/2:-3:0.25]\nline f' = [0:0:0]\npoint q_1 = meet f f'\n");
  CHECK(f.inputs.at("f") == TropPoint{Rational(1, 2), Rational(-3), Rational(1, 4)});
  CHECK(f.program.effective_outputs().size() == 3);
  const ConstructionFile g = parse_construction(
      "point a = [0:0:0:0]\npoint b = [1:2:3:0]\npoint c = [5:0:-1:0]\nline h = join a b c\n");
  CHECK(g.program.dimension() == 3);
  CHECK(execute_tropical(g.program, g.inputs).at("h").size() == 4);
}

TEST_CASE("errors carry line numbers") {
  CHECK(error_line("point a = [0:0:0]\npoint b = [0:0]\n") == 2);
  CHECK(error_line("point a = [0:x:0]\n") == 1);
  CHECK(error_line("point a = [0:0:0]\npoint b = [1:0:0]\nline l = join a c\n") == 3);
  CHECK(error_line("point a = [0:0:0]\npoint b = [1:0:0]\npoint l = join a b\n") == 3);
  CHECK(error_line("point a = [0:0:0]\npoint a = [1:0:0]\n") == 2);
  CHECK(error_line("\n\nfrobnicate\n") == 3);
  CHECK(error_line("point a b = [0:0:0]\n") == 1);
  CHECK(error_line("point a = [0:0:0]\noutput\n") == 2);
  CHECK(error_line("point a = [0:0:0]\noutput z\n") == 2);
  CHECK(error_line("point a = [0:0:0]\npoint b = [1:0:0]\nline l = join a b b\n") == 3);
}

TEST_CASE("render round-trips") {
  const char* text = "point a = [0:0:0]\nline f = [1/2:-3:7]\npoint b = [3:4:3]\nline l = join a b\n"
                     "point q = meet l f\noutput q l\n";
  const ConstructionFile f = parse_construction(text);
  CHECK(render_construction(f) == text);
  Rng rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const ConstructionFile g = random_tree_program(rng, trial % 3 == 0 ? 3 : 2, 8, 3);
    check_same(g, parse_construction(render_construction(g)));
  }
}
